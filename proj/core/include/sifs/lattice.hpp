#pragma once

#include "sifs/ratmath.hpp"

namespace sifs {

// Full-rank rational lattice in R^d. Canonical representation: an integer
// column Hermite normal form H and a positive denominator s, the lattice
// being generated by the columns of H/s with gcd(content(H), s) = 1.
// Equality of canonical forms is equality of lattices.
class LatticeBasis {
public:
    LatticeBasis() = default;

    // Lattice generated by the columns of g (must have full row rank).
    static LatticeBasis from_generators(const RatMat& g);
    static LatticeBasis from_generators(const IntMat& g);
    // Z^d.
    static LatticeBasis standard(int d);

    int dim() const { return h_.rows; }
    // Basis matrix H/s, columns generate the lattice.
    RatMat basis() const;
    const IntMat& hnf() const { return h_; }
    const Int& denom() const { return s_; }

    bool contains(const RatVec& x) const;
    bool contains_lattice(const LatticeBasis& other) const;
    // Dual lattice {y : v.y in Z for every lattice vector v}.
    LatticeBasis dual() const;

    Rat determinant() const;

    bool operator==(const LatticeBasis& o) const { return s_ == o.s_ && h_ == o.h_; }
    bool operator!=(const LatticeBasis& o) const { return !(*this == o); }

private:
    IntMat h_;    // d x d column HNF
    Int s_ = 1;   // scale denominator
    RatMat inv_;  // cached inverse of H/s for membership tests
};

} // namespace sifs
