#pragma once

// Exact integer/rational linear algebra used throughout. All decisions that
// the library certifies (lattice membership, extremeness, cycle closure,
// nullspace dimensions) are made here in exact arithmetic; floating point is
// confined to evaluating complex exponentials and norms.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sifs/error.hpp"

namespace sifs {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Largest integer <= q.
Int rat_floor(const Rat& q);
// q - floor(q), in [0,1).
Rat rat_frac(const Rat& q);

bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less_int(const IntVec& a, const IntVec& b);

RatVec to_rat(const IntVec& v);
std::vector<double> to_double(const RatVec& v);
double norm2(const std::vector<double>& v);

Rat dot(const IntVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec neg(const RatVec& a);

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static IntMat identity(int n);

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    IntMat transpose() const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat mul(const IntMat& x, const IntMat& y);
IntVec mul(const IntMat& m, const IntVec& v);

struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a; // row-major

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static RatMat identity(int n);
    static RatMat from_int(const IntMat& m);

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    RatMat transpose() const;
    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

RatMat mul(const RatMat& x, const RatMat& y);
RatVec mul(const RatMat& m, const RatVec& v);
RatVec mul(const RatMat& m, const IntVec& v);

Rat det(const RatMat& m);
Int det(const IntMat& m);

// Gauss-Jordan inverse; throws kInvalidInput on singular input.
RatMat inverse(const RatMat& m);
// Solves m x = b for square m; throws kInvalidInput on singular input.
RatVec solve(const RatMat& m, const RatVec& b);

int rank(RatMat m);
// Basis of the right nullspace, one column per basis vector.
std::vector<RatVec> nullspace(RatMat m);

// Monic characteristic polynomial of a square integer matrix via
// Faddeev-LeVerrier; coefficient k of x^k, length rows+1.
std::vector<Int> char_poly(const IntMat& m);

// Column-style Hermite normal form of the lattice generated by the columns
// of g: echelon, positive pivots, entries left of a pivot reduced into
// [0, pivot). Columns of the result form a basis; rank may be < cols(g).
IntMat hnf_column_basis(const IntMat& g);

std::string rat_to_string(const Rat& q);
std::string vec_to_string(const RatVec& v);

} // namespace sifs
