#pragma once

// Exact enumeration of B-extreme L-cycles. All cycle points lie on the dual
// lattice of the digit span and inside a ball that the dual contractions map
// into itself; candidates are enumerated there exactly and the transition
// graph (at most one extreme successor per point) is walked to completion.

#include <cstdint>
#include <string>
#include <vector>

#include "sifs/ifs.hpp"
#include "sifs/triple.hpp"

namespace sifs {

struct ContractionInfo {
    double c = 0.0;                // contraction factor of (R^T)^{-1} in the norm below
    std::vector<double> norm;      // d x d positive definite matrix, row-major
    bool euclidean = true;

    double norm_of(const std::vector<double>& x) const;
    double norm_of(const RatVec& x) const;
};

// A norm in which every dual-side map is a c-contraction with c < 1. Uses the
// Euclidean norm when the operator norm of (R^T)^{-1} is already < 1,
// otherwise accumulates sum_k ((R^T)^{-k})^T (R^T)^{-k} until the induced
// norm drops below 1. Throws kNotExpansive when R is not expansive.
ContractionInfo contraction_constant(const HadamardTriple& t);

struct SearchRegion {
    Rat radius;           // rounded up so that union_l tau_l(Ball) stays inside
    double radius_d = 0.0;
    ContractionInfo metric;
};

SearchRegion make_search_region(const HadamardTriple& t);

// All dual-lattice points within the region ball that pass the exact
// extremeness test (b.x integral for every b). Sorted lex.
std::vector<RatVec> candidate_points(const HadamardTriple& t, const SearchRegion& region,
                                     std::int64_t cap = 200000);

struct ExtremeCycle {
    std::vector<RatVec> points;  // x_0, ..., x_{p-1}, tau_{w_i}(x_i) = x_{i+1 mod p}
    std::vector<int> word;       // digit indices into L, canonical rotation
    int length() const { return static_cast<int>(points.size()); }
    std::vector<IntVec> word_digits(const HadamardTriple& t) const;
};

// Rotates so the word is the lexicographically smallest rotation (digit
// indices in input order); points are rotated consistently.
ExtremeCycle canonical_rotation(ExtremeCycle c);

// Complete list of B-extreme L-cycles, sorted by (length, first point).
// Throws kNotRegular / kCapExceeded from the candidate stage.
std::vector<ExtremeCycle> find_extreme_cycles(const HadamardTriple& t,
                                              std::int64_t cap = 200000);

struct CycleCheck {
    bool ok = true;
    std::string reason;
};

// Re-checks every invariant exactly: closure tau_{w_i}(x_i) = x_{i+1},
// extremeness of each point, distinctness, canonical word rotation.
CycleCheck verify_cycle(const HadamardTriple& t, const ExtremeCycle& c);

// Invariant box for grid iteration: per-axis half-widths h with
// tau_l([-h,h]^d) inside the box for every l. Throws kBoxNotInvariant when
// the componentwise bound fails to verify.
std::vector<double> invariant_box(const HadamardTriple& t);

} // namespace sifs
