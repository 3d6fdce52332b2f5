#pragma once

// Core domain types for an affine system (R, B, L): an expansive integer
// matrix R and two digit sets of equal cardinality with 0 in each. The
// operations here certify the standing hypotheses: expansiveness of R, the
// Hadamard (unitarity) property of the combined system, regularity of the
// digit span, and the dual lattice of that span.

#include <vector>

#include "sifs/lattice.hpp"
#include "sifs/ratmath.hpp"

namespace sifs {

enum class DigitSide { kB, kL };

struct DigitSet {
    DigitSide side = DigitSide::kB;
    std::vector<IntVec> vectors;

    // Validates: nonempty, all same dimension, zero vector present, distinct.
    static DigitSet make(DigitSide side, std::vector<IntVec> vectors);
    int size() const { return static_cast<int>(vectors.size()); }
};

struct HadamardTriple {
    IntMat R;
    DigitSet B;
    DigitSet L;
    int d = 0;
    int N = 0;

    // Validates shape: R square with nonzero determinant, #B = #L, digit
    // dimensions agree with R. Expansiveness is checked on demand by
    // expansiveness()/is_expansive, not at construction.
    static HadamardTriple make(IntMat R, std::vector<IntVec> B, std::vector<IntVec> L);
};

enum class Expansiveness { kExpansive, kNotExpansive, kIndeterminate };

// Classifies R by the roots of its characteristic polynomial, computed on
// the companion matrix. Roots within 1e-9 of the unit circle yield
// kIndeterminate rather than a guess.
Expansiveness expansiveness(const IntMat& R);
// True iff every eigenvalue has |lambda| > 1 with certified margin; throws
// kIndeterminate if any root is too close to the unit circle to decide.
bool is_expansive(const IntMat& R);

struct HadamardCheck {
    bool is_hadamard = false;
    double defect = 0.0; // max-norm of H*H - I
};

// Builds H = (1/sqrt(N)) (e^{2 pi i R^{-1} b . l}) with exact rational
// exponents and measures how far H is from unitary.
HadamardCheck check_hadamard(const HadamardTriple& t, double tol = 1e-12);

// Rank over Q of span{R^k b : b in B, k <= K}, with K grown until the span
// stabilizes (K <= d suffices).
int regularity_rank(const HadamardTriple& t);

// Z-span of {R^k b : b in B, k >= 0}, grown until the lattice stabilizes.
// Requires full rank; throws kNotRegular otherwise.
LatticeBasis digit_span_lattice(const HadamardTriple& t);

// Dual of digit_span_lattice: all x with beta . x integral for every beta in
// the span. Postconditions checked exactly: contains Z^d and is invariant
// under R^T. Throws kNotRegular when the rank is deficient.
LatticeBasis dual_lattice(const HadamardTriple& t);

} // namespace sifs
