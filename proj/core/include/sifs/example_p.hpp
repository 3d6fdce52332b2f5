#pragma once

// Closed forms for the shear family R = [[2,0],[1,2]],
// B = {(0,0),(1,0),(0,p),(1,p)}, L = {(0,0),(1,0),(0,1),(1,1)} with p odd:
// the lower-envelope function g of the attractor, its jump structure, the
// base-2 staircase h indexing the generated spectra, the closed-form Fourier
// transform, row-sum and harmonic-sum identities, doubling orbits, and the
// non-cycle minimal invariant segments.

#include <complex>
#include <vector>

#include "sifs/cycles.hpp"
#include "sifs/triple.hpp"

namespace sifs {
namespace example_p {

struct ExampleParams {
    int p = 3;
    static ExampleParams make(int p); // validates p odd, p >= 1
};

HadamardTriple make_triple(int p);

struct DyadicExpansion {
    double x = 0.0;
    std::vector<int> bits; // canonical: greedy, terminating expansions end in 0s
    bool terminating = false;
};

DyadicExpansion dyadic_expansion(double x, int bits);

// g(x) = -sum_n (n/2) x_n / 2^n over the canonical binary expansion,
// truncated at `bits` digits (tail below g_tail_bound(bits)).
double g(double x, int bits = 60);
// Left limit: the all-ones expansion at dyadic rationals, including the
// closed-form tail of the trailing ones; equals g elsewhere.
double g_left(double x, int bits = 60);
double g_tail_bound(int bits);

// Exact values at rational arguments via the eventually periodic digit
// stream of x.
Rat g_exact(const Rat& x);
Rat g_left_exact(const Rat& x);

// Jump of g at the dyadic k/2^n (k odd, 0 < k < 2^n): exactly 2^{-n}.
Rat jump(long long k, int n);

// Integer staircase: h(k) from the base-2 digits of k (two's-complement
// style representation for k < 0); satisfies 2 h(n) + n = h(2n + j) exactly
// for j in {0,1}.
long long h_int(long long k);

enum class ExampleCycle { k00, k10, k01, kM11 }; // labelled by cycle point
ExampleCycle cycle_id_of(const ExtremeCycle& c);

// Membership of an integer point in the generated set Lambda(C), by the
// sign/staircase predicates.
bool lambda_member(long long t1, long long t2, ExampleCycle c);

// Fourier transform of the invariant measure:
// I(t1,t2) * (e^{2 pi i p t2} - 1) / (2 pi i p t2), the vertical factor by
// its entire form, I by the self-similar recursion
// I(t1,t2) = (1 + e^{2 pi i s})/2 * I(s, t2/2) with s = t1/2 - t2/4.
std::complex<double> mu_hat_closed(int p, double t1, double t2, int depth = 50);

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double defect = 0.0;
};

// Row sum over integer shifts of t1 against sin^2(p pi t2)/(p pi t2)^2.
IdentityCheck row_sum_check(int p, double t1, double t2, int n_range = 200,
                            int mu_depth = 50);

struct HarmonicSumCheck {
    double per_cycle[4] = {0, 0, 0, 0}; // k00, k10, k01, kM11 order
    double lhs = 0.0;                   // sum of the four truncated sums
    double rhs = 0.0;                   // (sin p pi t2 / (p sin pi t2))^2
    double defect = 0.0;
};

// Completeness sums over the four predicate-truncated generated sets inside
// the Euclidean ball of the given radius.
HarmonicSumCheck harmonic_sum_check(int p, double t1, double t2, double radius = 40.0,
                                    int mu_depth = 50);

// Split over the upper half lattice: h_{k00} + h_{k10} against
// sin^2(p pi t2)/(p pi)^2 * zeta2(t2).
IdentityCheck zeta_split_check(int p, double t1, double t2, double radius = 40.0,
                               int mu_depth = 50);

// (sin(p pi t) / (p sin(pi t)))^2, entire in t (value 1 at integers).
double sin_ratio_sq(int p, double t);
// The same function for p = 3 as a trigonometric polynomial.
double sin_ratio_sq_trig3(double t);
// Hurwitz-type zeta: sum_{n>=0} 1/(t+n)^2, direct terms plus integral tail.
double zeta2(double t, int terms = 10000);

// Orbits of x -> 2x mod p on {1, ..., p-1}, listed from their smallest
// element in doubling order, sorted by smallest element.
std::vector<std::vector<int>> doubling_orbits(int p);

struct Segment {
    Rat height; // a/p
    Rat lo;     // g(a/p)
    Rat hi;     // g(a/p) + 1
};

// Horizontal segments of the non-cycle invariant set attached to an orbit.
std::vector<Segment> invariant_set_m(int p, const std::vector<int>& orbit);

// Harmonic function of the projection onto the p = 3 invariant-segment
// subspace: 1 - (1 - (4/3) sin^2(pi t2))^2. Throws kUnsupportedParameter
// for other p.
double h_q(int p, double t2);

struct DifferenceQuotientWitness {
    Rat x;
    Rat y;
    Rat quotient; // (g(y) - g(x)) / (y - x), exact
};

// One witness per dyadic interval of length 2^{-n}: a pair straddling the
// jump at the interval midpoint, with |quotient| > 1/4.
std::vector<DifferenceQuotientWitness> nowhere_diff_witness(int n);

} // namespace example_p
} // namespace sifs
