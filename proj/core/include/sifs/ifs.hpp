#pragma once

// Forward machinery for both iterated function systems attached to a triple:
// contraction maps tau, attractor point clouds, the normalized exponential
// sum chi_B, its cocycle powers, the Fourier transform of the invariant
// measure as an infinite product, and the QMF normalization identity.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "sifs/triple.hpp"

namespace sifs {

// One of the two contraction families: x -> R^{-1}(x + b) on the B side,
// x -> (R^T)^{-1}(x + l) on the L side. Stores the exact rational inverse;
// the constructor asserts inverse * matrix == I.
struct MapFamily {
    DigitSide side = DigitSide::kB;
    RatMat inv;                    // R^{-1} or (R^T)^{-1}
    IntMat forward;                // R or R^T
    std::vector<IntVec> digits;

    static MapFamily b_side(const HadamardTriple& t);
    static MapFamily l_side(const HadamardTriple& t);

    RatVec tau(const RatVec& x, int digit_index) const;
    std::vector<double> tau(const std::vector<double>& x, int digit_index) const;
    // Inverse-direction map sigma_l(x) = R^T x + l (L side only).
    RatVec sigma(const RatVec& x, int digit_index) const;
};

struct PointCloud {
    std::vector<RatVec> points; // sorted lex, distinct

    size_t size() const { return points.size(); }
    bool contains(const RatVec& x) const;
};

// All depth-n digit sums sum_{k=1..n} M^{-k} d_k, exactly; depth 0 is {0}.
// Throws kCapExceeded when N^n exceeds cap.
PointCloud attractor_points(const MapFamily& family, int depth,
                            std::int64_t cap = 1000000);

// Seeded chaos-game sampling of the attractor: random digit choices,
// burn-in discarded, floating output.
std::vector<std::vector<double>> chaos_game(const MapFamily& family, int samples,
                                            std::uint64_t seed, int burn_in = 64);

// chi_B(x) = (1/N) sum_b e^{2 pi i b.x}.
std::complex<double> chi_b(const HadamardTriple& t, const std::vector<double>& x);
std::complex<double> chi_b(const HadamardTriple& t, const RatVec& x);
// Fractional parts of the exponents b.x, one per digit; the exact substrate
// for the two evaluations above and for the extremeness test.
RatVec chi_exponents(const HadamardTriple& t, const RatVec& x);
// |chi_B(x)| = 1, decided exactly: every b.x is an integer.
bool is_extreme_point(const HadamardTriple& t, const RatVec& x);

// chi_B(x) chi_B(R^T x) ... chi_B((R^T)^{n-1} x).
std::complex<double> chi_b_pow(const HadamardTriple& t, const std::vector<double>& x, int n);

struct MuHatResult {
    std::complex<double> value{1.0, 0.0};
    double tail_bound = 0.0; // first-order bound 2 pi max|b| * |(R^T)^{-M} x|
    int depth_used = 0;
};

// Truncated infinite product prod_{n=1..M} chi_B((R^T)^{-n} x); stops early
// once the argument norm falls below 1e-14.
MuHatResult mu_hat(const HadamardTriple& t, const std::vector<double>& x, int depth = 50);
std::complex<double> mu_hat_value(const HadamardTriple& t, const std::vector<double>& x,
                                  int depth = 50);

// | sum_l |chi_B((R^T)^{-1}(x+l))|^2 - 1 |.
double qmf_defect(const HadamardTriple& t, const std::vector<double>& x);

} // namespace sifs
