#include "sifs/example_p.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sifs {
namespace example_p {

ExampleParams ExampleParams::make(int p) {
    if (p < 1 || p % 2 == 0) fail(ErrorCode::kInvalidInput, "p must be odd and >= 1");
    return {p};
}

HadamardTriple make_triple(int p) {
    ExampleParams::make(p);
    IntMat r(2, 2);
    r.at(0, 0) = 2; r.at(0, 1) = 0;
    r.at(1, 0) = 1; r.at(1, 1) = 2;
    std::vector<IntVec> b = {{0, 0}, {1, 0}, {0, p}, {1, p}};
    std::vector<IntVec> l = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    return HadamardTriple::make(std::move(r), std::move(b), std::move(l));
}

DyadicExpansion dyadic_expansion(double x, int bits) {
    if (x < 0.0 || x > 1.0) fail(ErrorCode::kOutOfRange, "x must lie in [0,1]");
    if (bits < 1 || bits > 63) fail(ErrorCode::kOutOfRange, "bits must lie in [1,63]");
    DyadicExpansion e;
    e.x = x;
    e.bits.reserve(bits);
    double r = x;
    for (int n = 0; n < bits; ++n) {
        r *= 2.0;
        int bit = r >= 1.0 ? 1 : 0;
        if (bit) r -= 1.0;
        e.bits.push_back(bit);
    }
    e.terminating = (r == 0.0);
    return e;
}

double g(double x, int bits) {
    DyadicExpansion e = dyadic_expansion(x, bits);
    double s = 0.0;
    double pow2 = 1.0;
    for (int n = 1; n <= bits; ++n) {
        pow2 *= 0.5;
        if (e.bits[n - 1]) s += 0.5 * n * pow2;
    }
    return -s;
}

double g_left(double x, int bits) {
    DyadicExpansion e = dyadic_expansion(x, bits);
    if (!e.terminating || x == 0.0) return g(x, bits);
    int last = 0;
    for (int n = 1; n <= bits; ++n)
        if (e.bits[n - 1]) last = n;
    if (last == 0) return g(x, bits); // x == 0 handled above; defensive
    // Digits below `last` unchanged, digit `last` cleared, all ones after.
    double s = 0.0;
    double pow2 = 1.0;
    for (int n = 1; n < last; ++n) {
        pow2 *= 0.5;
        if (e.bits[n - 1]) s += 0.5 * n * pow2;
    }
    // sum_{n > last} (n/2) 2^{-n} = (last + 2) / 2^{last+1}
    s += (last + 2) * std::ldexp(1.0, -(last + 1));
    return -s;
}

double g_tail_bound(int bits) { return (bits + 2) * std::ldexp(1.0, -(bits + 1)); }

namespace {

struct DigitStream {
    std::vector<int> digits; // d_1, d_2, ...
    int preperiod = 0;       // digits beyond this index repeat with period `period`
    int period = 0;          // 0 for terminating expansions
};

DigitStream rational_digits(const Rat& x) {
    DigitStream s;
    Int num = x.get_num(), den = x.get_den();
    std::map<Int, int> seen; // remainder -> number of digits already emitted
    Int r = num;
    while (true) {
        if (r == 0) { s.preperiod = static_cast<int>(s.digits.size()); return s; }
        auto it = seen.find(r);
        if (it != seen.end()) {
            s.preperiod = it->second;
            s.period = static_cast<int>(s.digits.size()) - it->second;
            return s;
        }
        seen.emplace(r, static_cast<int>(s.digits.size()));
        r *= 2;
        if (r >= den) {
            s.digits.push_back(1);
            r -= den;
        } else {
            s.digits.push_back(0);
        }
    }
}

Rat pow2_rat(int n) { // 2^{-n}
    Int d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), n);
    return make_rat(1, d);
}

// -sum over the weighted digits, with the periodic tail in closed form.
Rat g_from_digits(const DigitStream& s) {
    Rat total = 0;
    int n_fin = s.period == 0 ? static_cast<int>(s.digits.size()) : s.preperiod;
    for (int j = 1; j <= n_fin; ++j)
        if (s.digits[j - 1]) total += Rat(j) / 2 * pow2_rat(j);
    if (s.period > 0) {
        const int P = s.preperiod, T = s.period;
        Rat q = pow2_rat(T);
        Rat geo = 1 / (1 - q);          // sum q^j
        Rat geo2 = q / ((1 - q) * (1 - q)); // sum j q^j
        for (int m = 1; m <= T; ++m) {
            if (!s.digits[P + m - 1]) continue;
            // sum_j ((P+m) + jT)/2 * 2^{-(P+m+jT)}
            total += pow2_rat(P + m) / 2 * (Rat(P + m) * geo + Rat(T) * geo2);
        }
    }
    return total == 0 ? Rat(0) : Rat(-total);
}

} // namespace

Rat g_exact(const Rat& x) {
    if (x < 0 || x > 1) fail(ErrorCode::kOutOfRange, "x must lie in [0,1]");
    if (x == 1) return Rat(-1);
    return g_from_digits(rational_digits(x));
}

Rat g_left_exact(const Rat& x) {
    if (x < 0 || x > 1) fail(ErrorCode::kOutOfRange, "x must lie in [0,1]");
    if (x == 0) return Rat(0);
    if (x == 1) return Rat(-1);
    DigitStream s = rational_digits(x);
    if (s.period != 0) return g_from_digits(s);
    int last = static_cast<int>(s.digits.size()); // final digit is 1 by construction
    Rat total = 0;
    for (int j = 1; j < last; ++j)
        if (s.digits[j - 1]) total += Rat(j) / 2 * pow2_rat(j);
    // Trailing ones: sum_{j > last} (j/2) 2^{-j} = (last+2) 2^{-(last+1)}.
    total += Rat(last + 2) * pow2_rat(last + 1);
    return -total;
}

Rat jump(long long k, int n) {
    if (n < 1 || k <= 0 || k % 2 == 0) fail(ErrorCode::kBadDyadic, "need k odd, 0 < k < 2^n");
    if (n >= 62 || k >= (1LL << n)) fail(ErrorCode::kBadDyadic, "need k odd, 0 < k < 2^n");
    return pow2_rat(n);
}

long long h_int(long long k) {
    if (k > (1LL << 40) || k < -(1LL << 40))
        fail(ErrorCode::kOutOfRange, "staircase argument too large");
    if (k >= 0) {
        long long h = 0;
        for (int i = 1; (k >> i) != 0; ++i)
            if ((k >> i) & 1) h += static_cast<long long>(i) << (i - 1);
        return h;
    }
    int m = 1; // m = n+1 bits, smallest with k + 2^m >= 0
    while (k + (1LL << m) < 0) ++m;
    long long v = k + (1LL << m);
    int n = m - 1;
    long long h = (1LL << (n + 1)) - static_cast<long long>(n + 1) * (1LL << n);
    for (int i = 1; i <= n; ++i)
        if ((v >> i) & 1) h += static_cast<long long>(i) << (i - 1);
    return h;
}

ExampleCycle cycle_id_of(const ExtremeCycle& c) {
    if (c.length() != 1) fail(ErrorCode::kInvalidInput, "expected a singleton cycle");
    const RatVec& x = c.points[0];
    if (x[0] == 0 && x[1] == 0) return ExampleCycle::k00;
    if (x[0] == 1 && x[1] == 0) return ExampleCycle::k10;
    if (x[0] == 0 && x[1] == 1) return ExampleCycle::k01;
    if (x[0] == -1 && x[1] == 1) return ExampleCycle::kM11;
    fail(ErrorCode::kInvalidInput, "not one of the four singleton cycles");
}

bool lambda_member(long long t1, long long t2, ExampleCycle c) {
    long long h = h_int(t2);
    switch (c) {
        case ExampleCycle::k00: return t2 >= 0 && t1 >= h;
        case ExampleCycle::k10: return t2 >= 0 && t1 < h;
        case ExampleCycle::k01: return t2 < 0 && t1 < h;
        case ExampleCycle::kM11: return t2 < 0 && t1 >= h;
    }
    return false;
}

namespace {

// (e^{2 pi i y} - 1) / (2 pi i y) = e^{i pi y} sin(pi y)/(pi y), entire.
std::complex<double> boundary_factor(double y) {
    double z = M_PI * y;
    double sinc = std::abs(z) < 1e-6 ? 1.0 - z * z / 6.0 : std::sin(z) / z;
    return sinc * std::polar(1.0, z);
}

std::complex<double> half_sum_factor(double s) {
    double f = s - std::floor(s);
    return 0.5 * (1.0 + std::polar(1.0, 2.0 * M_PI * f));
}

} // namespace

std::complex<double> mu_hat_closed(int p, double t1, double t2, int depth) {
    ExampleParams::make(p);
    if (depth < 1) fail(ErrorCode::kInvalidInput, "depth must be >= 1");
    std::complex<double> acc = 1.0;
    double a = t1, b = t2;
    for (int k = 0; k < depth; ++k) {
        double s = a / 2.0 - b / 4.0;
        acc *= half_sum_factor(s);
        a = s;
        b /= 2.0;
        if (std::abs(a) + std::abs(b) < 1e-14) break;
    }
    return acc * boundary_factor(p * t2);
}

double sin_ratio_sq(int p, double t) {
    double eps = t - std::round(t);
    if (std::abs(eps) < 1e-7) {
        // Near-integer expansion of sin(p z)/ (p sin z); p odd keeps sign +1.
        double z = M_PI * eps;
        double r = 1.0 - (static_cast<double>(p) * p - 1.0) / 6.0 * z * z;
        return r * r;
    }
    double r = std::sin(p * M_PI * t) / (p * std::sin(M_PI * t));
    return r * r;
}

double sin_ratio_sq_trig3(double t) {
    double s = std::sin(M_PI * t);
    double r = (3.0 - 4.0 * s * s) / 3.0;
    return r * r;
}

double zeta2(double t, int terms) {
    double s = 0.0;
    for (int n = terms - 1; n >= 0; --n) s += 1.0 / ((t + n) * (t + n));
    return s + 1.0 / (t + terms);
}

IdentityCheck row_sum_check(int p, double t1, double t2, int n_range, int mu_depth) {
    IdentityCheck c;
    for (int n = -n_range; n <= n_range; ++n)
        c.lhs += std::norm(mu_hat_closed(p, t1 + n, t2, mu_depth));
    double y = p * M_PI * t2;
    double sinc = std::abs(y) < 1e-6 ? 1.0 - y * y / 6.0 : std::sin(y) / y;
    c.rhs = sinc * sinc;
    c.defect = std::abs(c.lhs - c.rhs);
    return c;
}

HarmonicSumCheck harmonic_sum_check(int p, double t1, double t2, double radius, int mu_depth) {
    HarmonicSumCheck c;
    const long long box = static_cast<long long>(std::ceil(radius)) + 1;
    for (long long m1 = -box; m1 <= box; ++m1)
        for (long long m2 = -box; m2 <= box; ++m2) {
            if (static_cast<double>(m1) * m1 + static_cast<double>(m2) * m2 >
                radius * radius * (1 + 1e-12))
                continue;
            double v = std::norm(mu_hat_closed(p, t1 + m1, t2 + m2, mu_depth));
            for (int k = 0; k < 4; ++k) {
                auto id = static_cast<ExampleCycle>(k);
                if (lambda_member(m1, m2, id)) {
                    c.per_cycle[k] += v;
                    break;
                }
            }
            c.lhs += v;
        }
    c.rhs = sin_ratio_sq(p, t2);
    c.defect = std::abs(c.lhs - c.rhs);
    return c;
}

IdentityCheck zeta_split_check(int p, double t1, double t2, double radius, int mu_depth) {
    HarmonicSumCheck h = harmonic_sum_check(p, t1, t2, radius, mu_depth);
    IdentityCheck c;
    c.lhs = h.per_cycle[0] + h.per_cycle[1]; // upper half lattice t2 >= 0
    double y = p * M_PI * t2;
    double s = std::sin(y);
    c.rhs = s * s / (p * M_PI * p * M_PI) * zeta2(t2);
    c.defect = std::abs(c.lhs - c.rhs);
    return c;
}

std::vector<std::vector<int>> doubling_orbits(int p) {
    ExampleParams::make(p);
    std::vector<bool> visited(p, false);
    std::vector<std::vector<int>> orbits;
    for (int a = 1; a < p; ++a) {
        if (visited[a]) continue;
        std::vector<int> orbit;
        int x = a;
        do {
            visited[x] = true;
            orbit.push_back(x);
            x = (2 * x) % p;
        } while (x != a);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<Segment> invariant_set_m(int p, const std::vector<int>& orbit) {
    ExampleParams::make(p);
    std::vector<Segment> out;
    for (int a : orbit) {
        if (a <= 0 || a >= p) fail(ErrorCode::kInvalidInput, "orbit element outside (0,p)");
        Segment s;
        s.height = make_rat(a, p);
        s.lo = g_exact(s.height);
        s.hi = s.lo + 1;
        out.push_back(std::move(s));
    }
    return out;
}

double h_q(int p, double t2) {
    if (p != 3) fail(ErrorCode::kUnsupportedParameter, "closed form available for p = 3 only");
    double s = std::sin(M_PI * t2);
    double inner = 1.0 - 4.0 / 3.0 * s * s;
    return 1.0 - inner * inner;
}

std::vector<DifferenceQuotientWitness> nowhere_diff_witness(int n) {
    if (n < 1 || n > 40) fail(ErrorCode::kOutOfRange, "level must lie in [1,40]");
    std::vector<DifferenceQuotientWitness> out;
    for (long long j = 0; j < (1LL << n); ++j) {
        DifferenceQuotientWitness w;
        Int two_j1(static_cast<long>(2 * j + 1));
        w.y = make_rat(two_j1, Int(1) << (n + 1)); // interval midpoint
        w.x = w.y - pow2_rat(n + 6);
        Rat dg = g_exact(w.y) - g_exact(w.x);
        w.quotient = dg / (w.y - w.x);
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace example_p
} // namespace sifs
