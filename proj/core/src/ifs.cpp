#include "sifs/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace sifs {

namespace {

RatMat checked_inverse(const IntMat& m) {
    RatMat inv = inverse(RatMat::from_int(m));
    RatMat prod = mul(inv, RatMat::from_int(m));
    if (!(prod == RatMat::identity(m.rows)))
        fail(ErrorCode::kInvalidInput, "inverse check failed");
    return inv;
}

} // namespace

MapFamily MapFamily::b_side(const HadamardTriple& t) {
    MapFamily f;
    f.side = DigitSide::kB;
    f.forward = t.R;
    f.inv = checked_inverse(t.R);
    f.digits = t.B.vectors;
    return f;
}

MapFamily MapFamily::l_side(const HadamardTriple& t) {
    MapFamily f;
    f.side = DigitSide::kL;
    f.forward = t.R.transpose();
    f.inv = checked_inverse(f.forward);
    f.digits = t.L.vectors;
    return f;
}

RatVec MapFamily::tau(const RatVec& x, int digit_index) const {
    const IntVec& d = digits[digit_index];
    RatVec shifted(x.size());
    for (size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] + Rat(d[i]);
    return mul(inv, shifted);
}

std::vector<double> MapFamily::tau(const std::vector<double>& x, int digit_index) const {
    const IntVec& d = digits[digit_index];
    int n = inv.rows;
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[i] += inv.at(i, j).get_d() * (x[j] + d[j].get_d());
    return out;
}

RatVec MapFamily::sigma(const RatVec& x, int digit_index) const {
    if (side != DigitSide::kL)
        fail(ErrorCode::kInvalidInput, "sigma is defined on the L side");
    RatVec out(x.size());
    for (int i = 0; i < forward.rows; ++i) {
        Rat s = Rat(digits[digit_index][i]);
        for (int j = 0; j < forward.cols; ++j) s += Rat(forward.at(i, j)) * x[j];
        out[i] = s;
    }
    return out;
}

bool PointCloud::contains(const RatVec& x) const {
    return std::binary_search(points.begin(), points.end(), x,
                              [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
}

PointCloud attractor_points(const MapFamily& family, int depth, std::int64_t cap) {
    if (depth < 0) fail(ErrorCode::kInvalidInput, "depth must be >= 0");
    const int n_digits = static_cast<int>(family.digits.size());
    std::int64_t count = 1;
    for (int k = 0; k < depth; ++k) {
        count *= n_digits;
        if (count > cap) fail(ErrorCode::kCapExceeded, "attractor enumeration exceeds cap");
    }
    int d = family.inv.rows;
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> pts(&lex_less);
    // Powers inv^k applied to each digit, summed over all digit words.
    std::vector<RatVec> level{RatVec(d, Rat(0))};
    for (int k = 1; k <= depth; ++k) {
        std::vector<RatVec> next;
        next.reserve(level.size() * n_digits);
        for (const RatVec& x : level)
            for (int b = 0; b < n_digits; ++b) next.push_back(family.tau(x, b));
        level = std::move(next);
    }
    for (RatVec& x : level) pts.insert(std::move(x));
    PointCloud cloud;
    cloud.points.assign(pts.begin(), pts.end());
    return cloud;
}

std::vector<std::vector<double>> chaos_game(const MapFamily& family, int samples,
                                            std::uint64_t seed, int burn_in) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(family.digits.size()) - 1);
    std::vector<double> x(family.inv.rows, 0.0);
    for (int k = 0; k < burn_in; ++k) x = family.tau(x, pick(rng));
    std::vector<std::vector<double>> out;
    out.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        x = family.tau(x, pick(rng));
        out.push_back(x);
    }
    return out;
}

std::complex<double> chi_b(const HadamardTriple& t, const std::vector<double>& x) {
    std::complex<double> s = 0.0;
    for (const IntVec& b : t.B.vectors) {
        double e = 0.0;
        for (int i = 0; i < t.d; ++i) e += b[i].get_d() * x[i];
        s += std::polar(1.0, 2.0 * M_PI * e);
    }
    return s / static_cast<double>(t.N);
}

RatVec chi_exponents(const HadamardTriple& t, const RatVec& x) {
    RatVec fracs(t.N);
    for (int i = 0; i < t.N; ++i) fracs[i] = rat_frac(dot(t.B.vectors[i], x));
    return fracs;
}

std::complex<double> chi_b(const HadamardTriple& t, const RatVec& x) {
    std::complex<double> s = 0.0;
    for (const Rat& e : chi_exponents(t, x)) s += std::polar(1.0, 2.0 * M_PI * e.get_d());
    return s / static_cast<double>(t.N);
}

bool is_extreme_point(const HadamardTriple& t, const RatVec& x) {
    for (const IntVec& b : t.B.vectors)
        if (!is_integer(dot(b, x))) return false;
    return true;
}

std::complex<double> chi_b_pow(const HadamardTriple& t, const std::vector<double>& x, int n) {
    if (n < 1) fail(ErrorCode::kInvalidInput, "chi_b_pow needs n >= 1");
    IntMat rt = t.R.transpose();
    std::vector<double> y = x;
    std::complex<double> prod = 1.0;
    for (int k = 0; k < n; ++k) {
        prod *= chi_b(t, y);
        if (k + 1 < n) {
            std::vector<double> z(t.d, 0.0);
            for (int i = 0; i < t.d; ++i)
                for (int j = 0; j < t.d; ++j) z[i] += rt.at(i, j).get_d() * y[j];
            y = std::move(z);
        }
    }
    return prod;
}

MuHatResult mu_hat(const HadamardTriple& t, const std::vector<double>& x, int depth) {
    if (depth < 1) fail(ErrorCode::kInvalidInput, "mu_hat needs depth >= 1");
    RatMat rt_inv = inverse(RatMat::from_int(t.R.transpose()));
    std::vector<std::vector<double>> inv_rows(t.d, std::vector<double>(t.d));
    for (int i = 0; i < t.d; ++i)
        for (int j = 0; j < t.d; ++j) inv_rows[i][j] = rt_inv.at(i, j).get_d();
    double max_b = 0.0;
    for (const IntVec& b : t.B.vectors) {
        double s = 0.0;
        for (const Int& v : b) s += v.get_d() * v.get_d();
        max_b = std::max(max_b, std::sqrt(s));
    }
    MuHatResult r;
    std::vector<double> y = x;
    for (int n = 1; n <= depth; ++n) {
        std::vector<double> z(t.d, 0.0);
        for (int i = 0; i < t.d; ++i)
            for (int j = 0; j < t.d; ++j) z[i] += inv_rows[i][j] * y[j];
        y = std::move(z);
        r.value *= chi_b(t, y);
        r.depth_used = n;
        if (norm2(y) < 1e-14) break;
    }
    r.tail_bound = 2.0 * M_PI * max_b * norm2(y);
    return r;
}

std::complex<double> mu_hat_value(const HadamardTriple& t, const std::vector<double>& x,
                                  int depth) {
    return mu_hat(t, x, depth).value;
}

double qmf_defect(const HadamardTriple& t, const std::vector<double>& x) {
    MapFamily l = MapFamily::l_side(t);
    double s = 0.0;
    for (int i = 0; i < t.N; ++i) s += std::norm(chi_b(t, l.tau(x, i)));
    return std::abs(s - 1.0);
}

} // namespace sifs
