#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sifs/example_p.hpp"
#include "sifs/spectrum.hpp"

using namespace sifs;
namespace ep = sifs::example_p;

TEST_CASE("family parameters") {
    CHECK_THROWS_AS(ep::make_triple(2), Error);
    CHECK_THROWS_AS(ep::make_triple(-3), Error);
    HadamardTriple t = ep::make_triple(7);
    CHECK(t.N == 4);
    CHECK(t.B.vectors[2] == IntVec{Int(0), Int(7)});
}

TEST_CASE("lower envelope values") {
    CHECK(ep::g(0.0) == 0.0);
    CHECK(ep::g(1.0 / 3.0) == doctest::Approx(-4.0 / 9.0).epsilon(1e-12));
    CHECK(ep::g(2.0 / 3.0) == doctest::Approx(-5.0 / 9.0).epsilon(1e-12));
    CHECK(ep::g(0.5) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(ep::g_left(0.5) == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(ep::g(1.0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(ep::g(1.5), Error);
    CHECK_THROWS_AS(ep::g(0.5, 64), Error);

    CHECK(ep::g_exact(make_rat(1, 3)) == make_rat(-4, 9));
    CHECK(ep::g_exact(make_rat(2, 3)) == make_rat(-5, 9));
    CHECK(ep::g_exact(make_rat(1, 2)) == make_rat(-1, 4));
    CHECK(ep::g_left_exact(make_rat(1, 2)) == make_rat(-3, 4));
    CHECK(ep::g_exact(Rat(0)) == 0);
    CHECK(ep::g_exact(Rat(1)) == -1);
    CHECK(ep::g_exact(make_rat(1, 5)) == ep::g_left_exact(make_rat(1, 5)));
}

TEST_CASE("canonical dyadic expansion") {
    ep::DyadicExpansion e = ep::dyadic_expansion(0.375, 8);
    CHECK(e.terminating);
    CHECK(e.bits == std::vector<int>{0, 1, 1, 0, 0, 0, 0, 0});
    CHECK_FALSE(ep::dyadic_expansion(1.0 / 3.0, 30).terminating);
    double recon = 0.0;
    for (int n = 1; n <= 8; ++n) recon += e.bits[n - 1] * std::ldexp(1.0, -n);
    CHECK(recon == 0.375);
}

TEST_CASE("self-similarity of the envelope, floating and exact") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        double x = u(rng);
        for (int b = 0; b <= 1; ++b) {
            double lhs = ep::g((x + b) / 2.0);
            double rhs = -(x + b) / 4.0 + ep::g(x) / 2.0;
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }
    std::uniform_int_distribution<long> num(0, 996);
    for (int i = 0; i < 300; ++i) {
        Rat x = make_rat(num(rng), 997);
        for (int b = 0; b <= 1; ++b) {
            Rat arg = (x + b) / 2;
            CHECK(ep::g_exact(arg) == -arg / 2 + ep::g_exact(x) / 2);
        }
    }
}

TEST_CASE("jumps at dyadic points") {
    CHECK(ep::jump(1, 1) == make_rat(1, 2));
    CHECK(ep::jump(1, 2) == make_rat(1, 4));
    CHECK(ep::jump(3, 2) == make_rat(1, 4));
    CHECK_THROWS_AS(ep::jump(2, 2), Error);
    CHECK_THROWS_AS(ep::jump(5, 2), Error);
    // Cross-check against the two one-sided values, exactly, levels 1..8.
    for (int n = 1; n <= 8; ++n)
        for (long long k = 1; k < (1LL << n); k += 2) {
            Rat x = make_rat(Int(static_cast<long>(k)), Int(1) << n);
            CHECK(ep::g_exact(x) - ep::g_left_exact(x) == ep::jump(k, n));
        }
    // Per-level jump mass is 2^{n-1} * 2^{-n} = 1/2; partial sums grow
    // without bound.
    Rat total = 0;
    for (int n = 1; n <= 12; ++n) {
        Rat level = 0;
        for (long long k = 1; k < (1LL << n); k += 2) level += ep::jump(k, n);
        CHECK(level == make_rat(1, 2));
        total += level;
    }
    CHECK(total == Rat(6));
}

TEST_CASE("integer staircase values and functional equation") {
    CHECK(ep::h_int(0) == 0);
    CHECK(ep::h_int(1) == 0);
    CHECK(ep::h_int(2) == 1);
    CHECK(ep::h_int(3) == 1);
    CHECK(ep::h_int(4) == 4);
    CHECK(ep::h_int(6) == 5);
    CHECK(ep::h_int(-1) == 1);
    CHECK(ep::h_int(-2) == 1);
    CHECK(ep::h_int(-3) == 0);
    for (long long n = -10000; n <= 10000; ++n)
        for (int j = 0; j <= 1; ++j)
            CHECK(2 * ep::h_int(n) + n == ep::h_int(2 * n + j));
}

TEST_CASE("staircase predicates partition the integer plane") {
    CHECK(ep::lambda_member(0, 0, ep::ExampleCycle::k00));
    CHECK(ep::lambda_member(-1, 0, ep::ExampleCycle::k10));
    CHECK(ep::lambda_member(0, -1, ep::ExampleCycle::k01));
    CHECK(ep::lambda_member(1, -1, ep::ExampleCycle::kM11));
    for (long long t1 = -10; t1 <= 10; ++t1)
        for (long long t2 = -10; t2 <= 10; ++t2) {
            int hits = 0;
            for (int k = 0; k < 4; ++k)
                if (ep::lambda_member(t1, t2, static_cast<ep::ExampleCycle>(k))) ++hits;
            CHECK(hits == 1);
        }
    // The predicate sets are invariant under every digit map sigma_l.
    for (long long t1 = -6; t1 <= 6; ++t1)
        for (long long t2 = -6; t2 <= 6; ++t2)
            for (int k = 0; k < 4; ++k) {
                auto id = static_cast<ep::ExampleCycle>(k);
                if (!ep::lambda_member(t1, t2, id)) continue;
                for (long long l1 = 0; l1 <= 1; ++l1)
                    for (long long l2 = 0; l2 <= 1; ++l2)
                        CHECK(ep::lambda_member(2 * t1 + t2 + l1, 2 * t2 + l2, id));
            }
}

TEST_CASE("closed-form transform basics") {
    CHECK(std::abs(ep::mu_hat_closed(3, 0.0, 0.0) - 1.0) < 1e-15);
    for (int n : {1, 2, 3, 4, -1, -6})
        CHECK(std::abs(ep::mu_hat_closed(3, n, 0.0)) < 1e-10);
}

TEST_CASE("closed form agrees with the product formula") {
    for (int p : {3, 5}) {
        HadamardTriple t = ep::make_triple(p);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                double t1 = i / 9.0, t2 = j / 9.0;
                std::complex<double> a = ep::mu_hat_closed(p, t1, t2, 50);
                std::complex<double> b = mu_hat_value(t, {t1, t2}, 50);
                CHECK(std::abs(a - b) < 1e-8);
            }
    }
}

TEST_CASE("closed form agrees with direct quadrature") {
    // Midpoint quadrature of the slice integral times the vertical factor.
    const int n = 1 << 18;
    for (auto [t1, t2] : {std::pair{0.3, 0.7}, std::pair{-1.2, 0.4}}) {
        std::complex<double> acc = 0.0;
        for (int k = 0; k < n; ++k) {
            double x = (k + 0.5) / n;
            acc += std::polar(1.0, 2.0 * M_PI * (t1 * x + t2 * ep::g(x, 40)));
        }
        acc /= n;
        double y = 3.0 * t2 * M_PI;
        std::complex<double> vertical = std::sin(y) / y * std::polar(1.0, y);
        std::complex<double> closed = ep::mu_hat_closed(3, t1, t2, 50);
        CHECK(std::abs(acc * vertical - closed) < 3e-3);
    }
}

TEST_CASE("transform satisfies the refinement relation") {
    HadamardTriple t = ep::make_triple(3);
    for (double t1 : {0.2, -1.3, 0.8})
        for (double t2 : {0.1, 0.6}) {
            // (R^T)^{-1} (t1,t2) = (t1/2 - t2/4, t2/2).
            double u1 = t1 / 2 - t2 / 4, u2 = t2 / 2;
            std::complex<double> lhs = ep::mu_hat_closed(3, t1, t2, 60);
            std::complex<double> rhs =
                chi_b(t, std::vector<double>{u1, u2}) * ep::mu_hat_closed(3, u1, u2, 60);
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
}

TEST_CASE("row sums against the vertical sinc") {
    ep::IdentityCheck c = ep::row_sum_check(3, 0.25, 0.4, 200);
    CHECK(c.defect < 5e-3);
    CHECK(c.rhs == doctest::Approx(std::pow(std::sin(3 * M_PI * 0.4) / (3 * M_PI * 0.4), 2)));
    // Limit handling at t2 = 0: both sides approach 1.
    ep::IdentityCheck c0 = ep::row_sum_check(3, 0.3, 0.0, 400);
    CHECK(c0.rhs == doctest::Approx(1.0));
    CHECK(c0.defect < 5e-3);
    // Tail decays like 1/n_range: quadrupling the range cuts the defect by
    // about four.
    double d100 = ep::row_sum_check(3, 0.25, 0.4, 100).defect;
    double d400 = ep::row_sum_check(3, 0.25, 0.4, 400).defect;
    CHECK(d100 / d400 > 2.0);
    CHECK(d100 / d400 < 8.0);
}

TEST_CASE("harmonic sum of the four generated sets") {
    ep::HarmonicSumCheck c = ep::harmonic_sum_check(3, 0.3, 0.25, 40.0, 50);
    CHECK(c.defect < 0.01);
    double total = 0.0;
    for (double v : c.per_cycle) total += v;
    CHECK(total == doctest::Approx(c.lhs).epsilon(1e-12));
    // Entire form: ratio equals 1 at integer heights.
    CHECK(ep::sin_ratio_sq(3, 0.0) == doctest::Approx(1.0));
    CHECK(ep::sin_ratio_sq(3, 2.0) == doctest::Approx(1.0));
    CHECK(ep::sin_ratio_sq(5, -1.0) == doctest::Approx(1.0));
    // Trigonometric-polynomial form for p = 3.
    for (double t2 : {0.05, 0.3, 0.45, 0.8})
        CHECK(ep::sin_ratio_sq(3, t2) == doctest::Approx(ep::sin_ratio_sq_trig3(t2)).epsilon(1e-12));
}

TEST_CASE("upper-half split against the one-sided zeta") {
    for (double t2 : {0.25, 0.4}) {
        ep::IdentityCheck c = ep::zeta_split_check(3, 0.3, t2, 40.0, 50);
        CHECK(c.defect < 0.01);
    }
    // zeta2 sanity: at t = 1 the value is pi^2/6.
    CHECK(ep::zeta2(1.0) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-6));
}

TEST_CASE("doubling orbits") {
    CHECK(ep::doubling_orbits(3) == std::vector<std::vector<int>>{{1, 2}});
    CHECK(ep::doubling_orbits(5) == std::vector<std::vector<int>>{{1, 2, 4, 3}});
    CHECK(ep::doubling_orbits(7) == std::vector<std::vector<int>>{{1, 2, 4}, {3, 6, 5}});
    CHECK(ep::doubling_orbits(9) == std::vector<std::vector<int>>{{1, 2, 4, 8, 7, 5}, {3, 6}});
    CHECK(ep::doubling_orbits(1).empty());
}

TEST_CASE("invariant segments at orbit heights") {
    auto segs = ep::invariant_set_m(3, {1, 2});
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].height == make_rat(1, 3));
    CHECK(segs[0].lo == make_rat(-4, 9));
    CHECK(segs[0].hi == make_rat(5, 9));
    CHECK(segs[1].height == make_rat(2, 3));
    CHECK(segs[1].lo == make_rat(-5, 9));
    CHECK(segs[1].hi == make_rat(4, 9));
}

TEST_CASE("transitions off the segment heights are forbidden") {
    // From height 1/3 only digits with second coordinate 1 carry weight.
    HadamardTriple t = ep::make_triple(3);
    MapFamily lmaps = MapFamily::l_side(t);
    for (double x : {-0.3, 0.1, 0.5}) {
        for (int li = 0; li < 4; ++li) {
            std::vector<double> y = lmaps.tau(std::vector<double>{x, 1.0 / 3.0}, li);
            double w = std::abs(chi_b(t, y));
            if (t.L.vectors[li][1] == 0)
                CHECK(w < 1e-12);
        }
    }
}

TEST_CASE("segment harmonic closed form") {
    CHECK(ep::h_q(3, 0.0) == doctest::Approx(0.0));
    CHECK(ep::h_q(3, 0.5) == doctest::Approx(8.0 / 9.0));
    CHECK_THROWS_AS(ep::h_q(5, 0.1), Error);
}

TEST_CASE("difference-quotient witnesses exceed one quarter") {
    for (int n : {1, 2, 5, 10}) {
        auto ws = ep::nowhere_diff_witness(n);
        CHECK(ws.size() == (1u << n));
        Rat quarter = make_rat(1, 4);
        for (const auto& w : ws) {
            CHECK(abs(w.quotient) > quarter);
            CHECK(w.x < w.y);
            // Both endpoints inside the dyadic interval.
            CHECK(w.y - w.x <= make_rat(1, 1 << n));
        }
    }
}

TEST_CASE("attractor points stay between the envelope and its shift") {
    HadamardTriple t = ep::make_triple(3);
    const int depth = 8;
    PointCloud cloud = attractor_points(MapFamily::b_side(t), depth);
    // Truncation slack: remaining digit tail plus envelope variation over a
    // dyadic cell of width 2^-depth.
    double eps = (depth + 2.0) * std::ldexp(1.0, -depth) + 3.0 * std::ldexp(1.0, -depth);
    for (const RatVec& pt : cloud.points) {
        Rat x = pt[0];
        double y = pt[1].get_d();
        double lo = ep::g_exact(x).get_d();
        CHECK(y >= lo - eps);
        CHECK(y <= lo + 3.0 + eps);
    }
}

TEST_CASE("frequencies off the coarse lattice are orthogonal to it") {
    // e_(t, l/3) with l not divisible by 3 pairs to zero with every integer
    // frequency: the vertical factor of the transform vanishes exactly.
    for (int l : {1, 2}) {
        for (int n1 : {-2, 0, 3})
            for (int n2 : {-1, 0, 2}) {
                std::complex<double> v =
                    ep::mu_hat_closed(3, 0.37 - n1, l / 3.0 - n2, 50);
                CHECK(std::abs(v) < 1e-8);
            }
    }
}
