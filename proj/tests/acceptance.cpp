// End-to-end verification suite. Each numbered criterion prints one
// [PASS]/[FAIL] line with its measured margin and wall time; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cycle_word_oracle.hpp"
#include "sifs/example_p.hpp"
#include "sifs/spectrum.hpp"
#include "sifs/transfer.hpp"

using namespace sifs;
namespace ep = sifs::example_p;

namespace {

HadamardTriple quarter_system() {
    IntMat r(1, 1);
    r.at(0, 0) = 4;
    return HadamardTriple::make(r, {{0}, {2}}, {{0}, {1}});
}

RatVec rv2(long a, long b) { return RatVec{Rat(a), Rat(b)}; }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

int g_failures = 0;

void run_criterion(int number, const std::string& name, double time_limit_s,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(elapsed < time_limit_s, "time limit exceeded");
    std::printf("[%s] %d. %s (%s; t=%.2fs, limit %.0fs)\n", out.pass ? "PASS" : "FAIL",
                number, name.c_str(), out.detail.empty() ? "ok" : out.detail.c_str(), elapsed,
                time_limit_s);
    std::fflush(stdout);
    if (!out.pass) ++g_failures;
}

std::vector<std::vector<double>> unit_square_grid5() {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) pts.push_back({(i + 0.5) / 5.0, (j + 0.5) / 5.0});
    return pts;
}

void criterion_hypotheses(Outcome& out) {
    for (int p : {3, 5, 7, 9}) {
        HadamardTriple t = ep::make_triple(p);
        out.require(is_expansive(t.R), "p=" + std::to_string(p) + " expansive");
        HadamardCheck h = check_hadamard(t, 1e-12);
        out.require(h.is_hadamard && h.defect < 1e-12,
                    "p=" + std::to_string(p) + " unitarity defect");
        out.require(regularity_rank(t) == 2, "p=" + std::to_string(p) + " rank");
        out.require(dual_lattice(t) == LatticeBasis::standard(2),
                    "p=" + std::to_string(p) + " dual lattice");
    }
    HadamardTriple q = quarter_system();
    out.require(is_expansive(q.R), "quarter expansive");
    out.require(check_hadamard(q, 1e-12).is_hadamard, "quarter unitarity");
    out.require(regularity_rank(q) == 1, "quarter rank");
    RatMat qb = dual_lattice(q).basis();
    out.require(qb.at(0, 0) == make_rat(1, 2), "quarter dual lattice = (1/2)Z");
}

void criterion_cycles(Outcome& out) {
    HadamardTriple t = ep::make_triple(3);
    auto cycles = find_extreme_cycles(t);
    out.require(cycles.size() == 4, "four cycles");
    if (cycles.size() == 4) {
        out.require(cycles[0].points == std::vector<RatVec>{rv2(-1, 1)} &&
                        cycles[0].word_digits(t) == std::vector<IntVec>{{0, 1}},
                    "cycle (-1,1)/word (0,1)");
        out.require(cycles[1].points == std::vector<RatVec>{rv2(0, 0)} &&
                        cycles[1].word_digits(t) == std::vector<IntVec>{{0, 0}},
                    "cycle (0,0)/word (0,0)");
        out.require(cycles[2].points == std::vector<RatVec>{rv2(0, 1)} &&
                        cycles[2].word_digits(t) == std::vector<IntVec>{{1, 1}},
                    "cycle (0,1)/word (1,1)");
        out.require(cycles[3].points == std::vector<RatVec>{rv2(1, 0)} &&
                        cycles[3].word_digits(t) == std::vector<IntVec>{{1, 0}},
                    "cycle (1,0)/word (1,0)");
    }
    auto oracle = sifs_test::cycles_by_word_enumeration(t, 6);
    out.require(oracle.size() == cycles.size(), "oracle count");
    for (size_t i = 0; i < std::min(oracle.size(), cycles.size()); ++i)
        out.require(oracle[i].points == cycles[i].points && oracle[i].word == cycles[i].word,
                    "oracle cycle " + std::to_string(i));

    HadamardTriple q = quarter_system();
    auto qc = find_extreme_cycles(q);
    out.require(qc.size() == 1 && qc[0].points == std::vector<RatVec>{RatVec{Rat(0)}} &&
                    qc[0].word == std::vector<int>{0},
                "quarter origin cycle");
    auto qo = sifs_test::cycles_by_word_enumeration(q, 6);
    out.require(qo.size() == 1 && qo[0].points == qc[0].points, "quarter oracle");
}

void criterion_partition(Outcome& out) {
    HadamardTriple t = ep::make_triple(3);
    auto cycles = find_extreme_cycles(t);
    out.require(cycles.size() == 4, "four cycles");
    const long box = 20;
    const double radius = 20.0 * std::sqrt(2.0) + 1.0;
    int mismatches = 0;
    for (const auto& c : cycles) {
        SpectrumSet s = generate_lambda_radius(t, c, radius);
        ep::ExampleCycle id = ep::cycle_id_of(c);
        for (long t1 = -box; t1 <= box; ++t1)
            for (long t2 = -box; t2 <= box; ++t2)
                if (s.find(rv2(t1, t2)).has_value() != ep::lambda_member(t1, t2, id))
                    ++mismatches;
    }
    out.require(mismatches == 0,
                std::to_string(mismatches) + " mismatches over 1681 points x 4 sets");
    out.note("1681 points x 4 sets exact");
}

void criterion_spectral_identities(Outcome& out) {
    const int p = 3;
    HadamardTriple t = ep::make_triple(p);
    auto grid = unit_square_grid5();

    double worst_row = 0.0;
    for (const auto& pt : grid)
        worst_row = std::max(worst_row, ep::row_sum_check(p, pt[0], pt[1], 200, 50).defect);
    out.require(worst_row < 5e-3, "row-sum defect " + std::to_string(worst_row));

    double worst_harm = 0.0;
    for (const auto& pt : grid)
        worst_harm =
            std::max(worst_harm, ep::harmonic_sum_check(p, pt[0], pt[1], 40.0, 50).defect);
    out.require(worst_harm < 0.01, "harmonic-sum defect " + std::to_string(worst_harm));

    RatMat basis(2, 2);
    basis.at(0, 0) = 1;
    basis.at(1, 1) = make_rat(1, p);
    // The dense full lattice needs a wider ball than the per-cycle sums for
    // the same budget; its truncation tail decays like 1/K.
    SpectrumSet full = external_lattice_spectrum(LatticeBasis::from_generators(basis), 80.0);
    double worst_full = 0.0;
    for (const auto& pt : grid)
        worst_full = std::max(worst_full,
                              std::abs(completeness_function(t, full, pt, 50) - 1.0));
    out.require(worst_full < 0.01, "full-lattice completeness " + std::to_string(worst_full));

    double worst_cross = 0.0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            std::complex<double> a = ep::mu_hat_closed(p, i / 9.0, j / 9.0, 50);
            std::complex<double> b = mu_hat_value(t, {i / 9.0, j / 9.0}, 50);
            worst_cross = std::max(worst_cross, std::abs(a - b));
        }
    out.require(worst_cross < 1e-8, "transform cross-formula " + std::to_string(worst_cross));
    out.note("row " + std::to_string(worst_row) + ", harm " + std::to_string(worst_harm) +
             ", full " + std::to_string(worst_full));
}

void criterion_transfer(Outcome& out) {
    HadamardTriple t = ep::make_triple(3);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 25; ++j)
            pts.push_back({-2.0 + 4.0 * (i + 0.5) / 40.0, -1.0 + 2.0 * (j + 0.5) / 25.0});

    HarmonicReport one = harmonic_defect(
        t, [](const std::vector<double>&) { return 1.0; }, pts, 1e-12);
    out.require(one.max_defect < 1e-12, "unit function defect");

    HarmonicReport rows = harmonic_defect(
        t, [](const std::vector<double>& x) { return ep::sin_ratio_sq(3, x[1]); }, pts, 1e-9);
    out.require(rows.sign == HarmonicSign::kHarmonic && rows.max_defect < 1e-9,
                "row-sum closed form not harmonic");

    HarmonicReport seg = harmonic_defect(
        t, [](const std::vector<double>& x) { return ep::h_q(3, x[1]); }, pts, 1e-9);
    out.require(seg.sign == HarmonicSign::kHarmonic && seg.max_defect < 1e-9,
                "segment closed form not harmonic");

    HarmonicReport sub = harmonic_defect(
        t,
        [&t](const std::vector<double>& x) { return std::norm(mu_hat_value(t, x, 50)); },
        pts, 1e-12);
    out.require(sub.min_delta > -1e-12, "squared transform min delta");
    out.require(sub.max_delta > 1e-3, "squared transform max delta");
    out.note("1000 sample points");
}

void criterion_cuntz(Outcome& out) {
    // Permutative bases at prefix depth 4.
    for (int alphabet : {2, 3, 4})
        for (const Word& w : {Word{0}, Word{0, 1}}) {
            CuntzDefects d = cuntz_defect(permutative_basis(w, alphabet, 4));
            out.require(d.iso_defect == 0.0 && d.completeness_defect == 0.0,
                        "permutative defects N=" + std::to_string(alphabet));
        }
    // Exponential bases over truncated generated sets.
    HadamardTriple t = ep::make_triple(3);
    for (const auto& c : find_extreme_cycles(t)) {
        CuntzDefects d = cuntz_defect(t, generate_lambda(t, c, 4));
        out.require(d.iso_defect == 0.0 && d.completeness_defect == 0.0 && d.skipped.empty(),
                    "exponential defects");
    }
    // Intertwiner dimensions across all minimal words of length <= 4.
    int pairs = 0;
    for (int alphabet : {2, 3}) {
        auto words = minimal_words(alphabet, 4);
        for (const Word& a : words)
            for (const Word& b : words) {
                ++pairs;
                int dim = phi_fixed_space(a, b, alphabet).dimension;
                int expect = cyclic_equivalent(a, b) ? 1 : 0;
                if (dim != expect) {
                    out.require(false, "dimension mismatch at " + word_str(a) + "/" +
                                           word_str(b));
                    return;
                }
            }
    }
    out.note(std::to_string(pairs) + " word pairs, exact nullspaces");
}

void criterion_envelope_functions(Outcome& out) {
    out.require(std::abs(ep::g(1.0 / 3.0) + 4.0 / 9.0) < 1e-10, "g(1/3)");
    out.require(std::abs(ep::g(2.0 / 3.0) + 5.0 / 9.0) < 1e-10, "g(2/3)");
    out.require(std::abs(ep::g(0.5) + 0.25) < 1e-10, "g(1/2)");
    out.require(std::abs(ep::g_left(0.5) + 0.75) < 1e-10, "left limit at 1/2");

    for (int n = 1; n <= 8; ++n)
        for (long long k = 1; k < (1LL << n); k += 2) {
            Rat x = make_rat(Int(static_cast<long>(k)), Int(1) << n);
            if (ep::g_exact(x) - ep::g_left_exact(x) != ep::jump(k, n)) {
                out.require(false, "jump mismatch at level " + std::to_string(n));
                return;
            }
        }

    for (long long n = -10000; n <= 10000; ++n)
        for (int j = 0; j <= 1; ++j)
            if (2 * ep::h_int(n) + n != ep::h_int(2 * n + j)) {
                out.require(false, "staircase equation at " + std::to_string(n));
                return;
            }

    Rat quarter = make_rat(1, 4);
    for (int n = 1; n <= 10; ++n)
        for (const auto& w : ep::nowhere_diff_witness(n))
            if (!(abs(w.quotient) > quarter)) {
                out.require(false, "difference quotient at level " + std::to_string(n));
                return;
            }

    out.require(ep::doubling_orbits(3) == std::vector<std::vector<int>>{{1, 2}}, "orbits p=3");
    out.require(ep::doubling_orbits(5) == std::vector<std::vector<int>>{{1, 2, 4, 3}},
                "orbits p=5");
    out.require(ep::doubling_orbits(7) == std::vector<std::vector<int>>{{1, 2, 4}, {3, 6, 5}},
                "orbits p=7");
    out.require(ep::doubling_orbits(9) ==
                    std::vector<std::vector<int>>{{1, 2, 4, 8, 7, 5}, {3, 6}},
                "orbits p=9");

    auto segs = ep::invariant_set_m(3, {1, 2});
    out.require(segs.size() == 2 && segs[0].lo == make_rat(-4, 9) &&
                    segs[0].hi == make_rat(5, 9) && segs[1].lo == make_rat(-5, 9) &&
                    segs[1].hi == make_rat(4, 9),
                "segment endpoints");
}

void criterion_d1_completeness(Outcome& out) {
    HadamardTriple q = quarter_system();
    auto cycles = find_extreme_cycles(q);
    out.require(cycles.size() == 1, "origin cycle");
    SpectrumSet lam = generate_lambda_radius(q, cycles[0], 4096.0);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        double t = (i + 0.5) / 25.0;
        worst = std::max(worst, std::abs(completeness_function(q, lam, {t}, 50) - 1.0));
    }
    out.require(worst < 0.02, "completeness deficit " + std::to_string(worst));
    out.note("radius 4^6, " + std::to_string(lam.size()) + " frequencies, worst " +
             std::to_string(worst));
}

} // namespace

int main() {
    run_criterion(1, "hypothesis suite (p in {3,5,7,9} and the quarter system)", 1.0,
                  criterion_hypotheses);
    run_criterion(2, "cycle suite with independent word-enumeration oracle", 5.0,
                  criterion_cycles);
    run_criterion(3, "generated-set partition on [-20,20]^2", 10.0, criterion_partition);
    run_criterion(4, "spectral identities (row sum, harmonic sum, completeness, cross)",
                  60.0, criterion_spectral_identities);
    run_criterion(5, "transfer operator (normalization, harmonic, subharmonic)", 30.0,
                  criterion_transfer);
    run_criterion(6, "relation defects and intertwiner dimensions", 30.0, criterion_cuntz);
    run_criterion(7, "envelope function suite (values, jumps, staircase, orbits)", 10.0,
                  criterion_envelope_functions);
    run_criterion(8, "d=1 completeness of the origin-cycle spectrum", 10.0,
                  criterion_d1_completeness);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
