#include <benchmark/benchmark.h>

#include <complex>

#include "sifs/example_p.hpp"
#include "sifs/spectrum.hpp"
#include "sifs/transfer.hpp"

using namespace sifs;

static void BM_MuHatProduct(benchmark::State& state) {
    HadamardTriple t = example_p::make_triple(3);
    std::vector<double> x{0.37, 0.71};
    for (auto _ : state) {
        auto v = mu_hat_value(t, x, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_MuHatProduct)->Arg(25)->Arg(50);

static void BM_MuHatClosed(benchmark::State& state) {
    for (auto _ : state) {
        auto v = example_p::mu_hat_closed(3, 0.37, 0.71, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_MuHatClosed)->Arg(25)->Arg(50);

static void BM_FindExtremeCycles(benchmark::State& state) {
    HadamardTriple t = example_p::make_triple(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cycles = find_extreme_cycles(t);
        benchmark::DoNotOptimize(cycles);
    }
}
BENCHMARK(BM_FindExtremeCycles)->Arg(3)->Arg(9);

static void BM_GenerateLambdaDepth(benchmark::State& state) {
    HadamardTriple t = example_p::make_triple(3);
    auto cycles = find_extreme_cycles(t);
    for (auto _ : state) {
        auto s = generate_lambda(t, cycles[1], static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_GenerateLambdaDepth)->Arg(4)->Arg(6);

static void BM_TransferGridApply(benchmark::State& state) {
    HadamardTriple t = example_p::make_triple(3);
    int res = static_cast<int>(state.range(0));
    GridFunction g = GridFunction::sample(invariant_box(t), {res, res},
                                          [](const std::vector<double>&) { return 1.0; });
    for (auto _ : state) {
        GridFunction out = apply_transfer_grid(t, g);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_TransferGridApply)->Arg(65)->Arg(257);

static void BM_CompletenessSum(benchmark::State& state) {
    HadamardTriple t = example_p::make_triple(3);
    RatMat basis(2, 2);
    basis.at(0, 0) = 1;
    basis.at(1, 1) = make_rat(1, 3);
    SpectrumSet s = external_lattice_spectrum(LatticeBasis::from_generators(basis),
                                              static_cast<double>(state.range(0)));
    for (auto _ : state) {
        double h = completeness_function(t, s, {0.3, 0.7}, 50);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_CompletenessSum)->Arg(20)->Arg(40);

static void BM_PhiFixedSpace(benchmark::State& state) {
    Word w{0, 1, 1, 2}, w2{1, 2, 0, 1};
    for (auto _ : state) {
        auto s = phi_fixed_space(w, w2, 3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_PhiFixedSpace);
BENCHMARK_MAIN();
