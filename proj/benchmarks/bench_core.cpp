#include <benchmark/benchmark.h>

#include "newform/hecke.hpp"
#include "newform/matgroups.hpp"
#include "newform/rankinselberg.hpp"
#include "newform/whittaker.hpp"

using namespace newform;

static void BM_SatakeRankOne(benchmark::State& st) {
    const int lam = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(satake_transform({lam}, 1, 0, 3));
}
BENCHMARK(BM_SatakeRankOne)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_SatakeRankTwo(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(satake_transform({1, 0}, 2, 0, 3, 4, 10000000));
}
BENCHMARK(BM_SatakeRankTwo)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_CosetClassify(benchmark::State& st) {
    const int n = int(st.range(0)), m = int(st.range(1));
    Field f = Field::make(3);
    Sampler s(f, 1);
    s.word_length = 6;
    std::vector<Mat> gs;
    for (int i = 0; i < 64; ++i) gs.push_back(s.G_element(n, 1));
    size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(coset_classify(gs[i++ % gs.size()], n, 1, {n, m}, Side::Pbar, m + 8));
}
BENCHMARK(BM_CosetClassify)->Args({1, 2})->Args({2, 4});

static void BM_DecomposeCompact(benchmark::State& st) {
    const int n = int(st.range(0)), m = int(st.range(1));
    Field f = Field::make(3);
    Sampler s(f, 2);
    std::vector<Mat> gs;
    for (int i = 0; i < 64; ++i) gs.push_back(s.K_element(n, m));
    size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(decompose_compact(gs[i++ % gs.size()], {n, m}, m + 8));
}
BENCHMARK(BM_DecomposeCompact)->Args({1, 2})->Args({2, 4});

static void BM_U3Oracle(benchmark::State& st) {
    const int depth = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(jacquet_oracle_u3(2, mpq_class(1, 2), 3, depth));
}
BENCHMARK(BM_U3Oracle)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_XiAssembleSymbolic(benchmark::State& st) {
    const int T = int(st.range(0));
    PolyTable ft = u3_formula_table(3, T + 4);
    auto pc = unitary_param_coeffs(3, {1});
    XiOptions o;
    o.T = T;
    for (auto _ : st) benchmark::DoNotOptimize(xi_assemble(ft, 1, 1, 0, 0, pc, 3, o));
}
BENCHMARK(BM_XiAssembleSymbolic)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_XiAssembleRankTwo(benchmark::State& st) {
    auto tab = symbolic_table(2, 0, 8);
    for (auto _ : st) {
        XiOptions o;
        o.T = 6;
        benchmark::DoNotOptimize(
            xi_assemble(tab.table, 2, 2, 0, 0, UnramParam::unitary({mpq_class(2, 7), mpq_class(-3, 5)}), 3, o));
    }
}
BENCHMARK(BM_XiAssembleRankTwo)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
