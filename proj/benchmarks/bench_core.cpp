#include <benchmark/benchmark.h>

#include "polymat/decomposition.hpp"
#include "polymat/families.hpp"
#include "polymat/homology.hpp"
#include "polymat/io.hpp"
#include "polymat/stability.hpp"
#include "polymat/structure.hpp"
#include "polymat/verify.hpp"

using namespace polymat;

namespace {

void BM_Power(benchmark::State& state) {
    MonomialIdeal ideal = squarefree_veronese(6, 3);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonomialIdeal result = power(ideal, k);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Power)->Arg(2)->Arg(3)->Arg(4);

void BM_LinearQuotientsQ(benchmark::State& state) {
    MonomialIdeal square = power(squarefree_veronese(6, 3), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        LinearQuotientsReport report = linear_quotients_q(square);
        benchmark::DoNotOptimize(report);
    }
    state.SetLabel(std::to_string(square.size()) + " generators");
}
BENCHMARK(BM_LinearQuotientsQ)->Arg(1)->Arg(2);

void BM_NeighborQ(benchmark::State& state) {
    MonomialIdeal pw = power(squarefree_veronese(6, 3), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int q = q_value_assuming_linear(pw);
        benchmark::DoNotOptimize(q);
    }
    state.SetLabel(std::to_string(pw.size()) + " generators");
}
BENCHMARK(BM_NeighborQ)->Arg(2)->Arg(3);

void BM_ExchangeCheck(benchmark::State& state) {
    MonomialIdeal ideal = power(regression_polymatroidal_cubic(), 2);
    for (auto _ : state) {
        PolymatroidalResult result = is_polymatroidal(ideal);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ExchangeCheck);

void BM_IrreducibleDecomposition(benchmark::State& state) {
    MonomialIdeal ideal = regression_matroidal_octahedron();
    for (auto _ : state) {
        // Fresh budget each round; the process-wide memo makes repeated
        // decomposition of the same ideal trivial, so this measures warm
        // lookups after the first iteration.
        auto comps = irreducible_decomposition(ideal);
        benchmark::DoNotOptimize(comps);
    }
}
BENCHMARK(BM_IrreducibleDecomposition);

void BM_AssFastPath(benchmark::State& state) {
    MonomialIdeal square = power(squarefree_veronese(5, 2), 2);
    for (auto _ : state) {
        AssociatedPrimes ass = ass_polymatroidal_fast(square);
        benchmark::DoNotOptimize(ass);
    }
}
BENCHMARK(BM_AssFastPath);

void BM_BettiTable(benchmark::State& state) {
    MonomialIdeal ideal = squarefree_veronese(5, 2);
    for (auto _ : state) {
        BettiTable table = betti_table(ideal);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_BettiTable);

void BM_StabilityReport(benchmark::State& state) {
    MonomialIdeal ideal = almost_squarefree_veronese(5, 3, parse_monomial("x3*x4*x5", 5));
    StabilityOptions options;
    options.full_trace = false;
    for (auto _ : state) {
        StabilityReport report = stability_report(ideal, options);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_StabilityReport);

void BM_EnumerateMatroidal(benchmark::State& state) {
    for (auto _ : state) {
        auto ideals = enumerate_matroidal(6, 3);
        benchmark::DoNotOptimize(ideals);
    }
}
BENCHMARK(BM_EnumerateMatroidal);

}  // namespace

BENCHMARK_MAIN();
