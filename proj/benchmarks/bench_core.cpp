#include <benchmark/benchmark.h>

#include "reeslift/complexes.hpp"
#include "reeslift/determinantal.hpp"
#include "reeslift/graded.hpp"
#include "reeslift/schur.hpp"
#include "reeslift/weyl.hpp"

using namespace reeslift;

static void BM_PolyMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Shape shape{n, n - 1};
    Poly product{Rat(1)};
    for (int i = 1; i <= n; ++i) product = product * signed_minor(shape, i);
    for (auto _ : state) benchmark::DoNotOptimize(product * product);
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(4);

static void BM_Minor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Shape shape{n, n - 1};
    for (auto _ : state) benchmark::DoNotOptimize(maximal_minor(shape, 1));
}
BENCHMARK(BM_Minor)->Arg(4)->Arg(5);

static void BM_Phi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    IndexSet full;
    for (int a = 1; a <= n; ++a) full.push_back(a);
    for (auto _ : state) benchmark::DoNotOptimize(phi(n, 3, n, full));
}
BENCHMARK(BM_Phi)->Arg(3)->Arg(4);

static void BM_GradedRank(benchmark::State& state) {
    const Shape shape{3, 2};
    const auto gens = generalized_permanents(shape, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(graded_component_dim(shape, gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GradedRank)->Arg(3)->Arg(4);

static void BM_SchurDim(benchmark::State& state) {
    const Partition lam{4, 3, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(schur_dim(lam, 8));
}
BENCHMARK(BM_SchurDim);

static void BM_LaurentApply(benchmark::State& state) {
    const Shape shape{3, 2};
    const StarOperator op(maximal_minor(shape, 1) * maximal_minor(shape, 2));
    const LaurentClass socle = LaurentClass::socle(shape);
    for (auto _ : state) benchmark::DoNotOptimize(apply_to_laurent(op, socle));
}
BENCHMARK(BM_LaurentApply);

BENCHMARK_MAIN();
