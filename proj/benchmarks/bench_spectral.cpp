#include <benchmark/benchmark.h>

#include "alphaspec/families.hpp"
#include "alphaspec/labeling.hpp"
#include "alphaspec/ordering.hpp"
#include "alphaspec/spectral.hpp"

using namespace alphaspec;

static void BM_PowerStar(benchmark::State& state) {
  auto h = star(static_cast<int>(state.range(0)), 3).graph;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_spectral_radius(h, 0.5).rho);
}
BENCHMARK(BM_PowerStar)->Arg(13)->Arg(50)->Arg(200);

static void BM_PowerTSupertree(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto h = t_supertree(1, 2, m - 4, 4).graph;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_spectral_radius(h, 0.95).rho);
}
BENCHMARK(BM_PowerTSupertree)->Arg(13)->Arg(50)->Arg(200);

static void BM_BfsSupertreeClasses(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto classes = enumerate_degree_classes(m);
  for (auto _ : state) {
    double sum = 0;
    for (const auto& c : classes) sum += alpha_spectral_radius(bfs_supertree(c, 3), 0.5).rho;
    benchmark::DoNotOptimize(sum);
  }
  state.counters["classes"] = static_cast<double>(classes.size());
}
BENCHMARK(BM_BfsSupertreeClasses)->Arg(10)->Arg(13)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FamilySolver(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_family_rho(Family::S4m5, 13, 4, 0.75).rho);
}
BENCHMARK(BM_FamilySolver);

static void BM_VerifyChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain(13, 3, 0.5).verdict);
}
BENCHMARK(BM_VerifyChain)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
