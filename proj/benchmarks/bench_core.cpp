#include <benchmark/benchmark.h>

#include "dtwin/family.hpp"
#include "dtwin/local_reduction.hpp"
#include "dtwin/search.hpp"
#include "dtwin/twin.hpp"

using namespace dtwin;

static void BM_FactorSemiprime(benchmark::State& state) {
  const BigInt n = BigInt("1000000007") * BigInt("998244353") * 4095;
  for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_FactorSemiprime);

static void BM_FamilyDiscriminantUnsplit(benchmark::State& state) {
  const FamilyParams p = family_params(state.range(0));
  const BigInt k = p.A * p.B * (p.A + p.B);
  for (auto _ : state) benchmark::DoNotOptimize(factor(k));
}
BENCHMARK(BM_FamilyDiscriminantUnsplit)->Arg(1)->Arg(1000)->Arg(1000000);

static void BM_FamilyDiscriminantSplit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_min_family(state.range(0)));
}
BENCHMARK(BM_FamilyDiscriminantSplit)->Arg(1)->Arg(1000)->Arg(1000000);

static void BM_TateAdditive(benchmark::State& state) {
  const WeierstrassModel m{0, 0, 0, 0, 3125};
  for (auto _ : state) benchmark::DoNotOptimize(tate_local(m, 5));
}
BENCHMARK(BM_TateAdditive);

static void BM_GlobalMinimalModel(benchmark::State& state) {
  const WeierstrassModel m = frey_curve(1996915, 32725616);
  for (auto _ : state) benchmark::DoNotOptimize(global_minimal_model(m));
}
BENCHMARK(BM_GlobalMinimalModel);

static void BM_SymbolicChecks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_checks());
}
BENCHMARK(BM_SymbolicChecks);

static void BM_FamilyInstance(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_family_instance(state.range(0)));
}
BENCHMARK(BM_FamilyInstance)->Arg(1)->Arg(50)->Arg(100000);

static void BM_FreySearch(benchmark::State& state) {
  SearchOptions opts;
  opts.verify = false;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_frey_search(n, n, opts));
}
BENCHMARK(BM_FreySearch)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
