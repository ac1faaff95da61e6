#include <benchmark/benchmark.h>

#include "lucastk/appearance.hpp"
#include "lucastk/solvers.hpp"
#include "lucastk/term_factor.hpp"

using namespace lucastk;

static void BM_TermDoubling(benchmark::State& state) {
  auto pell = LucasPair::pell();
  for (auto _ : state) benchmark::DoNotOptimize(term(pell, state.range(0)));
}
BENCHMARK(BM_TermDoubling)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_TermMod(benchmark::State& state) {
  auto pell = LucasPair::pell();
  for (auto _ : state) benchmark::DoNotOptimize(term_mod_u64(pell, 1'000'000'007ULL, 999'999'999'989ULL));
}
BENCHMARK(BM_TermMod);

static void BM_FactorSemiprime(benchmark::State& state) {
  Int n = Int("1000000007") * Int("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_FactorSemiprime);

static void BM_FactorFibonacci(benchmark::State& state) {
  for (auto _ : state) {
    Factorization f = factor(term(LucasPair::fibonacci(), state.range(0)).u);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FactorFibonacci)->Arg(60)->Arg(90);

static void BM_OrderOfAppearance(benchmark::State& state) {
  auto pell = LucasPair::pell();
  for (auto _ : state) benchmark::DoNotOptimize(order_of_appearance_u64(pell, 104729));
}
BENCHMARK(BM_OrderOfAppearance);

static void BM_Census(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(appearance_census(LucasPair::pell(), static_cast<std::uint64_t>(state.range(0)),
                                               CensusPredicate::z_odd));
}
BENCHMARK(BM_Census)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Wieferich(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wieferich_scan(10, static_cast<std::uint64_t>(state.range(0)), 2));
}
BENCHMARK(BM_Wieferich)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
