#include <hecke/algebra.hpp>
#include <hecke/psmodule.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

void bm_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::AlgebraContext ctx(n, hecke::Rat(1));
  std::mt19937_64 rng(7);
  const auto a = hecke::random_element(ctx, 3, 4, rng);
  const auto b = hecke::random_element(ctx, 3, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::multiply(ctx, a, b));
}
BENCHMARK(bm_multiply)->Arg(2)->Arg(3)->Arg(4);

void bm_build_series(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::AlgebraContext ctx(n, hecke::Rat(1));
  std::vector<hecke::Rat> gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = hecke::Rat(3 * i + 1);
  const hecke::SignCharacter mu(std::vector<int>(n, 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(hecke::build_principal_series_b(ctx, {gamma, mu}));
}
BENCHMARK(bm_build_series)->Arg(2)->Arg(3)->Arg(4);

void bm_burnside(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::AlgebraContext ctx(n, hecke::Rat(1));
  std::vector<hecke::Rat> gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = hecke::Rat(3 * i + 1);
  const hecke::SignCharacter mu(std::vector<int>(n, 1));
  const auto m = hecke::build_principal_series_b(ctx, {gamma, mu});
  for (auto _ : state) benchmark::DoNotOptimize(hecke::burnside_irreducible(m));
}
BENCHMARK(bm_burnside)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
