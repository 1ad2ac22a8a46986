#include <benchmark/benchmark.h>

#include "gha/algebra.hpp"
#include "gha/recurrence.hpp"
#include "gha/spectral.hpp"
#include "gha/substitution.hpp"

namespace {

gha::CoefficientVector unit(std::size_t k) {
  return gha::CoefficientVector(std::vector<gha::Rational>(k, gha::Rational(1)));
}

void BM_IterateSequence(benchmark::State& state) {
  const auto c = unit(static_cast<std::size_t>(state.range(0)));
  const auto seeds = gha::unit_seeds(c);
  for (auto _ : state) benchmark::DoNotOptimize(gha::iterate_sequence(c, seeds, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_IterateSequence)->Args({3, 1000})->Args({3, 10000})->Args({6, 10000});

void BM_MatrixPower(benchmark::State& state) {
  const auto c = unit(static_cast<std::size_t>(state.range(0)));
  const auto seeds = gha::unit_seeds(c);
  for (auto _ : state)
    benchmark::DoNotOptimize(gha::matrix_power_sequence(c, seeds, static_cast<unsigned long long>(state.range(1))));
}
BENCHMARK(BM_MatrixPower)->Args({3, 1000})->Args({3, 10000})->Args({6, 10000});

void BM_Miles(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gha::miles_number(k, state.range(1)));
}
BENCHMARK(BM_Miles)->Args({2, 40})->Args({3, 60})->Args({6, 60});

void BM_FindRoots(benchmark::State& state) {
  const auto poly = gha::char_poly(unit(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gha::find_roots(poly));
}
BENCHMARK(BM_FindRoots)->Arg(2)->Arg(5)->Arg(10);

void BM_FindRootsRepeated(benchmark::State& state) {
  // (x + 1)^3
  const gha::CoefficientVector c({gha::Rational(-3), gha::Rational(-3), gha::Rational(-1)});
  const auto poly = gha::char_poly(c);
  for (auto _ : state) benchmark::DoNotOptimize(gha::find_roots(poly));
}
BENCHMARK(BM_FindRootsRepeated);

void BM_GrowChain(benchmark::State& state) {
  const auto rule = gha::SubstitutionRule::parse("A:ABAC,B:A,C:BB");
  for (auto _ : state)
    benchmark::DoNotOptimize(gha::grow_chain(rule, static_cast<std::size_t>(state.range(0)), 100000));
}
BENCHMARK(BM_GrowChain)->Arg(10)->Arg(12)->Arg(200);

void BM_VerifyExact(benchmark::State& state) {
  const auto spec = gha::GHASpec::linear(unit(3), {1, 0, 0});
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto ops = gha::truncated_operators_exact(spec, dim);
    benchmark::DoNotOptimize(gha::verify_relations(ops, spec, 1e-10));
  }
}
BENCHMARK(BM_VerifyExact)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
