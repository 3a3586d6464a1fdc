#include <benchmark/benchmark.h>

#include <random>

#include "hspec/filtration.hpp"
#include "hspec/hausdorff.hpp"
#include "hspec/oracle.hpp"

using namespace hspec;

namespace {

GroupParams params(const benchmark::State& state) {
  return GroupParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
}

void BM_Multiply(benchmark::State& state) {
  const GroupParams P = params(state);
  std::mt19937_64 rng(0);
  const Subgroup G = Subgroup::whole(P);
  std::vector<Element> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_element(G, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(xs[i % 64], xs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Args({3, 1})->Args({3, 2})->Args({5, 1});

void BM_NormalClosure(benchmark::State& state) {
  const GroupParams P = params(state);
  const Element z = zgen(2, 1, P);
  for (auto _ : state) benchmark::DoNotOptimize(normal_closure(std::span<const Element>(&z, 1), P));
}
BENCHMARK(BM_NormalClosure)->Args({3, 1})->Args({3, 2});

void BM_Series(benchmark::State& state) {
  const GroupParams P = GroupParams::make(3, 2);
  const auto kind = static_cast<SeriesKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series(kind, P));
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Series)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_PowerSubgroup(benchmark::State& state) {
  const GroupParams P = params(state);
  const NormalSubgroup G = NormalSubgroup::whole(P);
  for (auto _ : state) benchmark::DoNotOptimize(power_subgroup(G, 1));
}
BENCHMARK(BM_PowerSubgroup)->Args({3, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_Dial(benchmark::State& state) {
  const FiltrationSeries L = series(SeriesKind::L, GroupParams::make(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(dial_density(Rational(1, 2), L));
}
BENCHMARK(BM_Dial)->Unit(benchmark::kMillisecond);

void BM_OracleBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(OracleGroup(GroupParams::make(3, 1)));
}
BENCHMARK(BM_OracleBuild)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
