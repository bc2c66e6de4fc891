#include <benchmark/benchmark.h>

#include "toricnash/catalog.hpp"
#include "toricnash/minimal_model.hpp"
#include "toricnash/valuations.hpp"

using namespace toricnash;

namespace {

Cone a_n(long long n) { return cone_from_rays({LatticeVector{1, 0}, LatticeVector{1, n + 1}}, 2); }

std::vector<Cone> random_batch(std::size_t rank) {
  RandomConeOptions opts;
  opts.rank = rank;
  opts.bound = 8;
  std::vector<Cone> out;
  for (const auto& s : random_cones(17, 8, opts)) out.push_back(s.to_cone());
  return out;
}

void BM_HilbertBasis(benchmark::State& state) {
  const auto cones = random_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& c : cones) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasis)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NashValuations(benchmark::State& state) {
  const auto cones = random_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& c : cones) benchmark::DoNotOptimize(nash_valuations(c));
}
BENCHMARK(BM_NashValuations)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NashValuationsAn(benchmark::State& state) {
  const auto c = a_n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nash_valuations(c));
}
BENCHMARK(BM_NashValuationsAn)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void BM_MinimalModelFan(benchmark::State& state) {
  const auto cones = random_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& c : cones) benchmark::DoNotOptimize(minimal_model_fan(c));
}
BENCHMARK(BM_MinimalModelFan)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
