// Serial engine vs master/worker engine on the commuting-matrices ideals.

#include <benchmark/benchmark.h>

#include "mgb/ideals.hpp"
#include "mgb/scheduler.hpp"

namespace {

void BM_Serial(benchmark::State& state) {
  const mgb::ProblemSpec spec = mgb::commuting_matrices(state.range(0));
  const mgb::PolyRing ring = spec.ring();
  for (auto _ : state) {
    auto result = mgb::buchberger_serial(ring, spec.grading, spec.generators, {});
    benchmark::DoNotOptimize(result.state.store.size());
  }
}

void BM_Master(benchmark::State& state) {
  const mgb::ProblemSpec spec = mgb::commuting_matrices(state.range(0));
  const mgb::PolyRing ring = spec.ring();
  const auto workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    auto result = mgb::run_master(ring, spec.grading, spec.generators, workers, {});
    benchmark::DoNotOptimize(result.state.store.size());
  }
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Master)
    ->ArgsProduct({{2, 3}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
