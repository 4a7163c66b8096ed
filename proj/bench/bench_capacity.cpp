// Serial reference vs OpenMP kernels: power matrix, event batch, full sweep.

#include <benchmark/benchmark.h>

#include "imwn/capacity.hpp"
#include "imwn/harness.hpp"

using namespace imwn;

namespace {

struct Fixture {
  NodeGeometry geo;
  RadioConfig radio;
  std::vector<ReceptionEvent> events;

  explicit Fixture(int nodes) : geo(LayoutConfig{nodes, 2, 100.0, 300.0}) {
    const Schedule schedule = make_schedule({3, nodes, Mode::NC});
    const std::vector<Route> routes{stream_route(geo, 0, 1, nodes), stream_route(geo, 1, 1, nodes)};
    events = reception_events(schedule, geo, routes);
  }
};

void BM_PowerMatrixSerial(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(received_power_matrix_serial(f.geo, f.radio));
}

void BM_PowerMatrixOmp(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(received_power_matrix(f.geo, f.radio));
}

void BM_EventsSerial(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_events_serial(f.events, f.geo, f.radio));
}

void BM_EventsOmp(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_events(f.events, f.geo, f.radio));
}

void BM_SweepSerial(benchmark::State& state) {
  const ExperimentSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec));
}

void BM_SweepOmp(benchmark::State& state) {
  const ExperimentSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}

}  // namespace

BENCHMARK(BM_PowerMatrixSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerMatrixOmp)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EventsSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EventsOmp)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
