#include <benchmark/benchmark.h>

#include "angcalc/verify.hpp"
#include "angcalc/wide.hpp"

using namespace angcalc;

namespace {

// (d, l, m) triples with periods 12, 16 and 20.
FamilyParams params_for(int which) {
  switch (which) {
    case 0: return validate_params(4, 4, 9);
    case 1: return validate_params(6, 4, 13);
    default: return validate_params(2, 10, 11);
  }
}

template <auto Fn>
void bm_enumerate(benchmark::State& state) {
  const auto p = params_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(p));
  state.counters["period"] = p.period();
}

template <auto Fn>
void bm_sweep(benchmark::State& state) {
  const auto p = params_for(static_cast<int>(state.range(0)));
  const auto specs = enumerate_wide(p);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(p, specs));
  state.counters["specs"] = static_cast<double>(specs.size());
}

}  // namespace

BENCHMARK(bm_enumerate<serial::enumerate_wide>)->Name("enumerate_wide/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate<enumerate_wide>)->Name("enumerate_wide/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_enumerate<serial::enumerate_wide_oracle>)->Name("enumerate_wide_oracle/serial")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate<enumerate_wide_oracle>)->Name("enumerate_wide_oracle/parallel")->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_sweep<serial::sweep_theorem_b>)->Name("sweep_theorem_b/serial")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep<sweep_theorem_b>)->Name("sweep_theorem_b/parallel")->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_sweep<serial::sweep_subcategory>)->Name("sweep_subcategory/serial")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep<sweep_subcategory>)->Name("sweep_subcategory/parallel")->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
