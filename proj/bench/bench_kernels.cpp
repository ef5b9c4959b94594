// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wpt/kernels.hpp"
#include "wpt/scenario.hpp"
#include "wpt/seeding.hpp"

namespace {

wpt::LinkTable random_table(std::size_t k, std::size_t l, std::size_t n) {
  wpt::Rng rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  wpt::LinkTable t(k, l, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t p = 0; p < l; ++p)
      for (std::size_t i = 0; i < n; ++i) t(j, p, i) = u(rng);
  return t;
}

const wpt::LinkTable& search_table() {
  static const wpt::LinkTable t = random_table(5, 5, 16);
  return t;
}

const wpt::Scenario& large_scenario() {
  static const wpt::Scenario sc = [] {
    wpt::ScenarioParams p;
    p.receivers = 400;
    p.codes = 64;
    return wpt::make_scenario(p, 3, wpt::Exec::Serial);
  }();
  return sc;
}

std::vector<wpt::Complex> amplitudes() {
  return {{0.3, 0.1}, {-0.2, 0.5}, {0.05, -0.4}, {0.7, 0.0}};
}

void BM_ExhaustiveSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(wpt::kernels::exhaustive_serial(search_table(), 0.5, 0.0));
}
void BM_ExhaustiveParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(wpt::kernels::exhaustive_parallel(search_table(), 0.5, 0.0));
}

void BM_GainTableSerial(benchmark::State& st) {
  const wpt::Scenario& sc = large_scenario();
  for (auto _ : st)
    benchmark::DoNotOptimize(wpt::kernels::gain_table_serial(sc.link_rows, sc.codebook, sc.geometry.receivers(),
                                                             sc.geometry.transmitters()));
}
void BM_GainTableParallel(benchmark::State& st) {
  const wpt::Scenario& sc = large_scenario();
  for (auto _ : st)
    benchmark::DoNotOptimize(wpt::kernels::gain_table_parallel(sc.link_rows, sc.codebook, sc.geometry.receivers(),
                                                               sc.geometry.transmitters()));
}

void BM_SampledSerial(benchmark::State& st) {
  const auto amp = amplitudes();
  for (auto _ : st)
    benchmark::DoNotOptimize(wpt::kernels::sampled_energy_serial(amp, 0.5, 1 << 20, 11,
                                                                 wpt::SignalModel::ComplexGaussian));
}
void BM_SampledParallel(benchmark::State& st) {
  const auto amp = amplitudes();
  for (auto _ : st)
    benchmark::DoNotOptimize(wpt::kernels::sampled_energy_parallel(amp, 0.5, 1 << 20, 11,
                                                                   wpt::SignalModel::ComplexGaussian));
}

}  // namespace

BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GainTableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GainTableParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampledSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
