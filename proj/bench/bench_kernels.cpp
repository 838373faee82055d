// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>

#include "gspec/experiment.hpp"
#include "gspec/oracle.hpp"

namespace {

using namespace gspec;

ExperimentConfig experiment_config(int workers) {
  ExperimentConfig cfg;
  cfg.n = 18;
  cfg.trials = 64;
  cfg.seed = 11;
  cfg.workers = workers;
  return cfg;
}

void BM_ExperimentSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(experiment_config(1)).row);
}

void BM_ExperimentParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(experiment_config(workers)).row);
}

void BM_BucketSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bucket_by_spectrum_serial(6));
}

void BM_BucketParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bucket_by_spectrum(6, workers));
}

void BM_SoundnessSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(soundness_harness_serial(6).violations);
}

void BM_SoundnessParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(soundness_harness(6, workers).violations);
}

}  // namespace

BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BucketSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BucketParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SoundnessSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
