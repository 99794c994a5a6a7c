// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <vector>

#include "richness/fieldsim.hpp"
#include "richness/kernels.hpp"

namespace {

std::vector<std::uint32_t> observations(std::uint32_t categories, std::uint32_t per_category) {
  std::vector<std::uint32_t> obs;
  for (std::uint32_t c = 0; c < categories; ++c) obs.insert(obs.end(), per_category + c % 3, c);
  return obs;
}

void BM_BootstrapSerial(benchmark::State& state) {
  const auto obs = observations(50, 20);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    richness::kernels::bootstrap_distinct_serial(obs, 50, 42, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_BootstrapOmp(benchmark::State& state) {
  const auto obs = observations(50, 20);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    richness::kernels::bootstrap_distinct_omp(obs, 50, 42, out);
    benchmark::DoNotOptimize(out.data());
  }
}

const std::vector<std::uint64_t> kCounts = {14, 10, 10, 9, 1, 3, 2, 1, 1, 5};

void BM_SubsetsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        richness::kernels::vanished_histogram_subsets_serial(kCounts, static_cast<std::uint32_t>(state.range(0))));
  }
}

void BM_SubsetsOmp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        richness::kernels::vanished_histogram_subsets_omp(kCounts, static_cast<std::uint32_t>(state.range(0))));
  }
}

void BM_CompositionsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(richness::kernels::vanished_histogram_compositions_serial(
        kCounts, static_cast<std::uint32_t>(state.range(0))));
  }
}

void BM_CompositionsOmp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(richness::kernels::vanished_histogram_compositions_omp(
        kCounts, static_cast<std::uint32_t>(state.range(0))));
  }
}

void BM_Experiment(benchmark::State& state) {
  richness::fieldsim::FieldModel m;
  m.kind = richness::fieldsim::FieldKind::explicit_abundances;
  m.abundances = {3182, 2273, 2273, 2045, 227};
  const std::vector<richness::MethodSpec> methods = {richness::MethodSpec::parse("bootstrap"),
                                                     richness::MethodSpec::parse("jackknife:3")};
  richness::fieldsim::ExperimentOptions opts;
  opts.exec = state.range(0) == 0 ? richness::Execution::serial : richness::Execution::parallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(richness::fieldsim::run_experiment(m, 44, 200, methods, 0.05, 7, opts));
  }
}

}  // namespace

BENCHMARK(BM_BootstrapSerial)->Arg(200)->Arg(10000);
BENCHMARK(BM_BootstrapOmp)->Arg(200)->Arg(10000);
BENCHMARK(BM_SubsetsSerial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_SubsetsOmp)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_CompositionsSerial)->Arg(3)->Arg(6);
BENCHMARK(BM_CompositionsOmp)->Arg(3)->Arg(6);
BENCHMARK(BM_Experiment)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
