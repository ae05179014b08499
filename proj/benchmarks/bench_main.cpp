#include <benchmark/benchmark.h>

#include "lcak/catalog.hpp"
#include "lcak/fuzz.hpp"
#include "lcak/report.hpp"

using namespace lcak;

namespace {

const AlmostHermitianStructure<Rational>& a41() { return catalog_entry("A4_1").structure; }

void BM_AnalyzeExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a41()));
}
BENCHMARK(BM_AnalyzeExact);

void BM_AnalyzeFloat(benchmark::State& state) {
  const auto s = a41().cast<double>();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_AnalyzeFloat);

void BM_ClassifyMetric(benchmark::State& state) {
  const auto geo = analyze(a41());
  for (auto _ : state) benchmark::DoNotOptimize(classify_metric(geo));
}
BENCHMARK(BM_ClassifyMetric);

void BM_AnalyzeRandom6(benchmark::State& state) {
  Rng rng(sample_seed(11, 0));
  const auto s = random_lcs(rng, 6);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_AnalyzeRandom6);

void BM_Feasibility(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_feasibility(a41()));
}
BENCHMARK(BM_Feasibility);

void BM_Report(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(to_json(run_report(a41(), "A4_1")));
}
BENCHMARK(BM_Report);

void BM_FuzzSample(benchmark::State& state) {
  FuzzOptions o;
  o.count = 1;
  o.threads = 1;
  o.family = FuzzFamily::AlmostAbelian4d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzz(o));
    ++o.seed;
  }
}
BENCHMARK(BM_FuzzSample);

}  // namespace
BENCHMARK_MAIN();
