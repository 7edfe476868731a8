#include <benchmark/benchmark.h>

#include <random>

#include "equidim/errors.hpp"
#include "equidim/pipeline.hpp"
#include "support.hpp"

using namespace equidim;
using namespace equidim::testing;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_BuildSemigroup(benchmark::State& state) {
  const auto a = state.range(0) == 0 ? example_5_7() : example_5_8();
  for (auto _ : state) benchmark::DoNotOptimize(build_semigroup(a));
}
BENCHMARK(BM_BuildSemigroup)->Arg(0)->Arg(1);

static void BM_AnalyzeFixture(benchmark::State& state) {
  const auto a = state.range(0) == 0 ? example_5_7() : example_5_8();
  PipelineOptions opt;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a, opt));
}
BENCHMARK(BM_AnalyzeFixture)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// random n <= 5 actions, fixed seed; capped instances are skipped
static void BM_AnalyzeRandom(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<WeightedAction> actions;
  for (int i = 0; i < 20; ++i) actions.push_back(random_action(rng, 5));
  PipelineOptions opt;
  opt.workers = 1;
  for (auto _ : state)
    for (const auto& a : actions) {
      try {
        benchmark::DoNotOptimize(analyze(a, opt));
      } catch (const ResourceCapError&) {
      }
    }
}
BENCHMARK(BM_AnalyzeRandom)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
