#include <benchmark/benchmark.h>

#include <escapelab/avoid.hpp>
#include <escapelab/simulate.hpp>
#include <escapelab/spectral.hpp>

using namespace escapelab;

static void BM_CountAvoiding(benchmark::State& state) {
  const PatternSet p = PatternSet::parse("10100101");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiding(p, n));
}
BENCHMARK(BM_CountAvoiding)->Arg(64)->Arg(256)->Arg(1024);

static void BM_BruteForceCount(benchmark::State& state) {
  const PatternSet p = PatternSet::parse("0110");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(p, n));
}
BENCHMARK(BM_BruteForceCount)->Arg(12)->Arg(18);

static void BM_ThetaRoot(benchmark::State& state) {
  const Word w = Word::from_index(0x2d5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_root(w));
}
BENCHMARK(BM_ThetaRoot)->Arg(10)->Arg(16)->Arg(24);

static void BM_ThetaMatrix(benchmark::State& state) {
  const PatternSet p = PatternSet::single(Word::from_index(0x2d5, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(theta_matrix(p));
}
BENCHMARK(BM_ThetaMatrix)->Arg(10)->Arg(16)->Arg(24);

static void BM_ScanLevel(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_level(level));
}
BENCHMARK(BM_ScanLevel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SurvivalMc(benchmark::State& state) {
  SimConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.horizon = 40;
  for (auto _ : state) benchmark::DoNotOptimize(survival_mc(MapSpec::doubling(), MarkovCylinder{4, 1}, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SurvivalMc)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
