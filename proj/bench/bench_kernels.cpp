// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "tfg/cli.hpp"
#include "tfg/homology.hpp"
#include "tfg/metrics.hpp"
#include "tfg/random.hpp"

namespace {

std::vector<tfg::Point> samples(const tfg::GraphRef& g, std::size_t n) {
  tfg::Rng rng(42);
  std::vector<tfg::Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(tfg::random_point(*g, rng));
  return out;
}

void BM_GrowthTable(benchmark::State& state) {
  auto g = tfg::full_shift_graph(3);
  auto pts = samples(g, 32);
  for (auto _ : state) benchmark::DoNotOptimize(tfg::growth_table(g, pts, static_cast<std::size_t>(state.range(0))));
}

void BM_GrowthTableSerial(benchmark::State& state) {
  auto g = tfg::full_shift_graph(3);
  auto pts = samples(g, 32);
  for (auto _ : state)
    benchmark::DoNotOptimize(tfg::growth_table_serial(g, pts, static_cast<std::size_t>(state.range(0))));
}

void BM_ObstructionGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tfg::obstruction_grid(state.range(0)));
}

void BM_ObstructionGridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tfg::obstruction_grid_serial(state.range(0)));
}

tfg::io::Json manifest(std::int64_t n) {
  tfg::io::Json requests = tfg::io::Json::array();
  for (std::int64_t i = 0; i < n; ++i)
    requests.push_back({{"argv", {"homology", "thompson", "--n", std::to_string(2 + i % 40), "--m", std::to_string(2 + i % 7)}}});
  return {{"requests", requests}};
}

void BM_Batch(benchmark::State& state) {
  auto m = manifest(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tfg::cli::run_batch(m, false));
}

void BM_BatchSerial(benchmark::State& state) {
  auto m = manifest(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tfg::cli::run_batch(m, true));
}

}  // namespace

BENCHMARK(BM_GrowthTable)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrowthTableSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObstructionGrid)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObstructionGridSerial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Batch)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
