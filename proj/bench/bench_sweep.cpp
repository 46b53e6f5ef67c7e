// Serial reference sweep against the OpenMP bitset kernel, plus the exact
// solver on the construction family.

#include <benchmark/benchmark.h>

#include <filesystem>

#include "acyclic/construction.hpp"
#include "acyclic/scan.hpp"
#include "acyclic/solvers.hpp"

using namespace acyclic;

namespace {

UndirectedGraph tight_graph(std::size_t n) {
  const auto dir = std::filesystem::path(ACYCLIC_FIXTURE_DIR);
  const auto name = n < 10 ? "triangulations_n0" + std::to_string(n) + ".pc"
                           : "triangulations_n" + std::to_string(n) + ".pc";
  for (const auto& g : read_planar_code_file(dir / name))
    if (is_tight(g.graph)) return g.graph;
  return {};
}

void BM_SweepSerial(benchmark::State& state) {
  const auto g = tight_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(orientation_sweep_serial(g, g.order() / 2 + 1));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto g = tight_graph(static_cast<std::size_t>(state.range(0)));
  const SweepOptions opts{.jobs = static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(orientation_sweep(g, g.order() / 2 + 1, opts));
}

void BM_MinFvsConstruction(benchmark::State& state) {
  const auto c = construct(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_fvs(c.graph));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->Args({6, 1})
    ->Args({8, 1})
    ->Args({8, 2})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinFvsConstruction)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
