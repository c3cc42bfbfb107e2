// Serial reference against the OpenMP kernels. Run with --benchmark_filter to pick one.
#include <benchmark/benchmark.h>

#include <filesystem>
#include <vector>

#include "striptopo/canonical.hpp"
#include "striptopo/document.hpp"
#include "striptopo/homeo.hpp"
#include "striptopo/topo_oracle.hpp"

using namespace striptopo;

namespace {

StripedSurface fixture(const char* name) {
  return load_surface(std::filesystem::path(STRIPTOPO_FIXTURE_DIR) / (std::string(name) + ".json"));
}

// Chain of n two-interval strips with reversing special gluings, like the five-strip example.
StripedSurface long_chain(std::size_t n) {
  std::vector<ModelStripSpec> strips;
  std::vector<GluingSpec> gluings;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "S" + std::to_string(i);
    strips.push_back(ModelStripSpec::make(id, {}, {id + ".u0", id + ".u1"}));
    if (i > 0) {
      gluings.push_back({"g" + std::to_string(i), "S" + std::to_string(i - 1) + ".u1", id + ".u0",
                         Orientation::Reversing});
    }
  }
  return build_surface(strips, gluings);
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_CanonicalCode(benchmark::State& state) {
  const StripedSurface s = long_chain(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(s, exec_of(state)));
}
BENCHMARK(BM_CanonicalCode)->ArgsProduct({{0, 1}, {5, 8, 12}})->Unit(benchmark::kMicrosecond);

void BM_BndTable(benchmark::State& state) {
  const FiniteBasisSpace sp = discretize(build_leaf_space(fixture("kaplan5")), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bnd_table(sp, exec_of(state)));
}
BENCHMARK(BM_BndTable)->ArgsProduct({{0, 1}, {5, 8, 16}})->Unit(benchmark::kMillisecond);

void BM_LevelMapEvaluate(benchmark::State& state) {
  const LevelMap h = shrink_leaf(-1.0, 1.0, 0.5);
  std::vector<Point> pts;
  for (int i = 0; i < state.range(1); ++i) pts.push_back({(i % 1000) * 0.01 - 5.0, (i % 97) / 48.5 - 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(h.evaluate(pts, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_LevelMapEvaluate)->ArgsProduct({{0, 1}, {10000, 100000}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
