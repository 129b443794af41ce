#include <benchmark/benchmark.h>

#include "atlas/graphs.hpp"

using namespace atlas;

namespace {

ExactMatrix random_rational_matrix(int n, unsigned seed) {
  ExactMatrix m(n, n);
  unsigned state = seed;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      state = state * 1664525u + 1013904223u;
      m.at(r, c) = QSqrt2(static_cast<int>(state % 9) - 4);
    }
  return m;
}

void BM_rref(benchmark::State& state) {
  ExactMatrix m = random_rational_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rref)->Arg(6)->Arg(12)->Arg(24)->Complexity();

void BM_enumerate_pil(benchmark::State& state) {
  std::vector<int> g(static_cast<int>(state.range(0)));
  for (size_t i = 0; i < g.size(); ++i) g[i] = static_cast<int>(i) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pil(g).size());
}
BENCHMARK(BM_enumerate_pil)->Arg(4)->Arg(5)->Arg(6);

void BM_build_atlas_so5(benchmark::State& state) {
  for (auto _ : state) {
    Atlas atlas(Family::B, 5);
    benchmark::DoNotOptimize(atlas.size());
  }
}
BENCHMARK(BM_build_atlas_so5);

void BM_weak_graph_so5(benchmark::State& state) {
  Atlas atlas(Family::B, 5);
  for (auto _ : state) {
    OrbitGraph graph(atlas);
    benchmark::DoNotOptimize(graph.weak_edges().size());
  }
}
BENCHMARK(BM_weak_graph_so5);

void BM_canonicalize_so5(benchmark::State& state) {
  Atlas atlas(Family::B, 5);
  ExactMatrix moved =
      random_borel(atlas.ctx(), 11) * embed_flag(atlas.ctx(), atlas.orbit(atlas.size() - 1).flag);
  for (auto _ : state) benchmark::DoNotOptimize(atlas.canonicalize(moved).id);
}
BENCHMARK(BM_canonicalize_so5);

} // namespace

BENCHMARK_MAIN();
