#include <benchmark/benchmark.h>

#include "windrose/draw.hpp"
#include "windrose/generate.hpp"
#include "windrose/labeling.hpp"
#include "windrose/verify.hpp"

using namespace windrose;

namespace {

void BM_pipeline_delaunay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gi = generate_delaunay(n, 17);
  PipelineOptions opts;
  opts.self_verify = false;
  for (auto _ : state) {
    auto res = windrose_pipeline(gi.graph, gi.q, opts);
    benchmark::DoNotOptimize(res.drawing);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_pipeline_delaunay)->RangeMultiplier(2)->Range(16, 2048)->Complexity();

void BM_assignment_delaunay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gi = generate_delaunay(n, 17);
  for (auto _ : state) {
    auto r = find_large_angle_assignment(gi.graph, gi.q);
    benchmark::DoNotOptimize(r.labeling);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_assignment_delaunay)->RangeMultiplier(2)->Range(16, 2048)->Complexity();

void BM_verify_delaunay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gi = generate_delaunay(n, 17);
  auto res = windrose_pipeline(gi.graph, gi.q);
  VerifyOptions vo;
  vo.sweep = state.range(1) != 0;
  for (auto _ : state) {
    auto rep = verify_drawing(gi.graph, gi.q, *res.drawing, vo);
    benchmark::DoNotOptimize(rep.violations);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_verify_delaunay)->ArgsProduct({{64, 256, 1024}, {0, 1}});

void BM_three_tree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gi = generate_apollonian(n, 23);
  for (auto _ : state) {
    auto d = three_tree_block_drawing(gi.graph, gi.q);
    benchmark::DoNotOptimize(d.points);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_three_tree)->Arg(10)->Arg(20)->Arg(40)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
