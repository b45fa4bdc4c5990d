#include <benchmark/benchmark.h>

#include "fgm/baselines.hpp"
#include "fgm/generator.hpp"
#include "fgm/ingest.hpp"
#include "fgm/metrics.hpp"

namespace {

std::vector<fgm::NodeAttr> synth_attrs(std::size_t n, std::uint64_t seed) {
  fgm::SynthCubeSpec spec;
  spec.n = n;
  spec.seed = seed;
  const fgm::Cube cube = fgm::synth_cube(spec);
  return fgm::cube_to_attrs(cube, fgm::synth_cube_schema(spec.geo_dim));
}

void bm_generate_knn(benchmark::State& state) {
  const auto attrs = synth_attrs(static_cast<std::size_t>(state.range(0)), 3);
  fgm::GenParams params;
  params.seed = 3;
  fgm::GenerateOptions opts;
  opts.record_trace = false;
  for (auto _ : state) {
    auto index = fgm::make_index(attrs, params, fgm::BackendKind::kExactKnn);
    benchmark::DoNotOptimize(fgm::generate(attrs, params, *index, opts));
  }
  state.SetComplexityN(state.range(0));
}

void bm_generate_lsh(benchmark::State& state) {
  const auto attrs = synth_attrs(static_cast<std::size_t>(state.range(0)), 3);
  fgm::GenParams params;
  params.seed = 3;
  fgm::GenerateOptions opts;
  opts.record_trace = false;
  for (auto _ : state) {
    auto index = fgm::make_index(attrs, params, fgm::BackendKind::kLsh);
    benchmark::DoNotOptimize(fgm::generate(attrs, params, *index, opts));
  }
  state.SetComplexityN(state.range(0));
}

void bm_lsh_query(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto attrs = synth_attrs(n, 7);
  fgm::GenParams params;
  auto index = fgm::make_index(attrs, params, fgm::BackendKind::kLsh);
  std::vector<fgm::QueryPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(fgm::make_query_point(attrs[i], params.mu_t, params.mu_c));
    index->insert(static_cast<fgm::NodeId>(i), pts.back());
  }
  fgm::Rng rng(1);
  std::size_t q = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        index->query(pts[q % n], static_cast<fgm::NodeId>(n), 40, rng));
    ++q;
  }
}

void bm_ba(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgm::gen_ba(n, 15, 3));
  }
  state.SetComplexityN(state.range(0));
}

void bm_clustering(benchmark::State& state) {
  const auto attrs = synth_attrs(static_cast<std::size_t>(state.range(0)), 3);
  fgm::GenParams params;
  params.seed = 3;
  auto index = fgm::make_index(attrs, params, fgm::BackendKind::kLsh);
  fgm::GenerateOptions opts;
  opts.record_trace = false;
  fgm::Graph g = fgm::generate(attrs, params, *index, opts).graph;
  g.finalize();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgm::clustering_avg(g, 4));
  }
}

}  // namespace

BENCHMARK(bm_generate_knn)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_generate_lsh)
    ->RangeMultiplier(4)
    ->Range(1000, 64000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);
BENCHMARK(bm_lsh_query)->Arg(10000)->Arg(100000);
BENCHMARK(bm_ba)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_clustering)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
