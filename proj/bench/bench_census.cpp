// Serial reference census against the task-split arena kernel.

#include <benchmark/benchmark.h>

#include "skewlines/clique.hpp"
#include "skewlines/surface.hpp"

using namespace skewlines;

namespace {

const Surface& surf(int q) {
  static const Surface s2 = Surface::build(FieldSpec::build(2, 1));
  static const Surface s3 = Surface::build(FieldSpec::build(3, 1));
  return q == 2 ? s2 : s3;
}

void serial(benchmark::State& st) {
  const SkewGraph& g = surf(static_cast<int>(st.range(0))).graph;
  for (auto _ : st) benchmark::DoNotOptimize(census(g).total);
}

void parallel(benchmark::State& st) {
  const SkewGraph& g = surf(static_cast<int>(st.range(0))).graph;
  ParallelCensusOptions o;
  o.jobs = static_cast<int>(st.range(1));
  const int n = g.size();
  for (auto _ : st)
    benchmark::DoNotOptimize(census_parallel(g, {}, VertexSet::full(n), VertexSet(n), o).census.total);
}

}  // namespace

BENCHMARK(serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
