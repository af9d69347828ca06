// Microbenchmarks for the hot paths: exact orientation predicates, the rational
// simplex, reduction, vertical extension and the brute-force embedding oracle.

#include <benchmark/benchmark.h>

#include <sldisk/disk.hpp>
#include <sldisk/errors.hpp>
#include <sldisk/extend.hpp>
#include <sldisk/geometry.hpp>
#include <sldisk/lp.hpp>
#include <sldisk/maps.hpp>
#include <sldisk/polytope.hpp>
#include <sldisk/reduce.hpp>

#include <vector>

using namespace sldisk;

namespace {

SLDisk disk_of_size(int n_interior, int n_boundary, ShapeClass shape) {
  for (unsigned long long seed = 7;; ++seed) {
    try {
      return generate_disk(seed, n_interior, n_boundary, shape);
    } catch (const Error&) {
    }
  }
}

void BM_Orientation(benchmark::State& state) {
  const Point a{Rational(3, 7), Rational(-2, 9)};
  const Point b{Rational(141, 13), Rational(5, 11)};
  const Point c{Rational(-8, 3), Rational(977, 31)};
  for (auto _ : state) benchmark::DoNotOptimize(orientation(a, b, c));
}
BENCHMARK(BM_Orientation);

void BM_LpFeasibleInterior(benchmark::State& state) {
  const SLDisk d = disk_of_size(4, 8, ShapeClass::StrictlyConvex);
  VolumeSystem sys;
  sys.disk = &d;
  for (size_t v = 0; v < d.vertices.size(); ++v) sys.pinned_x[static_cast<int>(v)] = d.vertices[v].x;
  for (int v : boundary_vertices(d)) sys.pinned_y[v] = d.vertices[v].y;
  const HPolytope p = build_system(sys);
  for (auto _ : state) benchmark::DoNotOptimize(feasible_interior(p));
}
BENCHMARK(BM_LpFeasibleInterior);

void BM_Reduce(benchmark::State& state) {
  const SLDisk d = disk_of_size(static_cast<int>(state.range(0)), 10, ShapeClass::StrictlyConvex);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(d, 0));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(4);

void BM_VerticalExtend(benchmark::State& state) {
  SLDisk d;
  d.vertices = {{0, 0}, {Rational(1, 2), Rational(-1, 2)}, {1, 0}, {Rational(1, 2), Rational(1, 2)}};
  d.triangles = {{0, 1, 3}, {1, 2, 3}};
  const VertexMap f = restrict_to_boundary(d, identity_map(d));
  for (auto _ : state) benchmark::DoNotOptimize(vertical_extend(d, f));
}
BENCHMARK(BM_VerticalExtend);

void BM_Extend(benchmark::State& state) {
  const SLDisk d = disk_of_size(static_cast<int>(state.range(0)), 10, ShapeClass::StrictlyConvex);
  const VertexMap f = restrict_to_boundary(d, identity_map(d));
  for (auto _ : state) benchmark::DoNotOptimize(extend(d, f));
}
BENCHMARK(BM_Extend)->Arg(2)->Arg(4);

void BM_EmbeddingOracle(benchmark::State& state) {
  const SLDisk d = disk_of_size(5, 12, ShapeClass::StrictlyConvex);
  const VertexMap m = identity_map(d);
  for (auto _ : state) benchmark::DoNotOptimize(is_embedding(d, m));
}
BENCHMARK(BM_EmbeddingOracle);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
