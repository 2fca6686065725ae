// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "dunion/analysis.hpp"
#include "dunion/fixtures.hpp"
#include "dunion/transforms.hpp"

namespace {

using namespace dunion;

DenseMatrix unitary_of_depth(std::size_t depth) {
  return unitary_weighting(fixtures::complete2_loops_swap(), depth);
}

void BM_Multiply(benchmark::State& state) {
  const auto u = unitary_of_depth(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(adjoint(u), u));
  state.SetLabel(std::to_string(u.rows()) + "x" + std::to_string(u.rows()));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto u = unitary_of_depth(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::multiply(adjoint(u), u));
  state.SetLabel(std::to_string(u.rows()) + "x" + std::to_string(u.rows()));
}

void BM_IsUnitary(benchmark::State& state) {
  const auto u = unitary_of_depth(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_unitary(u));
}

void BM_IsUnitarySerial(benchmark::State& state) {
  const auto u = unitary_of_depth(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::is_unitary(u));
}

void BM_Diameter(benchmark::State& state) {
  const auto d = de_bruijn(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(d));
}

void BM_DiameterSerial(benchmark::State& state) {
  const auto d = de_bruijn(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::diameter(d));
}

void BM_ArcConnectivity(benchmark::State& state) {
  const auto d = de_bruijn(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arc_connectivity(d));
}

void BM_ArcConnectivitySerial(benchmark::State& state) {
  const auto d = de_bruijn(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::arc_connectivity(d));
}

void BM_VertexConnectivity(benchmark::State& state) {
  const auto d = de_bruijn(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(d));
}

void BM_VertexConnectivitySerial(benchmark::State& state) {
  const auto d = de_bruijn(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::vertex_connectivity(d));
}

void BM_DiagonalUnionDepth(benchmark::State& state) {
  const auto f = fixtures::complete2_loops_swap();
  for (auto _ : state)
    benchmark::DoNotOptimize(diagonal_union_depth(f, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Multiply)->DenseRange(4, 7);
BENCHMARK(BM_MultiplySerial)->DenseRange(4, 7);
BENCHMARK(BM_IsUnitary)->DenseRange(4, 7);
BENCHMARK(BM_IsUnitarySerial)->DenseRange(4, 7);
BENCHMARK(BM_Diameter)->DenseRange(6, 10, 2);
BENCHMARK(BM_DiameterSerial)->DenseRange(6, 10, 2);
BENCHMARK(BM_ArcConnectivity)->DenseRange(4, 7);
BENCHMARK(BM_ArcConnectivitySerial)->DenseRange(4, 6);
BENCHMARK(BM_VertexConnectivity)->DenseRange(4, 6);
BENCHMARK(BM_VertexConnectivitySerial)->DenseRange(4, 6);
BENCHMARK(BM_DiagonalUnionDepth)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
