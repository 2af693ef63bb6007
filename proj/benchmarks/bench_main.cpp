#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bdc/chainmail.hpp"
#include "bdc/exact.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/lattice.hpp"
#include "bdc/plumbing.hpp"
#include "bdc/spinc.hpp"

using namespace bdc;

namespace {

// Wheel-like white graph: a cycle of n rim vertices, each also joined to
// the hub twice. Deterministic, planar, odd and even determinants mixed.
MarkedGraph wheel(int n) {
  Multigraph rim(n);
  for (int i = 0; i < n; ++i) rim.add_edge(i, (i + 1) % n);
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), -4);
  return close_with_hub(rim, w);
}

PlaneGraph plane_cycle(int n) {
  PlaneGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const IntMatrix g = goeritz(wheel(n)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(determinant(g));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 64);

void BM_OrbitMaximum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const IntMatrix g = goeritz(wheel(n)).matrix;
  IntVector v = g.diagonal();
  for (std::size_t i = 0; i < v.size(); i += 3) v[i] += 2;
  for (auto _ : state) benchmark::DoNotOptimize(orbit_maximum(g, v).q);
}
BENCHMARK(BM_OrbitMaximum)->DenseRange(4, 12, 2);

void BM_EnumerateSpinc(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const GoeritzForm g = goeritz(wheel(n));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spinc(g, 1).size());
}
BENCHMARK(BM_EnumerateSpinc)->DenseRange(3, 6, 1);

void BM_Mk1(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const ChainmailLink l = build_chainmail(plane_cycle(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), -3));
  std::vector<int> all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(mk1_run(l, all).final_framing);
}
BENCHMARK(BM_Mk1)->RangeMultiplier(2)->Range(4, 64);

void BM_ReduceNormalForm(benchmark::State& state) {
  std::vector<std::int64_t> w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(i % 3 == 0 ? -1 : -3);
  const PlumbingTree t = linear_plumbing(w);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_normal_form(t).tree.size());
}
BENCHMARK(BM_ReduceNormalForm)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
BENCHMARK_MAIN();
