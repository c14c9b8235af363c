#include <benchmark/benchmark.h>

#include "ksparse/curvature_peaks.hpp"
#include "ksparse/generate.hpp"
#include "ksparse/peaks.hpp"
#include "ksparse/ratio.hpp"
#include "ksparse/sampler.hpp"

using namespace ksparse;

namespace {

DecomposableInstance cut_instance(int n, int edges) {
  return random_digraph_cut_instance(n, edges, 1);
}

void BM_exact_peaks(benchmark::State& state) {
  const auto inst = cut_instance(static_cast<int>(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(exact_peaks(inst));
}
BENCHMARK(BM_exact_peaks)->Arg(8)->Arg(10)->Arg(12);

void BM_bounded_arity_mincut(benchmark::State& state) {
  const auto inst = cut_instance(static_cast<int>(state.range(0)), 20);
  const auto supports = component_supports(inst);
  for (auto _ : state)
    benchmark::DoNotOptimize(peaks_bounded_arity(inst, supports, Minimizer::MinCut));
}
BENCHMARK(BM_bounded_arity_mincut)->Arg(8)->Arg(12)->Arg(16);

void BM_ratio_fptas(benchmark::State& state) {
  SplitMix64 rng(7);
  RatioInstance r;
  for (int i = 0; i < state.range(0); ++i) {
    r.x.push_back(1.0 + 99.0 * rng.uniform01());
    r.y.push_back(1.0 + 99.0 * rng.uniform01());
  }
  r.A = 3.0;
  r.B = 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(ratio_fptas(r, 0.01));
}
BENCHMARK(BM_ratio_fptas)->Arg(100)->Arg(1000)->Arg(10000);

void BM_curvature_peaks(benchmark::State& state) {
  const auto inst = random_coverage_instance(GroundSet(6, 2), static_cast<int>(state.range(0)),
                                             CoverageParams{}, 3);
  const InstanceCurvatures curv = instance_curvatures(inst);
  for (auto _ : state) benchmark::DoNotOptimize(approx_peaks(inst, 0.5, curv));
}
BENCHMARK(BM_curvature_peaks)->Arg(10)->Arg(40);

void BM_sample(benchmark::State& state) {
  const auto inst = cut_instance(10, 40);
  const std::vector<double> p_hat(40, 0.05);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_sparsifier(inst, p_hat, 0.3, 0.1, ++seed));
}
BENCHMARK(BM_sample);

}  // namespace

BENCHMARK_MAIN();
