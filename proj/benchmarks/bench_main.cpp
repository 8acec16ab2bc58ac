#include <benchmark/benchmark.h>

#include "bipc4/construct.hpp"
#include "bipc4/detect.hpp"
#include "bipc4/reduction.hpp"
#include "bipc4/verify.hpp"

namespace {

using namespace bipc4;

// Worst case for the directed finder: the extremal graph has no C4, so every
// side-A pair is intersected.
void BM_find_directed_c4_extremal(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  OrientedBipartiteGraph g = gen_dstar(size, size);
  for (auto _ : state) benchmark::DoNotOptimize(find_directed_c4(g));
}
BENCHMARK(BM_find_directed_c4_extremal)->Arg(12)->Arg(48)->Arg(96);

void BM_find_directed_c4_random(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  OrientedBipartiteGraph g = gen_random_oriented(size, size, {}, 7, true);
  for (auto _ : state) benchmark::DoNotOptimize(find_directed_c4(g));
}
BENCHMARK(BM_find_directed_c4_random)->Arg(16)->Arg(64);

void BM_is_dstar(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  OrientedBipartiteGraph g = gen_dstar(size, size);
  for (auto _ : state) benchmark::DoNotOptimize(is_dstar(g));
}
BENCHMARK(BM_is_dstar)->Arg(12)->Arg(48);

void BM_exhaustive_sweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    VerificationReport report = verify_directed_exhaustive(m, n, 1);
    benchmark::DoNotOptimize(report.hypothesis_satisfied);
  }
}
BENCHMARK(BM_exhaustive_sweep)->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_rainbow_exhaustive(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  ColoredBipartiteGraph g = gen_proper_coloring_complete(size);  // no rainbow C4: full scan
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_c4_exhaustive(g));
}
BENCHMARK(BM_rainbow_exhaustive)->Arg(8)->Arg(14)->Arg(20);

void BM_guided_search(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  ColoredBipartiteGraph g = gen_random_colored(size, size, 1.0, size * size, 5, true);
  for (auto _ : state) {
    GuidedOutcome outcome = find_rainbow_c4_guided(g);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_guided_search)->Arg(8)->Arg(14);

void BM_build_reduction(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  ColoredBipartiteGraph g = gen_random_colored(size, size, 1.0, 6, 11, false);
  for (auto _ : state) {
    ReductionOutcome outcome = build_reduction(g, 0, 0);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_build_reduction)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
