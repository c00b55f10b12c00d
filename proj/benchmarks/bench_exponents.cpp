#include <benchmark/benchmark.h>

#include "inls/sweep.hpp"

using namespace inls;

namespace {

void BM_classify_pair(benchmark::State& state) {
  const Pair p{Rational(8, 3), Rational(4)};
  for (auto _ : state) benchmark::DoNotOptimize(classify_pair(p, 3, Rational(0)));
}
BENCHMARK(BM_classify_pair);

void BM_verify_lemma(benchmark::State& state) {
  const LemmaId id = kAllLemmas[state.range(0)];
  std::mt19937_64 rng(42);
  ParamSet params = sample_params(id, rng);
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma(id, params));
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_verify_lemma)->DenseRange(0, 9);

void BM_theta_window(benchmark::State& state) {
  std::mt19937_64 rng(7);
  ParamSet params = sample_params(LemmaId::GlobalDerivHalfDim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(theta_window(params));
}
BENCHMARK(BM_theta_window);

void BM_sweep_rate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(LemmaId::GlobalBase, 100, 1));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_sweep_rate);

}  // namespace

BENCHMARK_MAIN();
