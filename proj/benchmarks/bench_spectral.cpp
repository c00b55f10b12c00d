#include <benchmark/benchmark.h>

#include "inls/duhamel.hpp"
#include "inls/spectral.hpp"

#include <numbers>

using namespace inls;

namespace {

Field gaussian_1d(std::size_t points) {
  const Grid g = make_grid(1, 2 * std::numbers::pi * 8, points);
  return sample_initial(GaussianProfile{1.0, 1.0, false}, g);
}

void BM_fft_roundtrip(benchmark::State& state) {
  Field u = gaussian_1d(static_cast<std::size_t>(state.range(0)));
  SpectralTransform st(u.grid);
  for (auto _ : state) {
    st.forward(u.values);
    st.inverse(u.values);
    benchmark::DoNotOptimize(u.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_fft_roundtrip)->Arg(256)->Arg(1024)->Arg(4096);

void BM_split_step_1d(benchmark::State& state) {
  Field u = gaussian_1d(static_cast<std::size_t>(state.range(0)));
  PotentialSpec spec;
  spec.b = 0.25;
  spec.lambda_sign = -1;
  spec.alpha = 3.0;
  for (auto _ : state) {
    u = split_step(u, 1e-3, spec);
    benchmark::DoNotOptimize(u.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_split_step_1d)->Arg(512)->Arg(2048);

void BM_split_step_2d(benchmark::State& state) {
  const Grid g = make_grid(2, 20.0, static_cast<std::size_t>(state.range(0)));
  Field u = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  PotentialSpec spec;
  spec.b = 0.5;
  spec.lambda_sign = -1;
  spec.alpha = 2.0;
  for (auto _ : state) {
    u = split_step(u, 1e-3, spec);
    benchmark::DoNotOptimize(u.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_split_step_2d)->Arg(64)->Arg(128);

void BM_sobolev_norm(benchmark::State& state) {
  Field u = gaussian_1d(2048);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_norm(u, 0.75));
}
BENCHMARK(BM_sobolev_norm);

void BM_picard_iterate(benchmark::State& state) {
  Field u = gaussian_1d(256);
  PotentialSpec spec;
  spec.b = 0.25;
  spec.lambda_sign = -1;
  spec.alpha = 3.0;
  const std::vector<Pair> pairs{{Rational::infinity(), Rational(2)}};
  for (auto _ : state)
    benchmark::DoNotOptimize(picard_iterate(u, 0.02, 17, 4, spec, pairs));
}
BENCHMARK(BM_picard_iterate);

}  // namespace

BENCHMARK_MAIN();
