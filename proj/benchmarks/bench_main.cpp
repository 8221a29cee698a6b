#include <benchmark/benchmark.h>

#include <random>

#include "qfc/funcalc.hpp"
#include "qfc/oracle.hpp"
#include "qfc/pvm.hpp"
#include "qfc/random.hpp"

namespace {

qfc::QMatrix fixture_operator(int n) {
  std::mt19937_64 rng(99);
  return qfc::random_normal(n, qfc::Frame::standard(), rng);
}

void BM_ChiEmbed(benchmark::State& state) {
  const qfc::QMatrix t = fixture_operator(static_cast<int>(state.range(0)));
  const qfc::Frame fr = qfc::Frame::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfc::chi_embed(t, fr));
  }
}
BENCHMARK(BM_ChiEmbed)->Arg(4)->Arg(8);

void BM_Eigendecompose(benchmark::State& state) {
  const qfc::QMatrix t = fixture_operator(static_cast<int>(state.range(0)));
  const qfc::Frame fr = qfc::Frame::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfc::eigendecompose(t, fr));
  }
}
BENCHMARK(BM_Eigendecompose)->Arg(2)->Arg(4)->Arg(8);

void BM_FullCalculusExp(benchmark::State& state) {
  const qfc::QMatrix t = fixture_operator(static_cast<int>(state.range(0)));
  const qfc::Frame fr = qfc::Frame::standard();
  const qfc::QFunction f = qfc::QFunction::exp_fn();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfc::full_calculus(t, f, fr));
  }
}
BENCHMARK(BM_FullCalculusExp)->Arg(4)->Arg(8);

void BM_SpectralMeasure(benchmark::State& state) {
  const qfc::QMatrix t = fixture_operator(static_cast<int>(state.range(0)));
  const qfc::Frame fr = qfc::Frame::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfc::spectral_measure(t, fr));
  }
}
BENCHMARK(BM_SpectralMeasure)->Arg(4)->Arg(8);

void BM_BruteSpectrum(benchmark::State& state) {
  const qfc::QMatrix t = fixture_operator(static_cast<int>(state.range(0)));
  const qfc::Frame fr = qfc::Frame::standard();
  const qfc::ScanGrid grid = qfc::ScanGrid::for_operator(t, 0.08);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfc::brute_spectrum(t, grid, fr));
  }
}
BENCHMARK(BM_BruteSpectrum)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
