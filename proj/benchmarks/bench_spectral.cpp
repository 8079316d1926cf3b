#include <random>

#include "benchmark/benchmark.h"
#include "framekit/spectral.hpp"

namespace {

framekit::HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<framekit::Complex> data(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j) {
        data[i * n + i] = gauss(rng);
      } else {
        const framekit::Complex v(gauss(rng), gauss(rng));
        data[i * n + j] = v;
        data[j * n + i] = std::conj(v);
      }
    }
  }
  return framekit::HermitianMatrix(n, data);
}

void BM_EigHermitian(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 1234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::eig_hermitian(m));
  }
}

void BM_EigHermitianWithVectors(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 1234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::eig_hermitian_full(m));
  }
}

void BM_SchurRowBound(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::schur_row_bound(m));
  }
}

}  // namespace

BENCHMARK(BM_EigHermitian)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_EigHermitianWithVectors)->Arg(16)->Arg(64);
BENCHMARK(BM_SchurRowBound)->Arg(128)->Arg(512);
