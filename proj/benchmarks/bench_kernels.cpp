#include "benchmark/benchmark.h"
#include "framekit/kernels.hpp"

namespace {

using framekit::Complex;

void BM_HardyNormalizedGram(benchmark::State& state) {
  const framekit::HardySpace hardy;
  const Complex a(0.72, 0.11);
  const Complex b(-0.35, 0.56);
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::normalized_gram(hardy, a, b));
  }
}

void BM_DirichletKernel(benchmark::State& state) {
  const framekit::DirichletAlphaSpace space(0.5);
  const Complex lambda(0.94, 0.0);
  const Complex z(0.95, 0.0);  // |x| ~ 0.89, a few hundred series terms
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.kernel(lambda, z));
  }
}

void BM_DMuSpaceBuild(benchmark::State& state) {
  const framekit::PointMassMeasure mu({{Complex(1.0, 0.0), 0.5}, {Complex(0.0, 1.0), 0.5}});
  const auto trunc = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::DMuSpace(mu, trunc));
  }
}

void BM_DMuKernelEval(benchmark::State& state) {
  const framekit::PointMassMeasure mu({{Complex(1.0, 0.0), 1.0}});
  const framekit::DMuSpace space(mu, 40);
  const Complex lambda(0.4, 0.2);
  const Complex z(-0.3, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.kernel(lambda, z));
  }
}

void BM_WeightQuadratureOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(framekit::weight_quadrature_oracle(25, 0.5));
  }
}

}  // namespace

BENCHMARK(BM_HardyNormalizedGram);
BENCHMARK(BM_DirichletKernel);
BENCHMARK(BM_DMuSpaceBuild)->Arg(20)->Arg(40);
BENCHMARK(BM_DMuKernelEval);
BENCHMARK(BM_WeightQuadratureOracle);
