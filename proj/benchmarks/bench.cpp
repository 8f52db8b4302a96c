#include <benchmark/benchmark.h>

#include <groupoidlab/spectra.hpp>
#include <groupoidlab/verify.hpp>

using namespace gl;

namespace {

AlgebraElement dense_element(HaarSystem const& haar, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
  AlgebraElement f(haar);
  for (int x = 0; x < haar.groupoid()->size(); ++x) {
    f.set(x, Complex(coefficient(rng), coefficient(rng)));
  }
  return f;
}

void bm_convolution(benchmark::State& state) {
  auto haar = counting_haar(pair_groupoid(static_cast<int>(state.range(0))));
  auto f = dense_element(haar, 1);
  auto g = dense_element(haar, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, g));
  }
}

void bm_reduced_norm(benchmark::State& state) {
  auto haar = counting_haar(pair_groupoid(static_cast<int>(state.range(0))));
  auto f = dense_element(haar, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_norm(f));
  }
}

void bm_hermitian_eigenvalues(benchmark::State& state) {
  Rng rng(4);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  int const n = static_cast<int>(state.range(0));
  CMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = entry(rng);
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = Complex(entry(rng), entry(rng));
      m.at(j, i) = std::conj(m.at(i, j));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(m));
  }
}

void bm_modular_function(benchmark::State& state) {
  Rng rng(5);
  auto g = pair_groupoid(static_cast<int>(state.range(0)));
  auto haar = random_haar(g, rng);
  auto mu = random_full_measure(g, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(modular_function(haar, mu));
  }
}

void bm_verify_case(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_random_suite(42, 1));
  }
}

}  // namespace

BENCHMARK(bm_convolution)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_reduced_norm)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_hermitian_eigenvalues)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_modular_function)->Arg(4)->Arg(8);
BENCHMARK(bm_verify_case);

BENCHMARK_MAIN();
