#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "ccqed/linalg.hpp"

using ccqed::linalg::HermitianMatrix;
using Complex = std::complex<double>;

namespace {

HermitianMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = Complex(u(rng), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v(u(rng), u(rng));
      a[i * n + j] = v;
      a[j * n + i] = std::conj(v);
    }
  }
  return HermitianMatrix(n, std::move(a));
}

}  // namespace

static void BM_Eigh2x2ClosedForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const HermitianMatrix m = random_hermitian(2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccqed::linalg::eigh(m));
  }
}
BENCHMARK(BM_Eigh2x2ClosedForm);

static void BM_Eigh2x2Jacobi(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const HermitianMatrix m = random_hermitian(2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccqed::linalg::eigh_jacobi(m));
  }
}
BENCHMARK(BM_Eigh2x2Jacobi);

static void BM_Eigh3x3Jacobi(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const HermitianMatrix m = random_hermitian(3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccqed::linalg::eigh_jacobi(m));
  }
}
BENCHMARK(BM_Eigh3x3Jacobi);
