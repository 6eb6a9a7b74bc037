// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "qosc/fock.hpp"
#include "qosc/matrix.hpp"
#include "qosc/relations.hpp"

using namespace qosc;

namespace {

Matrix random_matrix(std::size_t dim, double density, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), keep(0.0, 1.0);
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (keep(rng) < density) m(r, c) = complex(u(rng), u(rng));
  return m;
}

void BM_matmul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(dim, 1.0, 1), b = random_matrix(dim, 1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_matmul_reference(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(dim, 1.0, 1), b = random_matrix(dim, 1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(matmul_reference(a, b));
}

// Generator matrices are very sparse; this is the case the zero skip targets.
void BM_matmul_sparse(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(dim, 0.01, 3), b = random_matrix(dim, 0.01, 4);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_matmul_sparse_reference(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(dim, 0.01, 3), b = random_matrix(dim, 0.01, 4);
  for (auto _ : state) benchmark::DoNotOptimize(matmul_reference(a, b));
}

void BM_check_suite(benchmark::State& state) {
  const RepAssignment rep = build_fock_rep(static_cast<int>(state.range(0)), 5);
  const auto suite = relation_suite_oscillator(rep.params(), rep.n_modes(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_suite(rep, suite));
}

void BM_check_suite_serial(benchmark::State& state) {
  const RepAssignment rep = build_fock_rep(static_cast<int>(state.range(0)), 5);
  const auto suite = relation_suite_oscillator(rep.params(), rep.n_modes(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_suite_serial(rep, suite));
}

}  // namespace

BENCHMARK(BM_matmul)->Arg(64)->Arg(125)->Arg(343);
BENCHMARK(BM_matmul_reference)->Arg(64)->Arg(125)->Arg(343);
BENCHMARK(BM_matmul_sparse)->Arg(125)->Arg(343);
BENCHMARK(BM_matmul_sparse_reference)->Arg(125)->Arg(343);
BENCHMARK(BM_check_suite)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_check_suite_serial)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
