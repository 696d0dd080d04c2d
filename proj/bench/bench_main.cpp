#include <benchmark/benchmark.h>

#include <random>

#include "relmod/exactnum/linalg.hpp"
#include "relmod/sl21/relations.hpp"

using relmod::exactnum::Cyclotomic;
using relmod::exactnum::CycScalar;
using relmod::exactnum::ExactMatrix;
using relmod::exactnum::Exec;

namespace {

ExactMatrix random_matrix(std::size_t n, int conductor, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  const int deg = relmod::exactnum::CyclotomicField::get(conductor).degree();
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<relmod::exactnum::Rational> c(static_cast<std::size_t>(deg));
      for (auto& x : c) x = coeff(rng);
      m(i, j) = CycScalar(Cyclotomic::from_coefficients(conductor, std::move(c)));
    }
  return m;
}

Exec exec_of(const benchmark::State& s) { return s.range(1) == 0 ? Exec::serial : Exec::parallel; }

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, 5, 1);
  const ExactMatrix b = random_matrix(n, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(relmod::exactnum::multiply(a, b, exec_of(state)));
}

void BM_Kronecker(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, 5, 3);
  const ExactMatrix b = random_matrix(n, 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(relmod::exactnum::kronecker(a, b, exec_of(state)));
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExactMatrix a = random_matrix(n, 5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(relmod::exactnum::rank(a, exec_of(state)));
}

void BM_Relations(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto rep = relmod::sl21::build_Ak(ell - 1, ell, relmod::sl21::Convention::corrected);
  for (auto _ : state) benchmark::DoNotOptimize(relmod::sl21::check_relations(rep, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Multiply)->ArgsProduct({{8, 16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kronecker)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank)->ArgsProduct({{6, 10, 14}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Relations)->ArgsProduct({{7, 11}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
