#include <benchmark/benchmark.h>

#include "supercalc/harmonics.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/operators.hpp"
#include "supercalc/parse.hpp"
#include "supercalc/transforms.hpp"

using namespace supercalc;

namespace {

SpaceSignature space_arg(const benchmark::State& state) {
  return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), false};
}

// (x + x^2)^k, dense in every variable
Element dense(const SpaceSignature& s, int k) {
  const Element x = vector_x(s);
  return power(x + x_squared(s), k);
}

void BM_Multiply(benchmark::State& state) {
  const SpaceSignature s = space_arg(state);
  const Element a = dense(s, 2), b = dense(s, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Multiply)->Args({2, 1})->Args({3, 2})->Args({4, 3});

void BM_Dirac(benchmark::State& state) {
  const SpaceSignature s = space_arg(state);
  const Element f = dense(s, 3);
  for (auto _ : state) benchmark::DoNotOptimize(dirac_left(f));
}
BENCHMARK(BM_Dirac)->Args({2, 1})->Args({3, 2})->Args({4, 3});

void BM_Pizzetti(benchmark::State& state) {
  const SpaceSignature s = space_arg(state);
  const Element f = power(x_squared(s) + parse("x1^2 + x1*q1", s), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pizzetti_supersphere(f));
}
BENCHMARK(BM_Pizzetti)->Args({2, 1})->Args({3, 2})->Args({4, 3});

void BM_HarmonicBasis(benchmark::State& state) {
  const SpaceSignature s = space_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_basis(static_cast<int>(state.range(2)), s));
}
BENCHMARK(BM_HarmonicBasis)->Args({3, 0, 4})->Args({3, 2, 3})->Args({4, 2, 3})->Unit(benchmark::kMillisecond);

void BM_RadonFourier(benchmark::State& state) {
  const SpaceSignature s = space_arg(state);
  const GaussianClassFunction f = times_exp_x_squared(parse("x1*q1*q2 + x2^2", s));
  const std::vector<Rational> y{make_rational(6, 5), make_rational(8, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(radon_fourier(f, y));
}
BENCHMARK(BM_RadonFourier)->Args({2, 1})->Args({2, 2});

void BM_RadonDirect(benchmark::State& state) {
  const SpaceSignature s{2, 1, false};
  const GaussianClassFunction f = times_exp_x_squared(parse("x1*q1*q2 + x2^2", s));
  const std::vector<Rational> y{make_rational(6, 5), make_rational(8, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(radon_direct_numeric(f, y, make_rational(1, 2)));
}
BENCHMARK(BM_RadonDirect)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
