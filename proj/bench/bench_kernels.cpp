// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "diffsres/spectral.hpp"

using namespace diffsres;

namespace {

DiffMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto dom = Domain::rational_functions(Symbol("x"), {Symbol("s")});
  const MultiPoly x = MultiPoly::variable(Symbol("x"));
  const MultiPoly s = MultiPoly::variable(Symbol("s"));
  DiffMatrix m(dom, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      MultiPoly p = Rational(coef(rng)) * x * x + Rational(coef(rng)) * x * s + MultiPoly(coef(rng));
      m(r, c) = Element(dom, RatFunc(std::move(p)));
    }
  }
  return m;
}

void determinant_kernel(benchmark::State& state, Execution exec) {
  const DiffMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m, DetBackend::fraction_free, exec));
}

void subresultant_kernel(benchmark::State& state, Execution exec) {
  auto dom = spectral_domain(Domain::rational_functions(Symbol("x")));
  const auto n = static_cast<unsigned>(state.range(0));
  Odo a = shift_by_parameter(euler_operator(n, n + 2).lift(dom), lambda_symbol());
  Odo b = shift_by_parameter(euler_operator(n + 2, n).lift(dom), mu_symbol());
  for (auto _ : state) benchmark::DoNotOptimize(subresultant_sequence(a, b, exec));
}

void BM_DeterminantSerial(benchmark::State& s) { determinant_kernel(s, Execution::serial); }
void BM_DeterminantParallel(benchmark::State& s) { determinant_kernel(s, Execution::parallel); }
void BM_EulerSequenceSerial(benchmark::State& s) { subresultant_kernel(s, Execution::serial); }
void BM_EulerSequenceParallel(benchmark::State& s) { subresultant_kernel(s, Execution::parallel); }

}  // namespace

BENCHMARK(BM_DeterminantSerial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerSequenceSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerSequenceParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
