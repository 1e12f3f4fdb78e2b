#include <benchmark/benchmark.h>

#include "dkn/commutant.hpp"
#include "dkn/darboux.hpp"
#include "dkn/spectral_q.hpp"
#include "dkn/verify.hpp"

namespace {

using namespace dkn;

const ExactConfiguration& sample() {
  static const ExactConfiguration c = random_configuration(7, 0);
  return c;
}

void BM_Suite(benchmark::State& state, const char* suite) {
  VerifyOptions o;
  o.constants = closing_constants(sample().curve, sample().gamma);
  for (auto _ : state) benchmark::DoNotOptimize(check_configuration(suite, sample(), o));
}
BENCHMARK_CAPTURE(BM_Suite, chain, "chain")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, lax_x, "lax-x")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, lax_y, "lax-y")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, lax17, "lax17")->Unit(benchmark::kMillisecond);

void BM_ClosingConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closing_constants(sample().curve, sample().gamma));
}
BENCHMARK(BM_ClosingConstants)->Unit(benchmark::kMillisecond);

void BM_GammaJets(benchmark::State& state) {
  const GammaChain<Rational> chain(sample().curve, sample().gamma);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prolong_gamma_jets(chain, order));
}
BENCHMARK(BM_GammaJets)->DenseRange(1, 3);

// Exact elimination for the sharp g = 1 operator, band 3.
void BM_SharpCommutant(benchmark::State& state) {
  const auto l = PolynomialBandOperator::from_operator(
      sharp_operator(SharpParams{{Rational(0), Rational(0), Rational(0), Rational(1)}, 1}));
  const CommutantAnsatz ansatz{3, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(commutant_solve_exact(l, ansatz));
}
BENCHMARK(BM_SharpCommutant)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
