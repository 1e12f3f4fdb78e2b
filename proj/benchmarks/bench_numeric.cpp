#include <benchmark/benchmark.h>

#include <vector>

#include "dkn/commutant.hpp"
#include "dkn/elliptic.hpp"
#include "dkn/rk4.hpp"
#include "dkn/spectral_q.hpp"

namespace {

using namespace dkn;

const SpectralCurve& curve() {
  static const SpectralCurve c = SpectralCurve::elliptic(Rational(0), Rational(-1), Rational(0));
  return c;
}

// 1000 steps from a bounded, well-separated chain.
void BM_Rk4(benchmark::State& state, Flow flow) {
  const std::vector<double> gamma{-0.9, 1.1, -1.4, 0.9};
  std::vector<double> initial = gamma;
  if (flow == Flow::vw || flow == Flow::flow2) {
    const auto vw = reduce_to_vw(GammaChain<double>(curve(), gamma));
    initial = vw.v;
    initial.insert(initial.end(), vw.w.begin(), vw.w.end());
  }
  const auto field = flow_vector_field(flow, curve(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(rk4_integrate(initial, field, 1e-3, 1000, 1000));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK_CAPTURE(BM_Rk4, dkn, Flow::dkn);
BENCHMARK_CAPTURE(BM_Rk4, vw, Flow::vw);
BENCHMARK_CAPTURE(BM_Rk4, flow2, Flow::flow2);

void BM_WpTrajectory(benchmark::State& state) {
  const WpState start = wp_init_bounded(curve());
  for (auto _ : state) benchmark::DoNotOptimize(wp_trajectory(curve(), start, 1e-3, 10000, 10000));
}
BENCHMARK(BM_WpTrajectory)->Unit(benchmark::kMillisecond);

void BM_WindowedFlat(benchmark::State& state) {
  const auto l = flat_operator(FlatParams{0.0, 1.0, 1});
  const long hi = state.range(0) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(commutant_solve_windowed(l, 3, 0, hi));
}
BENCHMARK(BM_WindowedFlat)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace
