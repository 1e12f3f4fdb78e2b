#include <doctest.h>

#include <cmath>
#include <map>

#include "dkn/difference_operator.hpp"
#include "dkn/dkn_flows.hpp"
#include "dkn/random.hpp"
#include "dkn/rk4.hpp"
#include "dkn/spectral_q.hpp"

using namespace dkn;
using R = Rational;
using Op = DifferenceOperator<Rational>;

namespace {

const SpectralCurve cube = SpectralCurve::elliptic(0, 0, 0);

GammaChain<R> chain_of(const SpectralCurve& curve, std::vector<R> g) { return GammaChain<R>(curve, std::move(g)); }

VWChain<R> random_vw(CounterRng& rng, int period) {
  VWChain<R> c;
  for (int i = 0; i < period; ++i) {
    c.v.push_back(rng.rational(40));
    c.w.push_back(rng.rational(40));
  }
  return c;
}

// L_t for L = (T + V T⁻¹)² + W given the rates of V and W.
Op l4_rate(const VWChain<R>& c, const std::vector<VWRate<R>>& rate) {
  const auto at = [&](long n) { return rate[static_cast<std::size_t>(wrap_index(n, c.period()))]; };
  return Op::from_bands({{0, [=](long n) { return at(n + 1).v + at(n).v + at(n).w; }},
                         {-2, [=](long n) { return at(n).v * c.V(n - 1) + c.V(n) * at(n - 1).v; }}});
}

// The strictly negative part (bands -1 and below) of an operator.
Op negative_part(const Op& a) {
  std::map<int, Op::SiteFunction> bands;
  for (int j = a.band_lo(); j < 0; ++j) bands[j] = [a, j](long n) { return a.coefficient(j, n); };
  return Op::from_bands(std::move(bands));
}

}  // namespace

TEST_CASE("dkn_rhs: examples") {
  CHECK(dkn_rhs(chain_of(cube, {1, 2, 3}), 1) == R(-16));
  CHECK(dkn_rhs(chain_of(cube, {1, 2, 1, 5}), 1) == R(0));
  const auto zz = SpectralCurve::elliptic(0, -1, 0);
  CHECK(dkn_rhs(chain_of(zz, {3, 1, 7, 5}), 1) == R(0));
}

TEST_CASE("dkn_rhs: adjacent collision names the sites") {
  const auto c = chain_of(cube, {1, 1, 2, 3});
  try {
    (void)dkn_rhs(c, 1);
    FAIL("expected a degenerate configuration");
  } catch (const DegenerateConfiguration& e) {
    CHECK(e.site_a() == 0);
    CHECK(e.site_b() == 1);
  }
  CHECK_NOTHROW(dkn_rhs(c, 3));
  // numeric guard: relative 1e-12
  const GammaChain<double> d(cube, {1.0, 1.0 + 1e-14, 2.0, 3.0});
  CHECK_THROWS_AS(dkn_rhs(d, 1), DegenerateConfiguration);
  const GammaChain<double> ok(cube, {1.0, 1.0 + 1e-9, 2.0, 3.0});
  CHECK_NOTHROW(dkn_rhs(ok, 1));
}

TEST_CASE("V and W: examples") {
  const auto c = chain_of(cube, {1, 2, 3});
  CHECK(vn_from_gamma(c, 1) == R(-8));
  CHECK(wn_from_gamma(c, 1) == R(-5));
  const auto zz = SpectralCurve::elliptic(0, -1, 0);
  CHECK(vn_from_gamma(chain_of(zz, {3, 1, 7, 5}), 1) == R(0));
}

TEST_CASE("chain_vw_rhs: examples") {
  const VWChain<R> constant{{R(3), R(3), R(3), R(3)}, {R(-1), R(-1), R(-1), R(-1)}};
  for (long n = 0; n < 4; ++n) {
    CHECK(chain_vw_rhs(constant, n).v == R(0));
    CHECK(chain_vw_rhs(constant, n).w == R(0));
    CHECK(flow2_rhs(constant, n).v == R(0));
    CHECK(flow2_rhs(constant, n).w == R(0));
  }
  const VWChain<R> c{{R(1), R(2), R(1), R(2)}, {R(0), R(1), R(0), R(1)}};
  CHECK(chain_vw_rhs(c, 0).v == R(1));
  CHECK(chain_vw_rhs(c, 0).w == R(1));
}

TEST_CASE("chain_vw_rhs is the Lax flow with A = V_{n-1}V_n T^-2") {
  CounterRng rng(31, 0);
  for (int period : {4, 5, 6}) {
    const auto c = random_vw(rng, period);
    std::vector<VWRate<R>> rate;
    for (long n = 0; n < period; ++n) rate.push_back(chain_vw_rhs(c, n));
    const Op l = build_l4<R>([c](long n) { return c.V(n); }, [c](long n) { return c.W(n); });
    const Op a = Op::from_bands({{-2, [c](long n) { return c.V(n - 1) * c.V(n); }}});
    CHECK(max_band_norm(lax_residual(l, l4_rate(c, rate), a), -8, 8).exactly_zero);
  }
}

TEST_CASE("flow2_rhs is the Lax flow with A = (L^2) below the diagonal") {
  // Independent of the transcription: the k = 2 member of the hierarchy is
  // L_t = [(L²)₋, L], with (L²)₋ the part of L² strictly below the diagonal.
  CounterRng rng(32, 0);
  for (int period : {4, 5, 7}) {
    const auto c = random_vw(rng, period);
    std::vector<VWRate<R>> rate;
    for (long n = 0; n < period; ++n) rate.push_back(flow2_rhs(c, n));
    const Op l = build_l4<R>([c](long n) { return c.V(n); }, [c](long n) { return c.W(n); });
    const Op a = negative_part(compose(l, l));
    CHECK(max_band_norm(lax_residual(l, l4_rate(c, rate), a), -8, 8).exactly_zero);
    // a sign error would not pass
    for (auto& r : rate) r = {-r.v, -r.w};
    CHECK_FALSE(max_band_norm(lax_residual(l, l4_rate(c, rate), a), -8, 8).exactly_zero);
  }
}

TEST_CASE("reduction: (V, W) of a DKN chain follow chain_vw_rhs exactly") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto cfg = random_configuration(33, i);
    const GammaChain<R> chain(cfg.curve, cfg.gamma);
    const auto jets = prolong_gamma_jets(chain, 1);
    const auto vw = reduce_to_vw(chain);
    for (long n = 0; n < 4; ++n) {
      CHECK(chain_vw_rhs(vw, n).v == vn_from_gamma(jets, n)[1]);
      CHECK(chain_vw_rhs(vw, n).w == wn_from_gamma(jets, n)[1]);
    }
  }
}

TEST_CASE("reduction: the reduced t2 flow induces flow2 on (V, W)") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto cfg = random_configuration(34, i);
    const GammaChain<R> chain(cfg.curve, cfg.gamma);
    std::vector<Jet<R>> t2;
    for (long m = 0; m < 4; ++m) t2.push_back(Jet<R>{chain.at(m), reduced_flow2_gamma(chain, m)});
    const GammaChain<Jet<R>> jets(cfg.curve, std::move(t2));
    const auto vw = reduce_to_vw(chain);
    for (long n = 0; n < 4; ++n) {
      CHECK(flow2_rhs(vw, n).v == vn_from_gamma(jets, n)[1]);
      CHECK(flow2_rhs(vw, n).w == wn_from_gamma(jets, n)[1]);
    }
  }
}

TEST_CASE("reduced_flow2_gamma vanishes at a fixed point with equal W") {
  // γ = (a, b, a, b) with F(a) = F(b) = 0 and a + b = -c2 - w.
  const auto zz = SpectralCurve::elliptic(0, -1, 0);
  const auto c = chain_of(zz, {1, -1, 1, -1});
  for (long n = 0; n < 4; ++n) CHECK(reduced_flow2_gamma(c, n) == R(0));
}

TEST_CASE("q_flow_rhs: examples") {
  const Polynomial<R> q{R(1), R(2), R(1)};
  CHECK(q_flow_rhs(q, q, R(7)).is_zero_polynomial());

  CounterRng rng(35, 0);
  const Polynomial<R> a{rng.rational(9), rng.rational(9), R(1)};
  const Polynomial<R> b{rng.rational(9), rng.rational(9), R(1)};
  CHECK(q_flow_rhs(a, b, R(2)) == (b - a) * R(2));

  // g = 1: ∂Q_n = -γ_n' reproduces DKN.
  const auto cfg = random_configuration(35, 1);
  const GammaChain<R> chain(cfg.curve, cfg.gamma);
  for (long n = 0; n < 4; ++n) {
    const auto rhs = q_flow_rhs(gamma_q(chain, n - 1), gamma_q(chain, n + 1), vn_from_gamma(chain, n));
    CHECK(rhs.degree() <= 0);
    CHECK(rhs.coefficient(0) == -dkn_rhs(chain, n));
  }
}

TEST_CASE("prolong_gamma_jets: first coefficients are dkn_rhs") {
  const auto cfg = random_configuration(36, 0);
  const GammaChain<R> chain(cfg.curve, cfg.gamma);
  const auto jets = prolong_gamma_jets(chain, 3);
  for (long n = 0; n < 4; ++n) {
    CHECK(jets.at(n).order() == 3);
    CHECK(jets.at(n)[0] == chain.at(n));
    CHECK(jets.at(n)[1] == dkn_rhs(chain, n));
    // the second coefficient is the jet derivative of dkn_rhs
    CHECK(jets.at(n)[2] == dkn_rhs(prolong_gamma_jets(chain, 1), n)[1]);
  }
  CHECK_THROWS_AS(prolong_gamma_jets(chain, 4), std::invalid_argument);
}

TEST_CASE("prolong_gamma_jets: second coefficient vs finite differences of an RK4 run") {
  const std::vector<double> g0{1, 2, 3, 4};
  const GammaChain<R> exact(cube, {1, 2, 3, 4});
  const auto jets = prolong_gamma_jets(exact, 2);
  const auto field = flow_vector_field(Flow::dkn, cube, 4);
  const auto rhs_at = [&](const std::vector<double>& s) {
    const GammaChain<double> c(cube, s);
    std::vector<double> r;
    for (long n = 0; n < 4; ++n) r.push_back(dkn_rhs(c, n));
    return r;
  };
  double previous_error = 0.0;
  for (double h : {2e-4, 1e-4}) {
    const auto fwd = rk4_step(field, 0.0, g0, h);
    const auto bwd = rk4_step(field, 0.0, g0, -h);
    const auto rf = rhs_at(fwd), rb = rhs_at(bwd);
    double err = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
      const double fd = (rf[n] - rb[n]) / (2.0 * h);
      const double expected = jets.values()[n][2].to_double();
      err = std::max(err, std::fabs(fd - expected));
      CHECK(fd == doctest::Approx(expected).epsilon(1e-4));
    }
    if (previous_error > 0.0) CHECK(err < previous_error / 3.0);  // O(h²)
    previous_error = err;
  }
}

TEST_CASE("prolong_gamma_jets: fixed configuration has zero higher coefficients") {
  const auto zz = SpectralCurve::elliptic(0, -1, 0);
  const auto jets = prolong_gamma_jets(chain_of(zz, {1, 0, 1, 0}), 3);
  for (long n = 0; n < 4; ++n) {
    CHECK(jets.at(n)[1] == R(0));
    CHECK(jets.at(n)[2] == R(0));
    CHECK(jets.at(n)[3] == R(0));
  }
}

TEST_CASE("rk4: fixed point stays put") {
  const auto zz = SpectralCurve::elliptic(0, -1, 0);
  const auto traj = rk4_integrate({1, 0, 1, 0}, flow_vector_field(Flow::dkn, zz, 4), 0.01, 100, 10);
  REQUIRE(traj.ok());
  for (const auto& s : traj.states) CHECK(s == std::vector<double>{1, 0, 1, 0});
  CHECK(traj.states.size() == 11);
  CHECK(traj.x.back() == doctest::Approx(1.0));
}

TEST_CASE("rk4: self-convergence order is four on every flow") {
  const auto curve = SpectralCurve::elliptic(0, -1, 0);
  const std::vector<double> gamma{0.1, 0.9, -0.7, 1.6};
  const GammaChain<double> chain(curve, gamma);
  const auto vw = reduce_to_vw(chain);
  std::vector<double> vw_state = vw.v;
  vw_state.insert(vw_state.end(), vw.w.begin(), vw.w.end());

  for (Flow f : {Flow::dkn, Flow::vw, Flow::flow2, Flow::reduced_t2}) {
    const bool on_gamma = f == Flow::dkn || f == Flow::reduced_t2;
    const auto study =
        self_convergence(on_gamma ? gamma : vw_state, flow_vector_field(f, curve, 4), 0.4, 0.05);
    INFO("flow " << to_string(f));
    CHECK(study.order == doctest::Approx(4.0).epsilon(0.05));
    CHECK(study.ratio == doctest::Approx(16.0).epsilon(0.1));
  }
}

TEST_CASE("rk4: non-finite states are reported with the step index") {
  const auto field = flow_vector_field(Flow::flow2, cube, 4);
  std::vector<double> state(8, 1e120);
  state[1] = -3e120;
  const auto traj = rk4_integrate(state, field, 0.1, 5);
  CHECK_FALSE(traj.ok());
  CHECK(traj.failure->step == 0);
  CHECK(traj.states.size() == 1);
}

TEST_CASE("rk4: collisions inside a step are reported") {
  const auto field = flow_vector_field(Flow::dkn, cube, 4);
  const auto traj = rk4_integrate({1, 1, 2, 3}, field, 0.1, 5);
  CHECK_FALSE(traj.ok());
  CHECK(traj.failure->step == 0);
}

TEST_CASE("flow selector parsing") {
  CHECK(parse_flow("dkn") == Flow::dkn);
  CHECK(parse_flow("reduced_t2") == Flow::reduced_t2);
  CHECK_THROWS_AS(parse_flow("kdv"), std::invalid_argument);
  CHECK(flow_dimension(Flow::vw, 4) == 8);
  CHECK(flow_dimension(Flow::dkn, 5) == 5);
}
