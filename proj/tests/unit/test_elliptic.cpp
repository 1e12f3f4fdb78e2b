#include <doctest.h>

#include <cmath>

#include "dkn/elliptic.hpp"
#include "dkn/errors.hpp"
#include "dkn/rk4.hpp"

using namespace dkn;
using R = Rational;

namespace {
const SpectralCurve zz = SpectralCurve::elliptic(0, -1, 0);  // z³ - z
}

TEST_CASE("real roots of z^3 - z") {
  const auto e = real_roots(zz);
  CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(e[1]) < 1e-15);
  CHECK(e[2] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("real roots of a shifted cubic") {
  // (z - 3)(z - 1/2)(z + 2) = z³ - 1.5 z² - 5.5 z + 3
  const auto curve = SpectralCurve::elliptic(R(-3, 2), R(-11, 2), R(3));
  const auto e = real_roots(curve);
  CHECK(e[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e[2] == doctest::Approx(-2.0).epsilon(1e-14));
  for (double r : e) CHECK(std::fabs(curve.eval(r)) < 1e-12);
}

TEST_CASE("bounded initialisation") {
  const WpState s = wp_init_bounded(zz);
  CHECK(s.wp == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.wp_prime == 0.0);
  CHECK(std::fabs(wp_energy(zz, s)) < 1e-15);
}

TEST_CASE("unsupported curves") {
  CHECK_THROWS_AS(wp_init_bounded(SpectralCurve::elliptic(0, 0, 0)), UnsupportedCurve);  // triple root
  CHECK_THROWS_AS(wp_init_bounded(SpectralCurve::elliptic(0, 1, 0)), UnsupportedCurve);  // complex pair
  CHECK_THROWS_AS(wp_init_bounded(SpectralCurve::elliptic(-1, 0, 0)), UnsupportedCurve);  // double root at 0
  CHECK_THROWS_AS(real_roots(SpectralCurve({1, 0, 0, 0, 0})), UnsupportedCurve);
}

TEST_CASE("wp_integrate at y = 0 returns the initial jet") {
  const WpState s = wp_init_bounded(zz);
  const auto j = wp_integrate(zz, s, 0.0, 1e-3);
  CHECK(j[0] == s.wp);
  CHECK(j[1] == 0.0);
  CHECK(j[2] == doctest::Approx(1.0));  // F'(-1)/2
  CHECK(j[3] == 0.0);
  CHECK_THROWS_AS(wp_integrate(zz, s, -1.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(wp_integrate(zz, s, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("trajectory stays on the bounded oval") {
  const auto e = real_roots(zz);
  const auto traj = wp_trajectory(zz, wp_init_bounded(zz), 1e-3, 20000);
  const double tol = 1e-9;
  for (const auto& s : traj.states) {
    CHECK(s.wp >= e[2] - tol);
    CHECK(s.wp <= e[1] + tol);
  }
  CHECK(traj.y.back() == doctest::Approx(20.0));
}

TEST_CASE("energy drift over 1e4 steps at h = 1e-3") {
  const auto traj = wp_trajectory(zz, wp_init_bounded(zz), 1e-3, 10000, 100);
  CHECK(traj.max_drift < 1e-8);
  CHECK(traj.states.size() == 101);
}

TEST_CASE("accuracy failure on a coarse step") {
  CHECK_THROWS_AS(wp_trajectory(zz, wp_init_bounded(zz), 0.5, 200), AccuracyFailure);
}

TEST_CASE("turning point at half period") {
  // Half period on the oval: ∫_{e3}^{e2} dz/√F = 2K(k)/√(e1 - e3),
  // k² = (e2 - e3)/(e1 - e3). Here k² = 1/2.
  const double half_period = 2.0 * std::comp_ellint_1(std::sqrt(0.5)) / std::sqrt(2.0);
  const auto traj = wp_trajectory(zz, wp_init_bounded(zz), 1e-3, 4000);
  const auto tp = first_turning_point(traj);
  REQUIRE(tp.has_value());
  CHECK(tp->y == doctest::Approx(half_period).epsilon(1e-6));
  CHECK(std::fabs(tp->wp) < 1e-6);  // e2 = 0
}

TEST_CASE("numeric jet satisfies the curve relations") {
  const auto traj = wp_trajectory(zz, wp_init_bounded(zz), 1e-3, 1500, 1500);
  const auto j = wp_jet(zz, traj.states.back());
  CHECK(std::fabs(j[1] * j[1] - zz.eval(j[0])) < 1e-9);
  CHECK(j[2] == doctest::Approx(zz.eval_derivative(j[0], 1) / 2.0));
  CHECK(j[3] == doctest::Approx(zz.eval_derivative(j[0], 2) * j[1] / 2.0));
  CHECK_THROWS_AS(wp_jet(zz, traj.states.back(), 4), std::invalid_argument);
}

TEST_CASE("RK4 order on the Weierstrass equation") {
  const VectorField field = [](double, std::span<const double> s, std::span<double> r) {
    r[0] = s[1];
    r[1] = zz.eval_derivative(s[0], 1) / 2.0;
  };
  const WpState s = wp_init_bounded(zz);
  const auto study = self_convergence({s.wp, s.wp_prime}, field, 2.0, 0.1);
  CHECK(study.order == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("exact curve points") {
  const auto cube = SpectralCurve::elliptic(0, 0, 0);
  const auto p1 = exact_curve_point(cube, R(1));
  CHECK(p1.square_discriminant);
  CHECK_FALSE(p1.branch_point);
  CHECK(p1.w * p1.w == QuadRational(1));

  const auto p2 = exact_curve_point(cube, R(2));
  CHECK_FALSE(p2.square_discriminant);
  CHECK(p2.w * p2.w == QuadRational(8));

  const auto p0 = exact_curve_point(cube, R(0));
  CHECK(p0.branch_point);
  CHECK(is_zero(p0.w * p0.w));
}

TEST_CASE("exact wp jet for z^3 at p = 2") {
  const auto cube = SpectralCurve::elliptic(0, 0, 0);
  const auto j = exact_wp_jet(cube, R(2));
  const QuadRational w = QuadRational::generator(R(8));
  CHECK(j[0] == QuadRational(2));
  CHECK(j[1] == w);
  CHECK(j[2] == QuadRational(6));
  CHECK(j[3] == QuadRational(6) * w);
  const auto minus = exact_wp_jet(cube, R(2), 3, -1);
  CHECK(minus[1] == -w);
  CHECK(minus[3] == QuadRational(-6) * w);
  CHECK_THROWS_AS(exact_wp_jet(cube, R(2), 3, 2), std::invalid_argument);
}

TEST_CASE("exact jets satisfy the curve relation and its derivative") {
  const auto curve = SpectralCurve::elliptic(R(1, 3), R(-2), R(5, 7));
  for (int sign : {1, -1}) {
    for (const R& p : {R(3, 4), R(-5, 2), R(11, 3)}) {
      const auto j = exact_wp_jet(curve, p, 3, sign);
      // E(y) = ℘'² - F(℘) as a jet in y: value and two derivatives vanish
      const auto e = j.derivative() * j.derivative() - curve.eval(j.truncated(2));
      CHECK(is_zero(e[0]));
      CHECK(is_zero(e[1]));
      CHECK(is_zero(e[2]));
    }
  }
}
