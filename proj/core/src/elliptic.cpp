#include "dkn/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dkn/errors.hpp"
#include "dkn/rk4.hpp"

namespace dkn {

namespace {

void require_genus_one(const SpectralCurve& curve, const char* who) {
  if (curve.genus() != 1) throw UnsupportedCurve(std::string(who) + ": needs a genus-one curve");
}

double root_scale(const SpectralCurve& curve, double e) {
  const double c2 = curve.coefficient(2).to_double();
  const double c1 = curve.coefficient(1).to_double();
  const double c0 = curve.coefficient(0).to_double();
  return std::max({1.0, std::fabs(e * e * e), std::fabs(c2 * e * e), std::fabs(c1 * e), std::fabs(c0)});
}

}  // namespace

std::array<double, 3> real_roots(const SpectralCurve& curve) {
  require_genus_one(curve, "real_roots");
  const double c2 = curve.coefficient(2).to_double();
  const double c1 = curve.coefficient(1).to_double();
  const double c0 = curve.coefficient(0).to_double();

  // z = t - c2/3 gives t³ + p t + q.
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  const double disc_scale = 4.0 * std::fabs(p * p * p) + 27.0 * q * q;
  if (!(disc > 1e-12 * disc_scale) || p >= 0.0) {
    throw UnsupportedCurve("real_roots: F_1 needs three distinct real roots");
  }

  const double m = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  std::array<double, 3> e{};
  for (int k = 0; k < 3; ++k) {
    e[static_cast<std::size_t>(k)] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - c2 / 3.0;
  }
  for (double& r : e) {
    for (int it = 0; it < 8; ++it) {
      const double f = curve.eval(r);
      const double df = curve.eval_derivative(r, 1);
      if (df == 0.0) break;
      const double next = r - f / df;
      if (next == r) break;
      r = next;
    }
    if (!(std::fabs(curve.eval(r)) < 1e-12 * root_scale(curve, r))) {
      throw UnsupportedCurve("real_roots: root refinement did not converge");
    }
  }
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

double wp_energy(const SpectralCurve& curve, const WpState& s) {
  return s.wp_prime * s.wp_prime - curve.eval(s.wp);
}

Jet<double> wp_jet(const SpectralCurve& curve, const WpState& s, int order) {
  if (order < 0 || order > Jet<double>::kMaxOrder) throw std::invalid_argument("wp_jet: order must be 0..3");
  const std::array<double, 4> c{s.wp, s.wp_prime, curve.eval_derivative(s.wp, 1) / 2.0,
                                curve.eval_derivative(s.wp, 2) * s.wp_prime / 2.0};
  return Jet<double>(std::span<const double>(c.data(), static_cast<std::size_t>(order) + 1));
}

WpState wp_init_bounded(const SpectralCurve& curve) {
  const auto e = real_roots(curve);
  return {e[2], 0.0};
}

WpTrajectory wp_trajectory(const SpectralCurve& curve, WpState start, double h, int steps, int record_every) {
  require_genus_one(curve, "wp_trajectory");
  const VectorField field = [&curve](double, std::span<const double> s, std::span<double> r) {
    r[0] = s[1];
    r[1] = curve.eval_derivative(s[0], 1) / 2.0;
  };
  const double e0 = wp_energy(curve, start);

  WpTrajectory out;
  out.y.push_back(0.0);
  out.states.push_back(start);
  out.energy_drift.push_back(0.0);

  std::vector<double> state{start.wp, start.wp_prime};
  for (int step = 0; step < steps; ++step) {
    state = rk4_step(field, h * step, state, h);
    const WpState s{state[0], state[1]};
    const double drift = wp_energy(curve, s) - e0;
    out.max_drift = std::max(out.max_drift, std::fabs(drift));
    if (!(std::fabs(drift) <= kWpEnergyTolerance)) {
      throw AccuracyFailure("wp_trajectory: energy drift " + to_string(drift) + " at step " + std::to_string(step) +
                            " exceeds " + to_string(kWpEnergyTolerance));
    }
    if ((step + 1) % record_every == 0 || step + 1 == steps) {
      out.y.push_back(h * (step + 1));
      out.states.push_back(s);
      out.energy_drift.push_back(drift);
    }
  }
  return out;
}

Jet<double> wp_integrate(const SpectralCurve& curve, WpState start, double y, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("wp_integrate: step must be positive");
  if (y < 0.0) throw std::invalid_argument("wp_integrate: y must be non-negative");
  if (y == 0.0) return wp_jet(curve, start);
  const int steps = static_cast<int>(std::ceil(y / h - 1e-12));
  const auto traj = wp_trajectory(curve, start, y / steps, steps, steps);
  return wp_jet(curve, traj.states.back());
}

std::optional<TurningPoint> first_turning_point(const WpTrajectory& t) {
  for (std::size_t i = 1; i < t.states.size(); ++i) {
    const double a = t.states[i - 1].wp_prime;
    const double b = t.states[i].wp_prime;
    if (a > 0.0 && b <= 0.0) {
      const double s = a / (a - b);
      return TurningPoint{t.y[i - 1] + s * (t.y[i] - t.y[i - 1]),
                          t.states[i - 1].wp + s * (t.states[i].wp - t.states[i - 1].wp)};
    }
  }
  return std::nullopt;
}

CurvePoint exact_curve_point(const SpectralCurve& curve, const Rational& z0) {
  const Rational d = curve.eval(z0);
  return {z0, QuadRational::generator(d), d.is_zero(), is_rational_square(d)};
}

Jet<QuadRational> exact_wp_jet(const SpectralCurve& curve, const Rational& p, int order, int sign) {
  if (order < 0 || order > Jet<QuadRational>::kMaxOrder) {
    throw std::invalid_argument("exact_wp_jet: order must be 0..3");
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("exact_wp_jet: sign must be +1 or -1");
  const QuadRational omega = QuadRational(sign) * QuadRational::generator(curve.eval(p));
  const Rational half(1, 2);
  const std::array<QuadRational, 4> c{QuadRational(p), omega, QuadRational(curve.eval_derivative(p, 1) * half),
                                      QuadRational(curve.eval_derivative(p, 2) * half) * omega};
  return Jet<QuadRational>(std::span<const QuadRational>(c.data(), static_cast<std::size_t>(order) + 1));
}

}  // namespace dkn
