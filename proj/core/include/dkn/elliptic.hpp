#pragma once

/// \file elliptic.hpp
/// Solutions of (℘')² = F_1(℘): a numeric bounded branch, and exact points
/// with all y-derivatives in the quadratic extension Q(ω), ω² = F_1(p).

#include <array>
#include <optional>
#include <vector>

#include "dkn/jet.hpp"
#include "dkn/quad_ext.hpp"
#include "dkn/rational.hpp"
#include "dkn/spectral_curve.hpp"

namespace dkn {

/// Roots e1 > e2 > e3 of a genus-one F_1. Throws UnsupportedCurve unless
/// the three roots are real and distinct. Each root satisfies
/// |F_1(e)| < 1e-12 * max(1, |e|³, |c2 e²|, |c1 e|, |c0|).
std::array<double, 3> real_roots(const SpectralCurve& curve);

struct WpState {
  double wp = 0.0;
  double wp_prime = 0.0;
};

/// (℘')² - F_1(℘).
double wp_energy(const SpectralCurve& curve, const WpState& state);

/// (℘, ℘', ℘'', ℘''') with ℘'' = F_1'(℘)/2 and ℘''' = F_1''(℘)℘'/2, cut at
/// `order` (<= 3).
Jet<double> wp_jet(const SpectralCurve& curve, const WpState& state, int order = 3);

/// ℘(0) = e3, ℘'(0) = 0: the branch oscillating in [e3, e2].
WpState wp_init_bounded(const SpectralCurve& curve);

/// Energy drift above this stops integration with AccuracyFailure.
inline constexpr double kWpEnergyTolerance = 1e-8;

struct WpTrajectory {
  std::vector<double> y;
  std::vector<WpState> states;
  std::vector<double> energy_drift;  ///< E(y) - E(0)
  double max_drift = 0.0;
};

/// RK4 on ℘'' = F_1'(℘)/2 from `start`, `steps` steps of size h > 0,
/// recording every `record_every`-th state. Throws AccuracyFailure when the
/// energy drift exceeds kWpEnergyTolerance.
WpTrajectory wp_trajectory(const SpectralCurve& curve, WpState start, double h, int steps, int record_every = 1);

/// The state at y >= 0, reached with steps of size at most h (the last
/// partial step is folded in by shrinking all steps evenly).
Jet<double> wp_integrate(const SpectralCurve& curve, WpState start, double y, double h);

/// First y at which ℘' changes sign from + to -, found by linear
/// interpolation between recorded states, with ℘ interpolated there.
struct TurningPoint {
  double y = 0.0;
  double wp = 0.0;
};
std::optional<TurningPoint> first_turning_point(const WpTrajectory& trajectory);

/// z0 together with w = ω, ω² = F_1(z0).
struct CurvePoint {
  Rational z0;
  QuadRational w;
  bool branch_point = false;         ///< F_1(z0) = 0, so w·w = 0
  bool square_discriminant = false;  ///< F_1(z0) is a rational square
};

CurvePoint exact_curve_point(const SpectralCurve& curve, const Rational& z0);

/// (p, ±ω, F_1'(p)/2, ±F_1''(p)ω/2) cut at `order` (<= 3), ω² = F_1(p). The
/// y-derivatives are the ones forced by (℘')² = F_1(℘).
Jet<QuadRational> exact_wp_jet(const SpectralCurve& curve, const Rational& p, int order = 3, int sign = 1);

}  // namespace dkn
