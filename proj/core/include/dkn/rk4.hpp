#pragma once

/// \file rk4.hpp
/// Classical fourth-order Runge–Kutta for the periodic chain flows.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dkn/spectral_curve.hpp"

namespace dkn {

enum class Flow { dkn, vw, flow2, reduced_t2 };

/// "dkn", "vw", "flow2", "reduced_t2"; throws std::invalid_argument.
Flow parse_flow(std::string_view name);
std::string to_string(Flow flow);

/// rate = f(x, state)
using VectorField = std::function<void(double x, std::span<const double> state, std::span<double> rate)>;

/// The right-hand side of `flow` on an N-periodic chain. State layout:
/// γ_0..γ_{N-1} for dkn and reduced_t2; V_0..V_{N-1}, W_0..W_{N-1} for vw
/// and flow2.
VectorField flow_vector_field(Flow flow, const SpectralCurve& curve, long period);

/// Number of state components `flow` uses on an N-periodic chain.
std::size_t flow_dimension(Flow flow, long period);

struct IntegrationFailure {
  int step = 0;  ///< index of the step that failed (0-based)
  std::string reason;
};

struct Trajectory {
  std::vector<double> x;
  std::vector<std::vector<double>> states;
  std::optional<IntegrationFailure> failure;

  [[nodiscard]] bool ok() const noexcept { return !failure.has_value(); }
  [[nodiscard]] const std::vector<double>& final_state() const { return states.back(); }
};

/// One RK4 step of size h from (x, state).
std::vector<double> rk4_step(const VectorField& field, double x, std::span<const double> state, double h);

/// `steps` RK4 steps of size h > 0, recording every `record_every`-th
/// state (the initial and final states are always recorded). A degenerate
/// configuration or a non-finite value stops the run and is reported in
/// `failure` together with the step index; the states reached so far are
/// kept.
Trajectory rk4_integrate(std::vector<double> initial, const VectorField& field, double h, int steps,
                         int record_every = 1, double x0 = 0.0);

struct ConvergenceStudy {
  double h = 0.0;
  /// max-norm differences |y_h - y_{h/2}| and |y_{h/2} - y_{h/4}|
  double coarse_difference = 0.0;
  double fine_difference = 0.0;
  double ratio = 0.0;
  double order = 0.0;
};

/// Self-convergence (Richardson) estimate of the integrator's order on
/// [x0, x0 + length] from runs with h, h/2 and h/4. `length / h` must be an
/// integer.
ConvergenceStudy self_convergence(const std::vector<double>& initial, const VectorField& field, double length,
                                  double h);

}  // namespace dkn
