#include "dkn/rk4.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dkn/dkn_flows.hpp"
#include "dkn/errors.hpp"

namespace dkn {

Flow parse_flow(std::string_view name) {
  if (name == "dkn") return Flow::dkn;
  if (name == "vw") return Flow::vw;
  if (name == "flow2") return Flow::flow2;
  if (name == "reduced_t2") return Flow::reduced_t2;
  throw std::invalid_argument("unknown flow '" + std::string(name) + "' (expected dkn, vw, flow2, reduced_t2)");
}

std::string to_string(Flow flow) {
  switch (flow) {
    case Flow::dkn:
      return "dkn";
    case Flow::vw:
      return "vw";
    case Flow::flow2:
      return "flow2";
    case Flow::reduced_t2:
      return "reduced_t2";
  }
  return "?";
}

std::size_t flow_dimension(Flow flow, long period) {
  const auto n = static_cast<std::size_t>(period);
  return (flow == Flow::vw || flow == Flow::flow2) ? 2 * n : n;
}

VectorField flow_vector_field(Flow flow, const SpectralCurve& curve, long period) {
  if (period < 1) throw std::invalid_argument("flow_vector_field: period must be positive");
  const auto n = static_cast<std::size_t>(period);
  switch (flow) {
    case Flow::dkn:
    case Flow::reduced_t2:
      return [curve, n, flow](double, std::span<const double> state, std::span<double> rate) {
        const GammaChain<double> chain(curve, std::vector<double>(state.begin(), state.begin() + static_cast<long>(n)));
        for (std::size_t i = 0; i < n; ++i) {
          const long site = static_cast<long>(i);
          rate[i] = flow == Flow::dkn ? dkn_rhs(chain, site) : reduced_flow2_gamma(chain, site);
        }
      };
    case Flow::vw:
    case Flow::flow2:
      return [n, flow](double, std::span<const double> state, std::span<double> rate) {
        VWChain<double> c{std::vector<double>(state.begin(), state.begin() + static_cast<long>(n)),
                          std::vector<double>(state.begin() + static_cast<long>(n), state.begin() + static_cast<long>(2 * n))};
        for (std::size_t i = 0; i < n; ++i) {
          const auto r = flow == Flow::vw ? chain_vw_rhs(c, static_cast<long>(i)) : flow2_rhs(c, static_cast<long>(i));
          rate[i] = r.v;
          rate[n + i] = r.w;
        }
      };
  }
  throw std::invalid_argument("flow_vector_field: unknown flow");
}

std::vector<double> rk4_step(const VectorField& field, double x, std::span<const double> state, double h) {
  const std::size_t dim = state.size();
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  field(x, state, k1);
  for (std::size_t i = 0; i < dim; ++i) tmp[i] = state[i] + 0.5 * h * k1[i];
  field(x + 0.5 * h, tmp, k2);
  for (std::size_t i = 0; i < dim; ++i) tmp[i] = state[i] + 0.5 * h * k2[i];
  field(x + 0.5 * h, tmp, k3);
  for (std::size_t i = 0; i < dim; ++i) tmp[i] = state[i] + h * k3[i];
  field(x + h, tmp, k4);

  std::vector<double> next(dim);
  for (std::size_t i = 0; i < dim; ++i) next[i] = state[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return next;
}

Trajectory rk4_integrate(std::vector<double> initial, const VectorField& field, double h, int steps,
                         int record_every, double x0) {
  if (!(h > 0.0)) throw std::invalid_argument("rk4_integrate: step h must be positive");
  if (steps < 0) throw std::invalid_argument("rk4_integrate: negative step count");
  if (record_every < 1) throw std::invalid_argument("rk4_integrate: record_every must be >= 1");

  Trajectory traj;
  traj.x.push_back(x0);
  traj.states.push_back(initial);

  std::vector<double> state = std::move(initial);
  for (int step = 0; step < steps; ++step) {
    const double x = x0 + h * step;
    try {
      state = rk4_step(field, x, state, h);
    } catch (const DegenerateConfiguration& e) {
      traj.failure = IntegrationFailure{step, e.what()};
      break;
    }
    if (!std::all_of(state.begin(), state.end(), [](double v) { return std::isfinite(v); })) {
      traj.failure = IntegrationFailure{step, "non-finite state"};
      break;
    }
    if ((step + 1) % record_every == 0 || step + 1 == steps) {
      traj.x.push_back(x0 + h * (step + 1));
      traj.states.push_back(state);
    }
  }
  return traj;
}

namespace {

double max_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

std::vector<double> final_state_or_throw(const std::vector<double>& initial, const VectorField& field, double h,
                                         int steps) {
  Trajectory t = rk4_integrate(initial, field, h, steps, steps > 0 ? steps : 1);
  if (!t.ok()) {
    throw std::runtime_error("self_convergence: integration failed at step " + std::to_string(t.failure->step) +
                             ": " + t.failure->reason);
  }
  return t.final_state();
}

}  // namespace

ConvergenceStudy self_convergence(const std::vector<double>& initial, const VectorField& field, double length,
                                  double h) {
  const double steps_real = length / h;
  const int steps = static_cast<int>(std::lround(steps_real));
  if (steps < 1 || std::fabs(steps_real - steps) > 1e-9 * steps_real) {
    throw std::invalid_argument("self_convergence: length must be an integer multiple of h");
  }
  const auto y1 = final_state_or_throw(initial, field, h, steps);
  const auto y2 = final_state_or_throw(initial, field, h / 2, 2 * steps);
  const auto y4 = final_state_or_throw(initial, field, h / 4, 4 * steps);

  ConvergenceStudy s;
  s.h = h;
  s.coarse_difference = max_difference(y1, y2);
  s.fine_difference = max_difference(y2, y4);
  s.ratio = s.coarse_difference / s.fine_difference;
  s.order = std::log2(s.ratio);
  return s;
}

}  // namespace dkn
