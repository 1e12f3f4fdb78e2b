#pragma once

/// \file dkn_flows.hpp
/// Evolution equations on periodic chains: the difference Krichever–Novikov
/// (DKN) lattice for γ_n, the (V, W) system it reduces from, the k = 2
/// hierarchy flow, and the Q_n(z) flow. All right-hand sides are generic in
/// the scalar, so the same code runs on rationals, doubles and jets.

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dkn/errors.hpp"
#include "dkn/jet.hpp"
#include "dkn/polynomial.hpp"
#include "dkn/scalar.hpp"
#include "dkn/spectral_curve.hpp"

namespace dkn {

inline long wrap_index(long n, long period) {
  const long r = n % period;
  return r < 0 ? r + period : r;
}

/// N-periodic sequence γ_n on an elliptic spectral curve.
template <Field S>
class GammaChain {
 public:
  GammaChain(SpectralCurve curve, std::vector<S> values) : curve_(std::move(curve)), values_(std::move(values)) {
    if (curve_.genus() != 1) {
      throw std::invalid_argument("GammaChain: the DKN lattice needs a genus-one curve, got genus " +
                                  std::to_string(curve_.genus()));
    }
    if (values_.empty()) throw std::invalid_argument("GammaChain: empty period");
  }

  [[nodiscard]] long period() const noexcept { return static_cast<long>(values_.size()); }
  [[nodiscard]] const SpectralCurve& curve() const noexcept { return curve_; }
  [[nodiscard]] const std::vector<S>& values() const noexcept { return values_; }
  [[nodiscard]] const S& at(long n) const { return values_[static_cast<std::size_t>(wrap_index(n, period()))]; }

 private:
  SpectralCurve curve_;
  std::vector<S> values_;
};

/// γ jets along x; coefficient k of site n is ∂_x^k γ_n.
template <Field S>
using GammaJetChain = GammaChain<Jet<S>>;

/// V_n, W_n as independent N-periodic variables.
template <Field S>
struct VWChain {
  std::vector<S> v;
  std::vector<S> w;

  [[nodiscard]] long period() const noexcept { return static_cast<long>(v.size()); }
  [[nodiscard]] const S& V(long n) const { return v[static_cast<std::size_t>(wrap_index(n, period()))]; }
  [[nodiscard]] const S& W(long n) const { return w[static_cast<std::size_t>(wrap_index(n, period()))]; }
};

template <Field S>
struct VWRate {
  S v;
  S w;
};

namespace detail {

template <Field S>
void require_distinct(const GammaChain<S>& chain, long a, long b, const char* what) {
  if (coincident(chain.at(a), chain.at(b))) {
    throw DegenerateConfiguration(a, b, std::string(what) + ": gamma values coincide");
  }
}

}  // namespace detail

/// γ_n' = F(γ_n)(γ_{n-1} - γ_{n+1}) / ((γ_{n-1} - γ_n)(γ_n - γ_{n+1})).
template <Field S>
S dkn_rhs(const GammaChain<S>& chain, long n) {
  detail::require_distinct(chain, n - 1, n, "dkn_rhs");
  detail::require_distinct(chain, n, n + 1, "dkn_rhs");
  const S& gm = chain.at(n - 1);
  const S& g = chain.at(n);
  const S& gp = chain.at(n + 1);
  return chain.curve().eval(g) * (gm - gp) / ((gm - g) * (g - gp));
}

/// V_n = F(γ_n) / ((γ_n - γ_{n-1})(γ_n - γ_{n+1})).
template <Field S>
S vn_from_gamma(const GammaChain<S>& chain, long n) {
  detail::require_distinct(chain, n - 1, n, "V_n");
  detail::require_distinct(chain, n, n + 1, "V_n");
  const S& g = chain.at(n);
  return chain.curve().eval(g) / ((g - chain.at(n - 1)) * (g - chain.at(n + 1)));
}

/// W_n = -c_2 - γ_n - γ_{n+1}.
template <Field S>
S wn_from_gamma(const GammaChain<S>& chain, long n) {
  return -from_rational<S>(chain.curve().coefficient(2)) - chain.at(n) - chain.at(n + 1);
}

/// (V_n, W_n) over one period.
template <Field S>
VWChain<S> reduce_to_vw(const GammaChain<S>& chain) {
  VWChain<S> vw;
  for (long n = 0; n < chain.period(); ++n) {
    vw.v.push_back(vn_from_gamma(chain, n));
    vw.w.push_back(wn_from_gamma(chain, n));
  }
  return vw;
}

/// ∂V_n = V_n(W_{n-1} - W_n + V_{n-1} - V_{n+1}),
/// ∂W_n = (W_n - W_{n-1})V_n + (W_{n+1} - W_n)V_{n+1}.
template <Field S>
VWRate<S> chain_vw_rhs(const VWChain<S>& c, long n) {
  return {c.V(n) * (c.W(n - 1) - c.W(n) + c.V(n - 1) - c.V(n + 1)),
          (c.W(n) - c.W(n - 1)) * c.V(n) + (c.W(n + 1) - c.W(n)) * c.V(n + 1)};
}

/// Second flow (k = 2) of the L_4 hierarchy.
template <Field S>
VWRate<S> flow2_rhs(const VWChain<S>& c, long n) {
  const S two(2);
  const S vm2 = c.V(n - 2), vm1 = c.V(n - 1), v0 = c.V(n), vp1 = c.V(n + 1), vp2 = c.V(n + 2);
  const S wm2 = c.W(n - 2), wm1 = c.W(n - 1), w0 = c.W(n), wp1 = c.W(n + 1), wp2 = c.W(n + 2);

  const S dv = v0 * (vm2 * vm1 + vm1 * v0 - v0 * vp1 - vp1 * vp2 + vm1 * vm1 - vp1 * vp1 + wm1 * wm1 - w0 * w0 +
                     two * (vm1 + v0) * wm1 - two * (v0 + vp1) * w0);

  const S dw = vm1 * v0 * (wm2 - two * wm1 + w0) - vp1 * vp2 * (w0 - two * wp1 + wp2) -
               v0 * (wm1 - w0) * (two * v0 + wm1 + w0) - vp1 * (w0 - wp1) * (two * vp1 + w0 + wp1);
  return {dv, dw};
}

/// The k = 2 flow written on γ_n, with V, W given by the γ reduction.
template <Field S>
S reduced_flow2_gamma(const GammaChain<S>& chain, long n) {
  const S two(2);
  const auto V = [&](long m) { return vn_from_gamma(chain, m); };
  const auto W = [&](long m) { return wn_from_gamma(chain, m); };
  const S wm2 = W(n - 2), wm1 = W(n - 1), w0 = W(n), wp1 = W(n + 1);
  const S v0 = V(n);
  return v0 * (V(n + 1) * (wm1 - two * w0 + wp1) - V(n - 1) * (wm2 - two * wm1 + w0) +
               (wm1 - w0) * (two * v0 + wm1 + w0));
}

/// ∂_x Q_n = V_n (Q_{n+1} - Q_{n-1}), coefficient-wise in z.
template <Field S>
Polynomial<S> q_flow_rhs(const Polynomial<S>& q_prev, const Polynomial<S>& q_next, const S& v) {
  return v * (q_next - q_prev);
}

/// Jets of order `order` (<= 3) for every γ_n along the DKN flow.
///
/// First derivatives come straight from dkn_rhs. Each higher derivative is
/// obtained by re-evaluating dkn_rhs on the whole period with the jets
/// already known, so the chain rule closes over the period without any
/// fixed-point iteration.
template <Field S>
GammaJetChain<S> prolong_gamma_jets(const GammaChain<S>& chain, int order) {
  if (order < 0 || order > Jet<S>::kMaxOrder) {
    throw std::invalid_argument("prolong_gamma_jets: order must be between 0 and 3");
  }
  const std::size_t period = static_cast<std::size_t>(chain.period());
  std::vector<std::vector<S>> derivs(period);
  for (std::size_t i = 0; i < period; ++i) derivs[i].push_back(chain.values()[i]);

  for (int k = 1; k <= order; ++k) {
    // Jets of order k-1 from the k derivatives known so far.
    std::vector<Jet<S>> known;
    known.reserve(period);
    for (std::size_t i = 0; i < period; ++i) known.emplace_back(std::span<const S>(derivs[i]));
    const GammaChain<Jet<S>> jet_chain(chain.curve(), std::move(known));
    for (std::size_t i = 0; i < period; ++i) {
      const Jet<S> rate = dkn_rhs(jet_chain, static_cast<long>(i));
      derivs[i].push_back(rate[k - 1]);
    }
  }

  std::vector<Jet<S>> jets;
  jets.reserve(period);
  for (std::size_t i = 0; i < period; ++i) jets.emplace_back(std::span<const S>(derivs[i]));
  return GammaJetChain<S>(chain.curve(), std::move(jets));
}

/// Strips jets down to their values.
template <Field S>
GammaChain<S> jet_values(const GammaJetChain<S>& jets) {
  std::vector<S> v;
  v.reserve(jets.values().size());
  for (const auto& j : jets.values()) v.push_back(j.value());
  return GammaChain<S>(jets.curve(), std::move(v));
}

}  // namespace dkn
