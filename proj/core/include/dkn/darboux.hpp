#pragma once

/// \file darboux.hpp
/// Darboux transformation of L_4 at genus one: the χ functions, the
/// factorization of L_4 - z, the transformed operator L~_4, the chain
/// solution (b, d, f, g) and the residuals of the 4-periodic chain.
///
/// Everything is evaluated pointwise at a sample configuration. Derivatives
/// come from jets: along x through the γ jets (DKN flow), along y through a
/// jet of z0 = ℘ satisfying (℘')² = F_1(℘).

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dkn/difference_operator.hpp"
#include "dkn/dkn_flows.hpp"
#include "dkn/errors.hpp"
#include "dkn/jet.hpp"
#include "dkn/quad_ext.hpp"
#include "dkn/rational.hpp"
#include "dkn/spectral_curve.hpp"

namespace dkn {

/// Constants of g_n(y) = (-1)^n / ℘' · ((n s1 + s0)℘² + (n k1 + k0)℘ + (n p1 + p0)).
struct TheoremConstants {
  Rational s0, k0, p0, s1, k1, p1;

  /// "s0,k0,p0,s1,k1,p1"; throws std::invalid_argument.
  static TheoremConstants parse(std::string_view text);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const TheoremConstants&, const TheoremConstants&) = default;
};

/// The Darboux quantities at one configuration, generic in the scalar.
///
/// `gamma_x` holds ∂_x γ_n (only b_n uses it). `z0_y` plays both z0'(y) in
/// the A-formulas and w in χ_2, so the two agree when z0 = ℘.
template <Field U>
class DarbouxFields {
 public:
  DarbouxFields(SpectralCurve curve, std::vector<U> gamma, std::vector<U> gamma_x, U z0, U z0_y,
                TheoremConstants constants = {})
      : chain_(std::move(curve), std::move(gamma)),
        gamma_x_(std::move(gamma_x)),
        z0_(std::move(z0)),
        z0_y_(std::move(z0_y)),
        constants_(std::move(constants)) {
    if (static_cast<long>(gamma_x_.size()) != chain_.period()) {
      throw std::invalid_argument("DarbouxFields: gamma and gamma_x lengths differ");
    }
  }

  [[nodiscard]] long period() const noexcept { return chain_.period(); }
  [[nodiscard]] const GammaChain<U>& chain() const noexcept { return chain_; }
  [[nodiscard]] const SpectralCurve& curve() const noexcept { return chain_.curve(); }
  [[nodiscard]] const U& gamma(long n) const { return chain_.at(n); }
  [[nodiscard]] const U& gamma_x(long n) const {
    return gamma_x_[static_cast<std::size_t>(wrap_index(n, period()))];
  }
  [[nodiscard]] const U& z0() const noexcept { return z0_; }
  [[nodiscard]] const U& z0_y() const noexcept { return z0_y_; }
  [[nodiscard]] const TheoremConstants& constants() const noexcept { return constants_; }

  [[nodiscard]] U V(long n) const { return vn_from_gamma(chain_, n); }
  [[nodiscard]] U W(long n) const { return wn_from_gamma(chain_, n); }
  [[nodiscard]] U F(const U& z) const { return curve().eval(z); }

  /// z0 - γ_n; throws PoleError when it vanishes.
  [[nodiscard]] U gap(long n) const {
    U d = z0_ - gamma(n);
    if (value_vanishes(d)) throw PoleError(n, "z0 - gamma_n");
    return d;
  }

  [[nodiscard]] U chi1(long n) const { return -V(n) * (z0_ - gamma(n + 1)) / gap(n); }
  [[nodiscard]] U chi2(long n) const { return z0_y_ / gap(n); }

  [[nodiscard]] U a1(long n) const { return (gamma(n + 2) - gamma(n)) * z0_y_ / (gap(n) * gap(n + 2)); }
  [[nodiscard]] U a0(long n) const {
    const U p = z0_ - gamma(n + 1);
    const U q = z0_ - gamma(n);
    return (V(n) * p * p + V(n + 1) * q * q - F(z0_)) / (gap(n) * gap(n + 1)) + z0_;
  }
  [[nodiscard]] U am1(long n) const {
    const U q = gap(n);
    return (gamma(n - 1) - gamma(n + 1)) * V(n) * z0_y_ / (q * q);
  }
  [[nodiscard]] U am2(long n) const {
    return V(n - 1) * V(n) * (z0_ - gamma(n - 2)) * (z0_ - gamma(n + 1)) / (gap(n - 1) * gap(n));
  }

  [[nodiscard]] U b(long n) const {
    const U q = gap(n);
    return -z0_y_ * gamma_x(n) / (q * q);
  }
  [[nodiscard]] U d(long n) const {
    const U g2 = gamma(n - 2), g1 = gamma(n - 1), g0 = gamma(n), gp = gamma(n + 1);
    const U denom = (g2 - g1) * (g1 - g0) * (g1 - g0) * (g0 - gp) * gap(n - 1) * gap(n);
    if (value_vanishes(denom)) throw PoleError(n, "denominator of d_n");
    return F(g1) * F(g0) * (z0_ - g2) * (z0_ - gp) / denom;
  }
  [[nodiscard]] U g(long n) const {
    if (value_vanishes(z0_y_)) throw PoleError(n, "wp'");
    const TheoremConstants& c = constants_;
    const Rational m(n);
    const U s = from_rational<U>(m * c.s1 + c.s0);
    const U k = from_rational<U>(m * c.k1 + c.k0);
    const U p = from_rational<U>(m * c.p1 + c.p0);
    const U sign(n % 2 == 0 ? 1 : -1);
    return sign / z0_y_ * ((s * z0_ + k) * z0_ + p);
  }
  [[nodiscard]] U f(long n) const {
    return -z0_y_ * (gamma(n) - gamma(n + 1)) / (gap(n) * gap(n + 1)) + g(n);
  }

 private:
  GammaChain<U> chain_;
  std::vector<U> gamma_x_;
  U z0_;
  U z0_y_;
  TheoremConstants constants_;
};

namespace detail {

template <Field U, class Fn>
typename DifferenceOperator<U>::SiteFunction site_fn(std::shared_ptr<const DarbouxFields<U>> f, Fn fn) {
  return [f = std::move(f), fn](long n) { return fn(*f, n); };
}

}  // namespace detail

/// (T + V_n T^{-1})² + W_n.
template <Field U>
DifferenceOperator<U> l4_operator(const DarbouxFields<U>& fields) {
  auto f = std::make_shared<const DarbouxFields<U>>(fields);
  return build_l4<U>(detail::site_fn<U>(f, [](const auto& s, long n) { return s.V(n); }),
                     detail::site_fn<U>(f, [](const auto& s, long n) { return s.W(n); }));
}

/// T + χ_2(n+1) - V_{n-1}V_n/χ_1(n-1) T^{-1}
template <Field U>
DifferenceOperator<U> left_factor(const DarbouxFields<U>& fields) {
  auto f = std::make_shared<const DarbouxFields<U>>(fields);
  return DifferenceOperator<U>::from_bands({
      {1, [](long) { return U(1); }},
      {0, detail::site_fn<U>(f, [](const auto& s, long n) { return s.chi2(n + 1); })},
      {-1, detail::site_fn<U>(f, [](const auto& s, long n) { return -s.V(n - 1) * s.V(n) / s.chi1(n - 1); })},
  });
}

/// T - χ_2(n) - χ_1(n) T^{-1}
template <Field U>
DifferenceOperator<U> right_factor(const DarbouxFields<U>& fields) {
  auto f = std::make_shared<const DarbouxFields<U>>(fields);
  return DifferenceOperator<U>::from_bands({
      {1, [](long) { return U(1); }},
      {0, detail::site_fn<U>(f, [](const auto& s, long n) { return -s.chi2(n); })},
      {-1, detail::site_fn<U>(f, [](const auto& s, long n) { return -s.chi1(n); })},
  });
}

/// left ∘ right - (L_4 - z0).
template <Field U>
DifferenceOperator<U> factorization_residual(const DarbouxFields<U>& fields) {
  using Op = DifferenceOperator<U>;
  return compose(left_factor(fields), right_factor(fields)) - (l4_operator(fields) - Op::scalar(fields.z0()));
}

/// right ∘ left + z0: the swapped product.
template <Field U>
DifferenceOperator<U> transformed_by_factors(const DarbouxFields<U>& fields) {
  using Op = DifferenceOperator<U>;
  return compose(right_factor(fields), left_factor(fields)) + Op::scalar(fields.z0());
}

/// T² + A_1 T + A_0 + A_{-1} T^{-1} + A_{-2} T^{-2} from the explicit formulas.
template <Field U>
DifferenceOperator<U> transformed_by_formulas(const DarbouxFields<U>& fields) {
  auto f = std::make_shared<const DarbouxFields<U>>(fields);
  return DifferenceOperator<U>::from_bands({
      {2, [](long) { return U(1); }},
      {1, detail::site_fn<U>(f, [](const auto& s, long n) { return s.a1(n); })},
      {0, detail::site_fn<U>(f, [](const auto& s, long n) { return s.a0(n); })},
      {-1, detail::site_fn<U>(f, [](const auto& s, long n) { return s.am1(n); })},
      {-2, detail::site_fn<U>(f, [](const auto& s, long n) { return s.am2(n); })},
  });
}

/// b_n T^{-1} + d_n T^{-2}
template <Field U>
DifferenceOperator<U> x_tail(const DarbouxFields<U>& fields) {
  auto f = std::make_shared<const DarbouxFields<U>>(fields);
  return DifferenceOperator<U>::from_bands({
      {-1, detail::site_fn<U>(f, [](const auto& s, long n) { return s.b(n); })},
      {-2, detail::site_fn<U>(f, [](const auto& s, long n) { return s.d(n); })},
  });
}

/// T + f_n
template <Field U>
DifferenceOperator<U> y_tail(const DarbouxFields<U>& fields) {
  auto f = std::make_shared<const DarbouxFields<U>>(fields);
  return DifferenceOperator<U>::from_bands({
      {1, [](long) { return U(1); }},
      {0, detail::site_fn<U>(f, [](const auto& s, long n) { return s.f(n); })},
  });
}

/// Coefficient-wise value of a jet-valued operator.
template <Field S>
DifferenceOperator<S> value_part(const DifferenceOperator<Jet<S>>& op) {
  return op.map([](const Jet<S>& j) -> S { return j.value(); });
}

/// Coefficient-wise first derivative of a jet-valued operator.
template <Field S>
DifferenceOperator<S> derivative_part(const DifferenceOperator<Jet<S>>& op) {
  return op.map([](const Jet<S>& j) -> S { return j[1]; });
}

/// A jet over T from a jet over S (coefficient-wise conversion).
template <Field T, Field S>
Jet<T> convert_jet(const Jet<S>& j) {
  std::vector<T> c;
  for (int k = 0; k <= j.order(); ++k) c.push_back(T(j[k]));
  return Jet<T>(std::span<const T>(c));
}

/// One configuration: γ jets along the DKN flow, a jet of z0 = ℘ along y,
/// and the constants of g_n. Requires period 4 and jets of order >= 2.
template <Field S>
class DarbouxSample {
 public:
  DarbouxSample(const GammaJetChain<S>& gamma, const Jet<S>& wp, TheoremConstants constants = {})
      : values_(make_values(gamma, wp, constants)),
        x_lift_(make_x_lift(gamma, wp, constants)),
        y_lift_(make_y_lift(gamma, wp, constants)) {}

  [[nodiscard]] const DarbouxFields<S>& values() const noexcept { return values_; }
  [[nodiscard]] const DarbouxFields<Jet<S>>& x_lift() const noexcept { return x_lift_; }
  [[nodiscard]] const DarbouxFields<Jet<S>>& y_lift() const noexcept { return y_lift_; }

  /// (R1, R2, R3) at site n:
  ///   R1 = f_{n,x} - b_n + b_{n+1}
  ///   R2 = f_{n-2} - f_n + d_{n,y}/d_n
  ///   R3 = f_{n-1} - f_n + b_{n,y}/b_n + (d_n - d_{n+1})/b_n
  /// Throws PoleError when b_n or d_n vanishes.
  [[nodiscard]] std::array<S, 3> chain_residuals(long n) const {
    const auto& v = values_;
    const S bn = v.b(n);
    const S dn = v.d(n);
    if (value_vanishes(bn)) throw PoleError(n, "b_n");
    if (value_vanishes(dn)) throw PoleError(n, "d_n");
    const S r1 = x_lift_.f(n)[1] - bn + v.b(n + 1);
    const S r2 = v.f(n - 2) - v.f(n) + y_lift_.d(n)[1] / dn;
    const S r3 = v.f(n - 1) - v.f(n) + y_lift_.b(n)[1] / bn + (dn - v.d(n + 1)) / bn;
    return {r1, r2, r3};
  }

  /// L~_x + [L~, b T^{-1} + d T^{-2}], the negative of
  /// [L~, ∂_x - b T^{-1} - d T^{-2}].
  [[nodiscard]] DifferenceOperator<S> commutator_x_residual(long site_lo, long site_hi) const {
    const auto l = transformed_by_formulas(values_).materialized(site_lo - 8, site_hi + 8);
    const auto l_x = derivative_part(transformed_by_formulas(x_lift_)).materialized(site_lo - 8, site_hi + 8);
    const auto tail = x_tail(values_).materialized(site_lo - 8, site_hi + 8);
    return lax_residual(l, l_x, tail).materialized(site_lo, site_hi);
  }

  /// L~_y + [L~, T + f], the negative of [L~, ∂_y - T - f].
  [[nodiscard]] DifferenceOperator<S> commutator_y_residual(long site_lo, long site_hi) const {
    const auto l = transformed_by_formulas(values_).materialized(site_lo - 8, site_hi + 8);
    const auto l_y = derivative_part(transformed_by_formulas(y_lift_)).materialized(site_lo - 8, site_hi + 8);
    const auto tail = y_tail(values_).materialized(site_lo - 8, site_hi + 8);
    return lax_residual(l, l_y, tail).materialized(site_lo, site_hi);
  }

  [[nodiscard]] DifferenceOperator<S> factorization_residual(long site_lo, long site_hi) const {
    return dkn::factorization_residual(values_).materialized(site_lo, site_hi);
  }

  /// Swapped product minus the A-formula operator.
  [[nodiscard]] DifferenceOperator<S> a_formula_residual(long site_lo, long site_hi) const {
    return (transformed_by_factors(values_) - transformed_by_formulas(values_)).materialized(site_lo, site_hi);
  }

 private:
  static void check(const GammaJetChain<S>& gamma, const Jet<S>& wp) {
    if (gamma.period() != 4) throw std::invalid_argument("DarbouxSample: the chain must have period 4");
    for (const auto& j : gamma.values()) {
      if (j.order() < 2) throw std::invalid_argument("DarbouxSample: gamma jets need order >= 2");
    }
    if (wp.order() < 2) throw std::invalid_argument("DarbouxSample: the wp jet needs order >= 2");
  }

  static DarbouxFields<S> make_values(const GammaJetChain<S>& gamma, const Jet<S>& wp, const TheoremConstants& c) {
    check(gamma, wp);
    std::vector<S> g, gx;
    for (const auto& j : gamma.values()) {
      g.push_back(j.value());
      gx.push_back(j[1]);
    }
    return DarbouxFields<S>(gamma.curve(), std::move(g), std::move(gx), wp.value(), wp[1], c);
  }

  static DarbouxFields<Jet<S>> make_x_lift(const GammaJetChain<S>& gamma, const Jet<S>& wp,
                                           const TheoremConstants& c) {
    std::vector<Jet<S>> g, gx;
    for (const auto& j : gamma.values()) {
      g.push_back(j);
      gx.push_back(j.derivative());
    }
    return DarbouxFields<Jet<S>>(gamma.curve(), std::move(g), std::move(gx), Jet<S>(wp.value()), Jet<S>(wp[1]), c);
  }

  static DarbouxFields<Jet<S>> make_y_lift(const GammaJetChain<S>& gamma, const Jet<S>& wp,
                                           const TheoremConstants& c) {
    std::vector<Jet<S>> g, gx;
    for (const auto& j : gamma.values()) {
      g.emplace_back(j.value());
      gx.emplace_back(j[1]);
    }
    return DarbouxFields<Jet<S>>(gamma.curve(), std::move(g), std::move(gx), wp, wp.derivative(), c);
  }

  DarbouxFields<S> values_;
  DarbouxFields<Jet<S>> x_lift_;
  DarbouxFields<Jet<S>> y_lift_;
};

/// γ jets over Q lifted into Q(ω) so they mix with an exact ℘ jet.
GammaJetChain<QuadRational> lift_gamma_jets(const GammaJetChain<Rational>& jets);

/// Exact sample at (γ, p, ±ω): γ jets of order 3 along DKN and the exact ℘
/// jet at p.
DarbouxSample<QuadRational> exact_sample(const SpectralCurve& curve, const std::vector<Rational>& gamma,
                                         const Rational& p, int sign, TheoremConstants constants = {});

/// The (s0, k0, p0) for which the chain closes at the 4-periodic γ, with
/// s1 = k1 = p1 = 0. They follow from R3 at n = 0 with zero constants,
///   S(p) = s0 p² + k0 p + p0 = ω R3(0) / 2,
/// sampled at three p and interpolated. Throws std::runtime_error if R3 has
/// an unexpected rational part.
TheoremConstants closing_constants(const SpectralCurve& curve, const std::vector<Rational>& gamma);

/// ψ_{n+1} = χ_1(n) ψ_{n-1} + χ_2(n) ψ_n
template <Field U>
U eigenfunction_step(const DarbouxFields<U>& fields, long n, const U& psi_prev, const U& psi) {
  return fields.chi1(n) * psi_prev + fields.chi2(n) * psi;
}

/// ψ on [first, first + count) from the two seeds ψ_first, ψ_{first+1}.
template <Field U>
SiteSequence<U> eigenfunction_sequence(const DarbouxFields<U>& fields, long first, const U& psi0, const U& psi1,
                                       std::size_t count) {
  if (count < 2) throw std::invalid_argument("eigenfunction_sequence: need at least two sites");
  SiteSequence<U> psi{first, {psi0, psi1}};
  while (psi.values.size() < count) {
    const long n = psi.last();
    psi.values.push_back(eigenfunction_step(fields, n, psi.at(n - 1), psi.at(n)));
  }
  return psi;
}

/// Fields at a static curve point (z, w): no x or y dependence.
inline DarbouxFields<QuadRational> point_fields(const SpectralCurve& curve, const std::vector<Rational>& gamma,
                                                const Rational& z, const QuadRational& w) {
  std::vector<QuadRational> g(gamma.begin(), gamma.end());
  std::vector<QuadRational> zeros(gamma.size(), QuadRational(0));
  return DarbouxFields<QuadRational>(curve, std::move(g), std::move(zeros), QuadRational(z), w);
}

}  // namespace dkn
