#pragma once

/// \file spectral_q.hpp
/// The spectral polynomials Q_n(z) attached to L_4 = (T + V_n T^{-1})² + W_n
/// and the explicit operator families L4♯ (polynomial potential) and L4♭
/// (trigonometric potential).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkn/difference_operator.hpp"
#include "dkn/dkn_flows.hpp"
#include "dkn/polynomial.hpp"
#include "dkn/rational.hpp"

namespace dkn {

/// Q_n(z) = z^g + α_{g-1} z^{g-1} + ... + α_0 from (α_0, ..., α_{g-1}).
template <Field S>
Polynomial<S> q_polynomial(const std::vector<S>& alphas) {
  std::vector<S> c = alphas;
  c.push_back(S(1));
  return Polynomial<S>(std::move(c));
}

/// Q_{n-1}, Q_n, Q_{n+1}, Q_{n+2} with V_n, V_{n+1}, W_n: everything the
/// quadratic identity needs at site n.
template <Field S>
struct QuadraticStencil {
  std::array<Polynomial<S>, 4> q;  ///< Q_{n-1}, Q_n, Q_{n+1}, Q_{n+2}
  S v0, v1;                        ///< V_n, V_{n+1}
  S w0;                            ///< W_n
};

/// Q_{n-1}, Q_n, Q_{n+2}, Q_{n+3} with V_n..V_{n+2}, W_n, W_{n+1}.
template <Field S>
struct LinearStencil {
  std::array<Polynomial<S>, 4> q;  ///< Q_{n-1}, Q_n, Q_{n+2}, Q_{n+3}
  S v0, v1, v2;                    ///< V_n, V_{n+1}, V_{n+2}
  S w0, w1;                        ///< W_n, W_{n+1}
};

/// Q_{n-1}Q_{n+1}V_n + Q_nQ_{n+2}V_{n+1} + Q_nQ_{n+1}(z - V_n - V_{n+1} - W_n)
/// as a polynomial in z. For a valid Q this equals F_g(z) at every n.
template <Field S>
Polynomial<S> eq15_polynomial(const QuadraticStencil<S>& st) {
  const auto& [qm1, q0, qp1, qp2] = st.q;
  const Polynomial<S> shifted_z{-(st.v0 + st.v1 + st.w0), S(1)};
  return qm1 * qp1 * st.v0 + q0 * qp2 * st.v1 + q0 * qp1 * shifted_z;
}

/// The same expression evaluated at a point z.
template <Field S>
S eq15_expression(const QuadraticStencil<S>& st, const S& z) {
  const auto& [qm1, q0, qp1, qp2] = st.q;
  return qm1(z) * qp1(z) * st.v0 + q0(z) * qp2(z) * st.v1 + q0(z) * qp1(z) * (z - st.v0 - st.v1 - st.w0);
}

/// Q_{n-1}V_n + Q_n(z - V_n - V_{n+1} - W_n)
///   - Q_{n+2}(z - V_{n+1} - V_{n+2} - W_{n+1}) - Q_{n+3}V_{n+2}.
template <Field S>
Polynomial<S> eq16_residual(const LinearStencil<S>& st) {
  const auto& [qm1, q0, qp2, qp3] = st.q;
  const Polynomial<S> a{-(st.v0 + st.v1 + st.w0), S(1)};
  const Polynomial<S> b{-(st.v1 + st.v2 + st.w1), S(1)};
  return qm1 * st.v0 + q0 * a - qp2 * b - qp3 * st.v2;
}

/// Solves the linear relation for Q_{n+3} (stencil.q[3] is ignored).
///
/// Throws std::domain_error if V_{n+2} = 0, and std::invalid_argument if
/// the seeds are inconsistent: the solved polynomial must again be monic of
/// degree `genus`.
template <Field S>
Polynomial<S> propagate_q(const LinearStencil<S>& st, int genus) {
  if (is_zero(st.v2)) throw std::domain_error("propagate_q: V_{n+2} = 0");
  const auto& qm1 = st.q[0];
  const auto& q0 = st.q[1];
  const auto& qp2 = st.q[2];
  const Polynomial<S> a{-(st.v0 + st.v1 + st.w0), S(1)};
  const Polynomial<S> b{-(st.v1 + st.v2 + st.w1), S(1)};
  Polynomial<S> next = (qm1 * st.v0 + q0 * a - qp2 * b) / st.v2;
  if (next.degree() != genus || !next.is_monic()) {
    throw std::invalid_argument("propagate_q: inconsistent seeds (solved Q has degree " +
                                std::to_string(next.degree()) + ", expected monic of degree " +
                                std::to_string(genus) + ")");
  }
  return next;
}

/// Q_n = z - γ_n for the genus-one reduction.
template <Field S>
Polynomial<S> gamma_q(const GammaChain<S>& chain, long n) {
  return Polynomial<S>{-chain.at(n), S(1)};
}

template <Field S>
QuadraticStencil<S> gamma_quadratic_stencil(const GammaChain<S>& chain, long n) {
  return {{gamma_q(chain, n - 1), gamma_q(chain, n), gamma_q(chain, n + 1), gamma_q(chain, n + 2)},
          vn_from_gamma(chain, n),
          vn_from_gamma(chain, n + 1),
          wn_from_gamma(chain, n)};
}

template <Field S>
LinearStencil<S> gamma_linear_stencil(const GammaChain<S>& chain, long n) {
  return {{gamma_q(chain, n - 1), gamma_q(chain, n), gamma_q(chain, n + 2), gamma_q(chain, n + 3)},
          vn_from_gamma(chain, n),
          vn_from_gamma(chain, n + 1),
          vn_from_gamma(chain, n + 2),
          wn_from_gamma(chain, n),
          wn_from_gamma(chain, n + 1)};
}

/// L4♯ = (T + (r3 n³ + r2 n² + r1 n + r0) T^{-1})² + g(g+1) r3 n.
struct SharpParams {
  std::array<Rational, 4> r{};  ///< r0, r1, r2, r3
  int genus = 1;
};

/// L4♭ = (T + (r1 cos n + r0) T^{-1})² - 4 r1 sin(g/2) sin((g+1)/2) cos(n + 1/2).
struct FlatParams {
  double r0 = 0.0;
  double r1 = 1.0;
  int genus = 1;
};

/// Throws std::invalid_argument when r3 = 0 or genus < 1.
DifferenceOperator<Rational> sharp_operator(const SharpParams& params);

/// Throws std::invalid_argument when r1 = 0 or genus < 1. cos is transcendental,
/// so this family only exists over doubles.
DifferenceOperator<double> flat_operator(const FlatParams& params);

}  // namespace dkn
