#pragma once

/// \file spectral_curve.hpp
/// The hyperelliptic curve w² = F_g(z) = z^{2g+1} + c_{2g} z^{2g} + ... + c_0.

#include <stdexcept>
#include <string>
#include <vector>

#include "dkn/polynomial.hpp"
#include "dkn/rational.hpp"
#include "dkn/scalar.hpp"

namespace dkn {

class SpectralCurve {
 public:
  /// `coefficients` are c_0 ... c_{2g}; their count must be 2g + 1 for some
  /// g >= 1. The monic leading term is implicit.
  explicit SpectralCurve(std::vector<Rational> coefficients);

  /// Genus-one curve z³ + c2 z² + c1 z + c0.
  static SpectralCurve elliptic(Rational c2, Rational c1, Rational c0);

  [[nodiscard]] int genus() const noexcept { return genus_; }
  [[nodiscard]] int degree() const noexcept { return 2 * genus_ + 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return c_; }

  /// c_i for 0 <= i <= 2g; c_{2g+1} = 1.
  [[nodiscard]] const Rational& coefficient(int i) const;

  /// F_g as a dense monic polynomial.
  [[nodiscard]] Polynomial<Rational> polynomial() const;

  /// F_g(z) by Horner.
  template <Field S>
  [[nodiscard]] S eval(const S& z) const {
    S acc(1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + from_rational<S>(*it);
    return acc;
  }

  /// F_g'(z) (order 1) or F_g''(z) (order 2). Throws std::invalid_argument
  /// for any other order.
  template <Field S>
  [[nodiscard]] S eval_derivative(const S& z, int order) const {
    if (order != 1 && order != 2) {
      throw std::invalid_argument("SpectralCurve: derivative order must be 1 or 2, got " +
                                  std::to_string(order));
    }
    const std::vector<Rational>& d = order == 1 ? d1_ : d2_;
    S acc(0);
    for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * z + from_rational<S>(*it);
    return acc;
  }

  friend bool operator==(const SpectralCurve& a, const SpectralCurve& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
  std::vector<Rational> d1_;
  std::vector<Rational> d2_;
  int genus_ = 1;
};

}  // namespace dkn
