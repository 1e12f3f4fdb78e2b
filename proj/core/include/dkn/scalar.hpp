#pragma once

/// \file scalar.hpp
/// The common field interface shared by every algebraic module.
///
/// A scalar type S participates if it supports the four field operations,
/// can be constructed from small integers, and provides the ADL hooks
/// `is_zero`, `magnitude` and `to_string`. Rational constants enter generic
/// code through `scalar_traits<S>::from_rational`.
///
/// Instantiations used in this project:
///   - `Rational`             exact verification
///   - `double`               simulation
///   - `QuadExt<Base>`        exact arithmetic with a formal square root
///   - `Jet<S>`               truncated derivatives over any of the above

#include <algorithm>
#include <cmath>
#include <concepts>
#include <sstream>
#include <string>

#include "dkn/rational.hpp"

namespace dkn {

inline bool is_zero(double x) { return x == 0.0; }
inline double magnitude(double x) { return std::fabs(x); }
inline std::string to_string(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static const Rational& value_of(const Rational& x) { return x; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double from_rational(const Rational& r) { return r.to_double(); }
  static double value_of(double x) { return x; }
};

template <class S>
concept Field = std::copyable<S> && std::constructible_from<S, int> &&
                requires(const S& a, const S& b, const Rational& r) {
                  { a + b } -> std::convertible_to<S>;
                  { a - b } -> std::convertible_to<S>;
                  { a * b } -> std::convertible_to<S>;
                  { a / b } -> std::convertible_to<S>;
                  { -a } -> std::convertible_to<S>;
                  { is_zero(a) } -> std::convertible_to<bool>;
                  { magnitude(a) } -> std::convertible_to<double>;
                  { to_string(a) } -> std::convertible_to<std::string>;
                  { scalar_traits<S>::from_rational(r) } -> std::convertible_to<S>;
                };

template <Field S>
S from_rational(const Rational& r) {
  return scalar_traits<S>::from_rational(r);
}

template <Field S>
inline constexpr bool is_exact_v = scalar_traits<S>::is_exact;

/// The value (zeroth-order part) of a scalar, stripping any jet structure.
template <Field S>
decltype(auto) value_of(const S& x) {
  return scalar_traits<S>::value_of(x);
}

namespace detail {
constexpr double kNumericCollisionTolerance = 1e-12;
}

/// Degeneracy test used before dividing by a difference a - b.
///
/// Exact scalars collide only on literal equality. Floating-point values
/// collide when |a - b| < 1e-12 * max(1, |a|, |b|). Jets compare their values.
template <Field S>
bool coincident(const S& a, const S& b) {
  const auto& va = value_of(a);
  const auto& vb = value_of(b);
  using V = std::decay_t<decltype(va)>;
  if constexpr (is_exact_v<V>) {
    return is_zero(va - vb);
  } else {
    const double scale = std::max({1.0, magnitude(va), magnitude(vb)});
    return magnitude(va - vb) < detail::kNumericCollisionTolerance * scale;
  }
}

/// True when the value of x vanishes: exactly for exact scalars, below
/// 1e-12 * max(1, |x|) otherwise.
template <Field S>
bool value_vanishes(const S& x) {
  return coincident(x, S(0));
}

template <Field S>
S ipow(S base, unsigned exponent) {
  S result(1);
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace dkn
