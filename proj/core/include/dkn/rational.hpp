#pragma once

/// \file rational.hpp
/// Exact rational scalar over GMP.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dkn {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator. Arithmetic never rounds.
///
/// Wraps `mpq_class` so that every operation yields a concrete `Rational`
/// rather than a GMP expression template; generic code can then rely on
/// `auto` and on ordinary value semantics.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses "p", "p/q", or a finite decimal such as "-1.25" or "3e-2".
  /// Decimal input is converted exactly (1.1 is 11/10, not the nearest
  /// double). Throws std::invalid_argument on malformed input or a zero
  /// denominator.
  static Rational parse(std::string_view text);

  /// Exact conversion of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const noexcept { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] Rational abs() const;

  /// "p/q", always with an explicit denominator.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  mpq_class value_{0};
};

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

/// True when x = r*r for some rational r (numerator and denominator are both
/// perfect squares). Zero counts as a square.
bool is_rational_square(const Rational& x);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline double magnitude(const Rational& x) { return x.abs().to_double(); }
inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace dkn
