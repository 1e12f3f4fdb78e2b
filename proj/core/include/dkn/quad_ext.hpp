#pragma once

/// \file quad_ext.hpp
/// Quadratic extension Base(ω), ω² = D.

#include <cmath>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dkn/scalar.hpp"

namespace dkn {

/// An element a + b·ω of Base(ω) with ω² = D.
///
/// D is carried by the element. Elements built from a bare base scalar have
/// no discriminant and b = 0; they combine with any extension. Combining two
/// elements whose discriminants differ throws std::invalid_argument.
///
/// The representation is never simplified when D happens to be a square in
/// Base, so zero-testing stays syntactic: x == 0 iff a == 0 and b == 0. That
/// is only a field when D is a non-square; when D is a square, `inverse`
/// may hit a zero norm and throws std::domain_error.
template <Field Base>
class QuadExt {
 public:
  QuadExt() = default;

  template <std::integral I>
  QuadExt(I value) : a_(value) {}  // NOLINT(google-explicit-constructor)

  QuadExt(Base a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

  QuadExt(Base a, Base b, Base discriminant)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(discriminant)) {}

  /// The generator ω itself.
  static QuadExt generator(Base discriminant) {
    return QuadExt(Base(0), Base(1), std::move(discriminant));
  }

  [[nodiscard]] const Base& a() const noexcept { return a_; }
  [[nodiscard]] const Base& b() const noexcept { return b_; }
  [[nodiscard]] const std::optional<Base>& discriminant() const noexcept { return d_; }

  /// a - b·ω
  [[nodiscard]] QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

  /// a² - D·b², an element of Base.
  [[nodiscard]] Base norm() const {
    if (!d_) return a_ * a_;
    return a_ * a_ - *d_ * b_ * b_;
  }

  [[nodiscard]] QuadExt inverse() const {
    const Base n = norm();
    if (is_zero(n)) {
      throw std::domain_error("QuadExt: element has zero norm (not invertible)");
    }
    return QuadExt(a_ / n, -b_ / n, d_);
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, merge(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, merge(x, y));
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    auto d = merge(x, y);
    Base a = x.a_ * y.a_;
    if (d) a = a + *d * x.b_ * y.b_;
    return QuadExt(std::move(a), x.a_ * y.b_ + x.b_ * y.a_, std::move(d));
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (is_zero(y)) throw std::domain_error("QuadExt: division by zero");
    return x * y.inverse();
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    (void)merge(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend bool is_zero(const QuadExt& x) { return is_zero(x.a_) && is_zero(x.b_); }

  /// Numeric embedding |a + b·√D| (complex modulus when D < 0).
  friend double magnitude(const QuadExt& x) {
    const double a = embed(x.a_);
    const double b = embed(x.b_);
    if (!x.d_ || b == 0.0) return std::fabs(a);
    const double d = embed(*x.d_);
    if (d >= 0.0) return std::fabs(a + b * std::sqrt(d));
    return std::hypot(a, b * std::sqrt(-d));
  }

  /// "a + b*w | w^2 = D"; D prints as "*" when the element carries none.
  friend std::string to_string(const QuadExt& x) {
    return to_string(x.a_) + " + " + to_string(x.b_) + "*w | w^2 = " +
           (x.d_ ? to_string(*x.d_) : std::string("*"));
  }

 private:
  QuadExt(Base a, Base b, std::optional<Base> d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  static std::optional<Base> merge(const QuadExt& x, const QuadExt& y) {
    if (!x.d_) return y.d_;
    if (!y.d_) return x.d_;
    if (!(*x.d_ == *y.d_)) {
      throw std::invalid_argument("QuadExt: mixing elements of different extensions (w^2 = " +
                                  to_string(*x.d_) + " vs " + to_string(*y.d_) + ")");
    }
    return x.d_;
  }

  static double embed(const Base& v) {
    const double m = magnitude(v);
    if constexpr (std::totally_ordered<Base>) {
      return v < Base(0) ? -m : m;
    } else {
      return m;
    }
  }

  Base a_{0};
  Base b_{0};
  std::optional<Base> d_;
};

template <Field Base>
struct scalar_traits<QuadExt<Base>> {
  static constexpr bool is_exact = scalar_traits<Base>::is_exact;
  static QuadExt<Base> from_rational(const Rational& r) {
    return QuadExt<Base>(scalar_traits<Base>::from_rational(r));
  }
  static const QuadExt<Base>& value_of(const QuadExt<Base>& x) { return x; }
};

/// Exact field used by the identity checks: Q(ω).
using QuadRational = QuadExt<Rational>;

}  // namespace dkn
