#pragma once

/// \file jet.hpp
/// Truncated derivative jets (value, f', f'', f''').

#include <algorithm>
#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include "dkn/scalar.hpp"

namespace dkn {

/// A jet of order K stores (f, f', ..., f^(K)) at a point, i.e. derivative
/// values, not Taylor coefficients. Arithmetic follows the truncated
/// Leibniz rule exactly.
///
/// When two jets of different order meet, the result has the smaller order:
/// only the derivatives known for both operands are known for the result.
/// Scalars lift to constants of order `kMaxOrder`, so they never truncate.
template <Field S>
class Jet {
 public:
  static constexpr int kMaxOrder = 3;

  Jet() { c_.fill(S(0)); }

  template <std::integral I>
  Jet(I value) : Jet(S(value)) {}  // NOLINT(google-explicit-constructor)

  Jet(S value) : order_(kMaxOrder) {  // NOLINT(google-explicit-constructor)
    c_.fill(S(0));
    c_[0] = std::move(value);
  }

  /// Jet with the given derivative values; order = size - 1.
  Jet(std::initializer_list<S> derivatives) : Jet(std::span<const S>(derivatives.begin(), derivatives.size())) {}

  explicit Jet(std::span<const S> derivatives) {
    if (derivatives.empty() || derivatives.size() > kMaxOrder + 1) {
      throw std::invalid_argument("Jet: order must be between 0 and 3");
    }
    c_.fill(S(0));
    std::copy(derivatives.begin(), derivatives.end(), c_.begin());
    order_ = static_cast<int>(derivatives.size()) - 1;
  }

  /// The independent variable at `value`: (value, 1, 0, ...).
  static Jet variable(S value, int order) {
    check_order(order);
    Jet j;
    j.order_ = order;
    j.c_[0] = std::move(value);
    if (order >= 1) j.c_[1] = S(1);
    return j;
  }

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const S& value() const noexcept { return c_[0]; }

  /// k-th derivative, 0 <= k <= order().
  [[nodiscard]] const S& operator[](int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("Jet: derivative index exceeds jet order");
    return c_[static_cast<std::size_t>(k)];
  }

  [[nodiscard]] Jet truncated(int order) const {
    check_order(order);
    Jet j = *this;
    j.order_ = std::min(order_, order);
    for (int k = j.order_ + 1; k <= kMaxOrder; ++k) j.c_[static_cast<std::size_t>(k)] = S(0);
    return j;
  }

  /// The jet of f' (order decreases by one). Requires order() >= 1.
  [[nodiscard]] Jet derivative() const {
    if (order_ < 1) throw std::logic_error("Jet: cannot differentiate an order-0 jet");
    Jet j;
    j.order_ = order_ - 1;
    for (int k = 0; k < order_; ++k) j.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k) + 1];
    return j;
  }

  /// Applies `fn` to every stored derivative (e.g. Q(ω) conjugation).
  template <class Fn>
  [[nodiscard]] Jet map(Fn&& fn) const {
    Jet j = *this;
    for (int k = 0; k <= order_; ++k) j.c_[static_cast<std::size_t>(k)] = fn(c_[static_cast<std::size_t>(k)]);
    return j;
  }

  friend Jet operator+(const Jet& x, const Jet& y) {
    Jet r = blank(x, y);
    for (int k = 0; k <= r.order_; ++k) r.at(k) = x.at(k) + y.at(k);
    return r;
  }
  friend Jet operator-(const Jet& x, const Jet& y) {
    Jet r = blank(x, y);
    for (int k = 0; k <= r.order_; ++k) r.at(k) = x.at(k) - y.at(k);
    return r;
  }
  friend Jet operator-(const Jet& x) {
    Jet r = x;
    for (int k = 0; k <= r.order_; ++k) r.at(k) = -x.at(k);
    return r;
  }
  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r = blank(x, y);
    for (int k = 0; k <= r.order_; ++k) {
      S sum(0);
      for (int i = 0; i <= k; ++i) {
        sum = sum + S(binomial(k, i)) * x.at(i) * y.at(k - i);
      }
      r.at(k) = sum;
    }
    return r;
  }
  /// Throws std::domain_error if the value of y is zero.
  friend Jet operator/(const Jet& x, const Jet& y) {
    if (is_zero(y.value())) throw std::domain_error("Jet: division by a jet with zero value");
    Jet q = blank(x, y);
    for (int k = 0; k <= q.order_; ++k) {
      S acc = x.at(k);
      for (int i = 1; i <= k; ++i) {
        acc = acc - S(binomial(k, i)) * y.at(i) * q.at(k - i);
      }
      q.at(k) = acc / y.at(0);
    }
    return q;
  }
  Jet& operator+=(const Jet& y) { return *this = *this + y; }
  Jet& operator-=(const Jet& y) { return *this = *this - y; }
  Jet& operator*=(const Jet& y) { return *this = *this * y; }
  Jet& operator/=(const Jet& y) { return *this = *this / y; }

  friend bool operator==(const Jet& x, const Jet& y) {
    if (x.order_ != y.order_) return false;
    for (int k = 0; k <= x.order_; ++k) {
      if (!(x.at(k) == y.at(k))) return false;
    }
    return true;
  }

  friend bool is_zero(const Jet& x) {
    for (int k = 0; k <= x.order_; ++k) {
      if (!is_zero(x.at(k))) return false;
    }
    return true;
  }

  friend double magnitude(const Jet& x) {
    double m = 0.0;
    for (int k = 0; k <= x.order_; ++k) m = std::max(m, magnitude(x.at(k)));
    return m;
  }

  friend std::string to_string(const Jet& x) {
    std::string s = "(";
    for (int k = 0; k <= x.order_; ++k) {
      if (k != 0) s += ", ";
      s += to_string(x.at(k));
    }
    return s + ")";
  }

 private:
  static void check_order(int order) {
    if (order < 0 || order > kMaxOrder) throw std::invalid_argument("Jet: order must be between 0 and 3");
  }

  static constexpr int binomial(int n, int k) {
    constexpr int table[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    return table[n][k];
  }

  static Jet blank(const Jet& x, const Jet& y) {
    Jet r;
    r.order_ = std::min(x.order_, y.order_);
    return r;
  }

  S& at(int k) { return c_[static_cast<std::size_t>(k)]; }
  const S& at(int k) const { return c_[static_cast<std::size_t>(k)]; }

  std::array<S, kMaxOrder + 1> c_;
  int order_ = kMaxOrder;
};

template <Field S>
struct scalar_traits<Jet<S>> {
  static constexpr bool is_exact = scalar_traits<S>::is_exact;
  static Jet<S> from_rational(const Rational& r) { return Jet<S>(scalar_traits<S>::from_rational(r)); }
  static decltype(auto) value_of(const Jet<S>& x) { return dkn::value_of(x.value()); }
};

}  // namespace dkn
