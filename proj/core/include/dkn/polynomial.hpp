#pragma once

/// \file polynomial.hpp
/// Dense univariate polynomials over a scalar field.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dkn/scalar.hpp"

namespace dkn {

/// Σ coeffs[i]·t^i, stored low degree first with no trailing zeros. The
/// zero polynomial has an empty coefficient list and degree -1.
template <Field S>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(S value) { return Polynomial(std::vector<S>{std::move(value)}); }
  /// t^k
  static Polynomial monomial(std::size_t k, S coefficient = S(1)) {
    std::vector<S> c(k + 1, S(0));
    c[k] = std::move(coefficient);
    return Polynomial(std::move(c));
  }

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero_polynomial() const noexcept { return c_.empty(); }
  [[nodiscard]] const std::vector<S>& coefficients() const noexcept { return c_; }

  /// Coefficient of t^k (zero beyond the degree).
  [[nodiscard]] S coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }

  [[nodiscard]] bool is_monic() const { return !c_.empty() && is_zero(c_.back() - S(1)); }

  template <Field T = S>
  [[nodiscard]] T operator()(const T& t) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + T(*it);
    return acc;
  }

  /// p(t + k), exact Taylor shift.
  [[nodiscard]] Polynomial shifted(long k) const {
    std::vector<S> r(c_.size(), S(0));
    const S step = S(static_cast<int>(k));
    // Horner in polynomial form: r = r·(t + k) + c_i
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      for (std::size_t i = r.size(); i-- > 0;) {
        r[i] = r[i] * step + (i > 0 ? r[i - 1] : S(0));
      }
      r[0] = r[0] + *it;
    }
    return Polynomial(std::move(r));
  }

  [[nodiscard]] Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> r(c_.size() - 1, S(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = S(static_cast<int>(i)) * c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<S> r(std::max(p.c_.size(), q.c_.size()), S(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coefficient(i) + q.coefficient(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<S> r(std::max(p.c_.size(), q.c_.size()), S(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coefficient(i) - q.coefficient(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& p) {
    std::vector<S> r = p.c_;
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.c_.empty() || q.c_.empty()) return {};
    std::vector<S> r(p.c_.size() + q.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const S& s, const Polynomial& p) {
    std::vector<S> r = p.c_;
    for (auto& x : r) x = s * x;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& p, const S& s) { return s * p; }
  friend Polynomial operator/(const Polynomial& p, const S& s) {
    std::vector<S> r = p.c_;
    for (auto& x : r) x = x / s;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.c_.size() != q.c_.size()) return false;
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (!is_zero(p.c_[i] - q.c_[i])) return false;
    }
    return true;
  }

  friend std::string to_string(const Polynomial& p) {
    if (p.c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (is_zero(p.c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(p.c_[i]) + ")";
      if (i > 0) s += "*t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

/// Lagrange interpolation through (nodes[i], values[i]); nodes distinct.
template <Field S>
Polynomial<S> interpolate(const std::vector<S>& nodes, const std::vector<S>& values) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw std::invalid_argument("interpolate: need matching, non-empty node and value lists");
  }
  // Newton divided differences.
  std::vector<S> dd = values;
  const std::size_t m = nodes.size();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const S denom = nodes[i] - nodes[i - level];
      if (is_zero(denom)) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  Polynomial<S> result = Polynomial<S>::constant(dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    result = result * Polynomial<S>{-nodes[i], S(1)} + Polynomial<S>::constant(dd[i]);
  }
  return result;
}

}  // namespace dkn
