#pragma once

/// \file difference_operator.hpp
/// Banded difference operators Σ_j u_j(n) T^j with (Tψ)_n = ψ_{n+1}.
///
/// Coefficients come from a provider (j, n) -> scalar. Operators are cheap
/// to copy (the provider is shared) and never own trajectories; composite
/// operators evaluate their operands lazily. Equality is only ever decided
/// on an explicit window of sites.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dkn/scalar.hpp"

namespace dkn {

/// Dense table of an operator's coefficients on a finite window.
template <Field S>
struct OperatorWindow {
  int band_lo = 0;
  int band_hi = 0;
  long site_lo = 0;
  long site_hi = 0;
  /// Row-major: one row per site, one column per band (lowest band first).
  std::vector<S> coeffs;

  [[nodiscard]] int band_count() const noexcept { return band_hi - band_lo + 1; }
  [[nodiscard]] long site_count() const noexcept { return site_hi - site_lo + 1; }

  [[nodiscard]] const S& at(int band, long site) const {
    if (band < band_lo || band > band_hi || site < site_lo || site > site_hi) {
      throw std::out_of_range("OperatorWindow: (band, site) outside the window");
    }
    return coeffs[static_cast<std::size_t>((site - site_lo) * band_count() + (band - band_lo))];
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const S& c) { return dkn::is_zero(c); });
  }

  friend bool operator==(const OperatorWindow& a, const OperatorWindow& b) {
    if (a.site_lo != b.site_lo || a.site_hi != b.site_hi) return false;
    const int lo = std::min(a.band_lo, b.band_lo);
    const int hi = std::max(a.band_hi, b.band_hi);
    for (long n = a.site_lo; n <= a.site_hi; ++n) {
      for (int j = lo; j <= hi; ++j) {
        const S x = (j >= a.band_lo && j <= a.band_hi) ? a.at(j, n) : S(0);
        const S y = (j >= b.band_lo && j <= b.band_hi) ? b.at(j, n) : S(0);
        if (!dkn::is_zero(x - y)) return false;
      }
    }
    return true;
  }
};

/// Sequence ψ_n known on sites [first, first + size).
template <Field S>
struct SiteSequence {
  long first = 0;
  std::vector<S> values;

  [[nodiscard]] long last() const noexcept { return first + static_cast<long>(values.size()) - 1; }
  [[nodiscard]] bool contains(long n) const noexcept { return n >= first && n <= last(); }
  [[nodiscard]] const S& at(long n) const {
    if (!contains(n)) {
      throw std::out_of_range("SiteSequence: site " + std::to_string(n) + " outside [" +
                              std::to_string(first) + ", " + std::to_string(last()) + "]");
    }
    return values[static_cast<std::size_t>(n - first)];
  }
};

template <Field S>
class DifferenceOperator {
 public:
  using Provider = std::function<S(int band, long site)>;
  using SiteFunction = std::function<S(long site)>;

  /// The zero operator.
  DifferenceOperator() : DifferenceOperator(0, 0, [](int, long) { return S(0); }) {}

  DifferenceOperator(int band_lo, int band_hi, Provider provider)
      : lo_(band_lo), hi_(band_hi), provider_(std::make_shared<const Provider>(std::move(provider))) {
    if (band_lo > band_hi) throw std::invalid_argument("DifferenceOperator: empty band range");
  }

  static DifferenceOperator identity() { return shift(0); }

  /// T^k
  static DifferenceOperator shift(int k) {
    return DifferenceOperator(k, k, [](int, long) { return S(1); });
  }

  /// Multiplication by u(n).
  static DifferenceOperator multiplication(SiteFunction u) {
    return DifferenceOperator(0, 0, [u = std::move(u)](int, long n) { return u(n); });
  }

  static DifferenceOperator scalar(S value) {
    return DifferenceOperator(0, 0, [value = std::move(value)](int, long) { return value; });
  }

  /// Σ_j bands[j](n) T^j. An empty map yields the zero operator.
  static DifferenceOperator from_bands(std::map<int, SiteFunction> bands) {
    if (bands.empty()) return DifferenceOperator();
    const int lo = bands.begin()->first;
    const int hi = bands.rbegin()->first;
    auto shared = std::make_shared<const std::map<int, SiteFunction>>(std::move(bands));
    return DifferenceOperator(lo, hi, [shared](int j, long n) {
      auto it = shared->find(j);
      return it == shared->end() ? S(0) : it->second(n);
    });
  }

  /// Table-backed operator; querying a site outside [site_lo, site_hi]
  /// throws std::out_of_range.
  static DifferenceOperator from_window(OperatorWindow<S> window) {
    auto shared = std::make_shared<const OperatorWindow<S>>(std::move(window));
    return DifferenceOperator(shared->band_lo, shared->band_hi,
                              [shared](int j, long n) { return shared->at(j, n); });
  }

  [[nodiscard]] int band_lo() const noexcept { return lo_; }
  [[nodiscard]] int band_hi() const noexcept { return hi_; }

  /// u_j(n); zero outside the band.
  [[nodiscard]] S coefficient(int band, long site) const {
    if (band < lo_ || band > hi_) return S(0);
    return (*provider_)(band, site);
  }

  /// Applies `fn` coefficient-wise, e.g. to read off one derivative of a jet.
  template <class Fn, class T = std::invoke_result_t<Fn, const S&>>
  [[nodiscard]] DifferenceOperator<T> map(Fn fn) const {
    return DifferenceOperator<T>(lo_, hi_, [self = *this, fn = std::move(fn)](int j, long n) {
      return fn(self.coefficient(j, n));
    });
  }

  [[nodiscard]] OperatorWindow<S> window(long site_lo, long site_hi) const {
    if (site_lo > site_hi) throw std::invalid_argument("DifferenceOperator: empty site window");
    OperatorWindow<S> w{lo_, hi_, site_lo, site_hi, {}};
    w.coeffs.reserve(static_cast<std::size_t>(w.site_count() * w.band_count()));
    for (long n = site_lo; n <= site_hi; ++n) {
      for (int j = lo_; j <= hi_; ++j) w.coeffs.push_back(coefficient(j, n));
    }
    return w;
  }

  /// Evaluates once on [site_lo, site_hi] and returns a table-backed copy.
  [[nodiscard]] DifferenceOperator materialized(long site_lo, long site_hi) const {
    return from_window(window(site_lo, site_hi));
  }

 private:
  int lo_;
  int hi_;
  std::shared_ptr<const Provider> provider_;
};

/// (AB)_k(n) = Σ_j a_j(n) b_{k-j}(n+j).
template <Field S>
DifferenceOperator<S> compose(const DifferenceOperator<S>& a, const DifferenceOperator<S>& b) {
  return DifferenceOperator<S>(a.band_lo() + b.band_lo(), a.band_hi() + b.band_hi(), [a, b](int k, long n) {
    S sum(0);
    const int j_lo = std::max(a.band_lo(), k - b.band_hi());
    const int j_hi = std::min(a.band_hi(), k - b.band_lo());
    for (int j = j_lo; j <= j_hi; ++j) sum = sum + a.coefficient(j, n) * b.coefficient(k - j, n + j);
    return sum;
  });
}

template <Field S>
DifferenceOperator<S> operator+(const DifferenceOperator<S>& a, const DifferenceOperator<S>& b) {
  return DifferenceOperator<S>(std::min(a.band_lo(), b.band_lo()), std::max(a.band_hi(), b.band_hi()),
                               [a, b](int j, long n) { return a.coefficient(j, n) + b.coefficient(j, n); });
}

template <Field S>
DifferenceOperator<S> operator-(const DifferenceOperator<S>& a, const DifferenceOperator<S>& b) {
  return DifferenceOperator<S>(std::min(a.band_lo(), b.band_lo()), std::max(a.band_hi(), b.band_hi()),
                               [a, b](int j, long n) { return a.coefficient(j, n) - b.coefficient(j, n); });
}

template <Field S>
DifferenceOperator<S> operator-(const DifferenceOperator<S>& a) {
  return a.map([](const S& x) { return -x; });
}

template <Field S>
DifferenceOperator<S> operator*(const S& s, const DifferenceOperator<S>& a) {
  return a.map([s](const S& x) { return s * x; });
}

/// [A, B] = AB - BA
template <Field S>
DifferenceOperator<S> commutator(const DifferenceOperator<S>& a, const DifferenceOperator<S>& b) {
  return compose(a, b) - compose(b, a);
}

/// L_t + [L, A], the coefficient form of [∂_t - A, L]. It vanishes exactly
/// when L_t = [A, L]. `l_t` must hold the coefficient-wise t-derivatives of
/// L; they are never computed here.
///
/// Every Lax-type residual in the project goes through this one assembler.
/// [L, ∂_t - A] is the negative of the same operator, so it has the same
/// zero set.
template <Field S>
DifferenceOperator<S> lax_residual(const DifferenceOperator<S>& l, const DifferenceOperator<S>& l_t,
                                   const DifferenceOperator<S>& a) {
  return l_t + commutator(l, a);
}

/// (T + V_n T^{-1})² + W_n, expanded by composition.
template <Field S>
DifferenceOperator<S> build_l4(typename DifferenceOperator<S>::SiteFunction v,
                               typename DifferenceOperator<S>::SiteFunction w) {
  using Op = DifferenceOperator<S>;
  const Op factor = Op::shift(1) + compose(Op::multiplication(std::move(v)), Op::shift(-1));
  return compose(factor, factor) + Op::multiplication(std::move(w));
}

/// (Aψ)_n = Σ_j a_j(n) ψ_{n+j}. Throws std::out_of_range when ψ does not
/// cover [n + band_lo, n + band_hi].
template <Field S>
S apply(const DifferenceOperator<S>& a, const SiteSequence<S>& psi, long n) {
  if (!psi.contains(n + a.band_lo()) || !psi.contains(n + a.band_hi())) {
    throw std::out_of_range("apply: sequence window too small for band [" + std::to_string(a.band_lo()) +
                            ", " + std::to_string(a.band_hi()) + "] at site " + std::to_string(n));
  }
  S sum(0);
  for (int j = a.band_lo(); j <= a.band_hi(); ++j) sum = sum + a.coefficient(j, n) * psi.at(n + j);
  return sum;
}

/// Exact zero flag plus the largest coefficient magnitude (numeric
/// embedding for extension scalars).
struct BandNorm {
  bool exactly_zero = true;
  double max_magnitude = 0.0;
};

template <Field S>
BandNorm max_band_norm(const DifferenceOperator<S>& a, long site_lo, long site_hi) {
  BandNorm norm;
  for (long n = site_lo; n <= site_hi; ++n) {
    for (int j = a.band_lo(); j <= a.band_hi(); ++j) {
      const S c = a.coefficient(j, n);
      if (!is_zero(c)) norm.exactly_zero = false;
      norm.max_magnitude = std::max(norm.max_magnitude, magnitude(c));
    }
  }
  return norm;
}

}  // namespace dkn
