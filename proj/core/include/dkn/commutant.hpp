#pragma once

/// \file commutant.hpp
/// Searches for operators X with [L, X] = 0: exactly, with polynomial-in-n
/// coefficients, or numerically on a finite window of sites.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dkn/difference_operator.hpp"
#include "dkn/polynomial.hpp"
#include "dkn/rational.hpp"

namespace dkn {

/// Σ_j p_j(n) T^j with exact polynomial coefficients.
class PolynomialBandOperator {
 public:
  PolynomialBandOperator() = default;
  explicit PolynomialBandOperator(std::map<int, Polynomial<Rational>> bands);

  /// Recovers polynomial coefficients of `op` by interpolating each band on
  /// sites 0..max_degree and checking the result on the next max_degree + 1
  /// sites. Throws std::invalid_argument when a band is not a polynomial of
  /// degree <= max_degree.
  static PolynomialBandOperator from_operator(const DifferenceOperator<Rational>& op, int max_degree = 24);

  [[nodiscard]] const std::map<int, Polynomial<Rational>>& bands() const noexcept { return bands_; }
  [[nodiscard]] int band_lo() const;
  [[nodiscard]] int band_hi() const;
  /// Largest coefficient degree (-1 for the zero operator).
  [[nodiscard]] int degree() const;
  [[nodiscard]] const Polynomial<Rational>& band(int j) const;

  [[nodiscard]] DifferenceOperator<Rational> to_operator() const;

  friend PolynomialBandOperator compose(const PolynomialBandOperator& a, const PolynomialBandOperator& b);
  friend PolynomialBandOperator operator-(const PolynomialBandOperator& a, const PolynomialBandOperator& b);

 private:
  void trim();
  std::map<int, Polynomial<Rational>> bands_;
};

/// X = Σ_{j=-M}^{M} x_j(n) T^j with each x_j a polynomial of degree <= d.
struct CommutantAnsatz {
  int band = 1;
  int degree = 0;

  [[nodiscard]] int unknowns() const noexcept { return (2 * band + 1) * (degree + 1); }
};

struct ExactCommutant {
  CommutantAnsatz ansatz;
  std::vector<PolynomialBandOperator> basis;
  /// Rank of {I, L, L², ...} restricted to the powers that fit the ansatz.
  int trivial_dimension = 0;
  /// A basis element outside the span of the powers of L, if any.
  std::optional<PolynomialBandOperator> nontrivial;

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(basis.size()); }
  [[nodiscard]] bool has_nontrivial() const noexcept { return dimension() > trivial_dimension; }
};

/// Solves [L, X] = 0 over the ansatz by exact elimination: every band of
/// the commutator is a polynomial in n and all of its coefficients must
/// vanish. Throws std::invalid_argument for an empty ansatz (band < 0 or
/// degree < 0).
ExactCommutant commutant_solve_exact(const PolynomialBandOperator& l, const CommutantAnsatz& ansatz);

/// Convenience overload; coefficients of `l` must be polynomials in n.
ExactCommutant commutant_solve_exact(const DifferenceOperator<Rational>& l, const CommutantAnsatz& ansatz);

/// Solves with degree d = start, start + 1, ..., max_degree until a
/// nontrivial element appears; returns the last attempt.
ExactCommutant commutant_search_exact(const PolynomialBandOperator& l, int band, int start_degree, int max_degree);

/// [L, X] restricted to sites [site_lo, site_hi], as exact band norm.
BandNorm commutant_verification(const PolynomialBandOperator& l, const PolynomialBandOperator& x, long site_lo,
                                long site_hi);

struct WindowedCommutant {
  int band = 0;
  long site_lo = 0;
  long site_hi = 0;
  int equations = 0;
  int unknowns = 0;
  int nullity = 0;
  /// Expected nullity from powers of L on decoupled residue classes.
  int trivial_count = 0;
  double largest_singular_value = 0.0;
  /// Ascending.
  std::vector<double> smallest_singular_values;
  /// σ just above the null threshold divided by σ just below it (zero when
  /// no σ falls below the threshold).
  double gap = 0.0;
  /// The right singular vector of the smallest σ, as a window table.
  OperatorWindow<double> representative;
  double residual = 0.0;
};

inline constexpr double kWindowedNullThreshold = 1e-8;

/// Least-squares form of [L, X] = 0 with X = Σ_{|j|<=M} x_j(n) T^j and free
/// values x_j(n) for n in the window. A band m equation at site n is kept
/// only when every unknown it reaches through a nonzero coefficient of L lies
/// inside the window. Nullity
/// counts singular values below 1e-8 σ_max. Throws std::invalid_argument
/// when there are more unknowns than equations.
WindowedCommutant commutant_solve_windowed(const DifferenceOperator<double>& l, int band, long site_lo,
                                           long site_hi);

}  // namespace dkn
