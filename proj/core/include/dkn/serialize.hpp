#pragma once

/// \file serialize.hpp
/// JSON forms of the report types. Exact scalars are strings "p/q";
/// extension scalars "a + b*w | w^2 = D"; doubles are JSON numbers.

#include <nlohmann/json.hpp>

#include "dkn/commutant.hpp"
#include "dkn/darboux.hpp"
#include "dkn/difference_operator.hpp"
#include "dkn/random.hpp"
#include "dkn/spectral_curve.hpp"

namespace dkn {

template <Field S>
nlohmann::json scalar_json(const S& x) {
  if constexpr (std::is_same_v<S, double>) {
    return x;
  } else {
    return to_string(x);
  }
}

/// {band: [lo, hi], sites: [n0, n1], coeffs: [...]} (row-major, one row per site).
template <Field S>
nlohmann::json window_json(const OperatorWindow<S>& w) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : w.coeffs) coeffs.push_back(scalar_json(c));
  return {{"band", {w.band_lo, w.band_hi}}, {"sites", {w.site_lo, w.site_hi}}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json curve_json(const SpectralCurve& curve);
SpectralCurve curve_from_json(const nlohmann::json& j);

nlohmann::json configuration_json(const ExactConfiguration& c);
/// Throws std::invalid_argument (via validate_configuration) or
/// nlohmann::json::exception for malformed input.
ExactConfiguration configuration_from_json(const nlohmann::json& j);

nlohmann::json constants_json(const TheoremConstants& c);

nlohmann::json polynomial_operator_json(const PolynomialBandOperator& op);

/// Ansatz, dimension, trivial dimension, basis (as polynomials and as
/// windows on [verify_lo, verify_hi]) and the verification residual of each
/// basis element on that window.
nlohmann::json exact_commutant_json(const PolynomialBandOperator& l, const ExactCommutant& result, long verify_lo,
                                    long verify_hi);

nlohmann::json windowed_commutant_json(const WindowedCommutant& result);

}  // namespace dkn
