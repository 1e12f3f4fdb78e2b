#include "dkn/serialize.hpp"

namespace dkn {

using nlohmann::json;

json curve_json(const SpectralCurve& curve) {
  json c = json::array();
  for (const auto& x : curve.coefficients()) c.push_back(x.str());
  return c;
}

SpectralCurve curve_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(Rational::parse(x.get<std::string>()));
  return SpectralCurve(std::move(c));
}

json configuration_json(const ExactConfiguration& c) {
  json gamma = json::array();
  for (const auto& g : c.gamma) gamma.push_back(g.str());
  return {{"curve", curve_json(c.curve)}, {"gamma", std::move(gamma)}, {"p", c.p.str()}};
}

ExactConfiguration configuration_from_json(const json& j) {
  ExactConfiguration c;
  c.curve = curve_from_json(j.at("curve"));
  for (const auto& g : j.at("gamma")) c.gamma.push_back(Rational::parse(g.get<std::string>()));
  c.p = Rational::parse(j.at("p").get<std::string>());
  validate_configuration(c);
  return c;
}

json constants_json(const TheoremConstants& c) {
  return {{"s0", c.s0.str()}, {"k0", c.k0.str()}, {"p0", c.p0.str()},
          {"s1", c.s1.str()}, {"k1", c.k1.str()}, {"p1", c.p1.str()}};
}

json polynomial_operator_json(const PolynomialBandOperator& op) {
  json bands = json::object();
  for (const auto& [j, p] : op.bands()) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    bands[std::to_string(j)] = std::move(coeffs);
  }
  return bands;
}

json exact_commutant_json(const PolynomialBandOperator& l, const ExactCommutant& result, long verify_lo,
                          long verify_hi) {
  json basis = json::array();
  for (const auto& x : result.basis) {
    const BandNorm norm = commutant_verification(l, x, verify_lo, verify_hi);
    basis.push_back({{"polynomials", polynomial_operator_json(x)},
                     {"window", window_json(x.to_operator().window(verify_lo, verify_hi))},
                     {"residual_exact_zero", norm.exactly_zero},
                     {"residual_max", norm.max_magnitude}});
  }
  json out = {{"ansatz", {{"type", "polynomial"}, {"band", result.ansatz.band}, {"degree", result.ansatz.degree}}},
              {"dimension", result.dimension()},
              {"trivial_dimension", result.trivial_dimension},
              {"nontrivial", result.has_nontrivial()},
              {"verification_sites", {verify_lo, verify_hi}},
              {"basis", std::move(basis)}};
  if (result.nontrivial) out["nontrivial_element"] = polynomial_operator_json(*result.nontrivial);
  return out;
}

json windowed_commutant_json(const WindowedCommutant& r) {
  return {{"ansatz", {{"type", "windowed"}, {"band", r.band}, {"sites", {r.site_lo, r.site_hi}}}},
          {"equations", r.equations},
          {"unknowns", r.unknowns},
          {"nullity", r.nullity},
          {"trivial_count", r.trivial_count},
          {"largest_singular_value", r.largest_singular_value},
          {"smallest_singular_values", r.smallest_singular_values},
          {"gap", r.gap},
          {"residual", r.residual},
          {"representative", window_json(r.representative)}};
}

}  // namespace dkn
