#include "dkn/darboux.hpp"

#include <set>

#include "dkn/elliptic.hpp"
#include "dkn/polynomial.hpp"

namespace dkn {

TheoremConstants TheoremConstants::parse(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    v.push_back(Rational::parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 6) {
    throw std::invalid_argument("constants: expected 6 values s0,k0,p0,s1,k1,p1, got " + std::to_string(v.size()));
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

bool TheoremConstants::is_zero() const {
  return s0.is_zero() && k0.is_zero() && p0.is_zero() && s1.is_zero() && k1.is_zero() && p1.is_zero();
}

std::string TheoremConstants::str() const {
  return s0.str() + "," + k0.str() + "," + p0.str() + "," + s1.str() + "," + k1.str() + "," + p1.str();
}

GammaJetChain<QuadRational> lift_gamma_jets(const GammaJetChain<Rational>& jets) {
  std::vector<Jet<QuadRational>> lifted;
  for (const auto& j : jets.values()) lifted.push_back(convert_jet<QuadRational>(j));
  return GammaJetChain<QuadRational>(jets.curve(), std::move(lifted));
}

DarbouxSample<QuadRational> exact_sample(const SpectralCurve& curve, const std::vector<Rational>& gamma,
                                         const Rational& p, int sign, TheoremConstants constants) {
  const auto jets = prolong_gamma_jets(GammaChain<Rational>(curve, gamma), 3);
  return DarbouxSample<QuadRational>(lift_gamma_jets(jets), exact_wp_jet(curve, p, 3, sign), std::move(constants));
}

namespace {

/// Integers above every root of F, away from γ, with F(p) not a square.
std::vector<Rational> closing_nodes(const SpectralCurve& curve, const std::vector<Rational>& gamma) {
  Rational bound(1);
  for (const auto& c : curve.coefficients()) bound += c.abs();
  const std::set<Rational> taken(gamma.begin(), gamma.end());
  std::vector<Rational> nodes;
  // Cauchy bound: every real root r has |r| < 1 + max|c_i| <= 1 + Σ|c_i|.
  Rational p(mpq_class(mpz_class(bound.numerator() / bound.denominator()) + 1));
  while (nodes.size() < 3) {
    const Rational f = curve.eval(p);
    if (!taken.contains(p) && !f.is_zero() && !is_rational_square(f)) nodes.push_back(p);
    p += Rational(1);
  }
  return nodes;
}

}  // namespace

TheoremConstants closing_constants(const SpectralCurve& curve, const std::vector<Rational>& gamma) {
  const auto jets = lift_gamma_jets(prolong_gamma_jets(GammaChain<Rational>(curve, gamma), 3));
  std::vector<Rational> nodes = closing_nodes(curve, gamma);
  std::vector<Rational> values;
  for (const auto& p : nodes) {
    const auto wp = exact_wp_jet(curve, p, 3, 1);
    const DarbouxSample<QuadRational> sample(jets, wp);
    const QuadRational r3 = sample.chain_residuals(0)[2];
    const QuadRational s = r3 * wp[1] * QuadRational(Rational(1, 2));
    if (!s.b().is_zero()) {
      throw std::runtime_error("closing_constants: R3 is not a pure multiple of w at p = " + p.str());
    }
    values.push_back(s.a());
  }
  const Polynomial<Rational> poly = interpolate(nodes, values);
  return {poly.coefficient(2), poly.coefficient(1), poly.coefficient(0), Rational(0), Rational(0), Rational(0)};
}

}  // namespace dkn
