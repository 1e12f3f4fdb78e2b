#include "dkn/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dkn/elliptic.hpp"
#include "dkn/serialize.hpp"
#include "dkn/spectral_q.hpp"

namespace dkn {

namespace {

using nlohmann::json;

template <Field S>
void absorb(CheckOutcome& out, const DifferenceOperator<S>& op, long lo, long hi, const std::string& what) {
  const BandNorm norm = max_band_norm(op, lo, hi);
  out.residual = std::max(out.residual, norm.max_magnitude);
  if (!norm.exactly_zero) {
    out.ok = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what + " nonzero";
  }
}

template <Field S>
void absorb(CheckOutcome& out, const S& value, const std::string& what) {
  out.residual = std::max(out.residual, magnitude(value));
  if (!is_zero(value)) {
    out.ok = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what + " = " + to_string(value);
  }
}

void require(CheckOutcome& out, bool condition, const std::string& what) {
  if (!condition) {
    out.ok = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
  }
}

std::string sign_label(int sign) { return sign > 0 ? "+w" : "-w"; }

void check_chain(CheckOutcome& out, const ExactConfiguration& c, const VerifyOptions& o) {
  const TheoremConstants k = resolve_constants(c, o);
  for (int sign : {1, -1}) {
    const auto sample = exact_sample(c.curve, c.gamma, c.p, sign, k);
    for (long n = 0; n < 4; ++n) {
      const auto r = sample.chain_residuals(n);
      for (int i = 0; i < 3; ++i) {
        absorb(out, r[static_cast<std::size_t>(i)],
               "R" + std::to_string(i + 1) + "(n=" + std::to_string(n) + ", " + sign_label(sign) + ")");
      }
    }
  }
}

template <class Residual>
void check_operator(CheckOutcome& out, const ExactConfiguration& c, const VerifyOptions& o, const TheoremConstants& k,
                    const std::string& name, Residual residual) {
  for (int sign : {1, -1}) {
    const auto sample = exact_sample(c.curve, c.gamma, c.p, sign, k);
    absorb(out, residual(sample, o.site_lo, o.site_hi), o.site_lo, o.site_hi, name + " (" + sign_label(sign) + ")");
  }
}

void check_lax17(CheckOutcome& out, const ExactConfiguration& c, const VerifyOptions& o) {
  using J = Jet<Rational>;
  const auto jets = prolong_gamma_jets(GammaChain<Rational>(c.curve, c.gamma), 2);
  const auto l = build_l4<J>([jets](long n) { return vn_from_gamma(jets, n); },
                             [jets](long n) { return wn_from_gamma(jets, n); });
  const GammaChain<Rational> chain(c.curve, c.gamma);
  const auto a = DifferenceOperator<Rational>::from_bands(
      {{-2, [chain](long n) { return vn_from_gamma(chain, n - 1) * vn_from_gamma(chain, n); }}});
  absorb(out, lax_residual(value_part(l), derivative_part(l), a), o.site_lo, o.site_hi, "L_x + [L, A]");
}

void check_spectral(CheckOutcome& out, const ExactConfiguration& c) {
  const GammaChain<Rational> chain(c.curve, c.gamma);
  const Polynomial<Rational> f = c.curve.polynomial();
  const auto jets = prolong_gamma_jets(chain, 1);
  for (long n = 0; n < 4; ++n) {
    const std::string at = "(n=" + std::to_string(n) + ")";
    const auto quad = gamma_quadratic_stencil(chain, n);
    require(out, eq15_polynomial(quad) == f, "quadratic identity != F " + at);
    absorb(out, eq15_expression(quad, c.p) - c.curve.eval(c.p), "quadratic identity at p - F(p) " + at);
    const auto lin = gamma_linear_stencil(chain, n);
    require(out, eq16_residual(lin).is_zero_polynomial(), "linear identity residual nonzero " + at);
    require(out, propagate_q(lin, 1) == gamma_q(chain, n + 3), "propagated Q differs " + at);
    const auto moving = eq15_polynomial(gamma_quadratic_stencil(jets, n));
    for (const auto& coeff : moving.coefficients()) {
      absorb(out, coeff[1], "x-derivative of quadratic identity " + at);
    }
  }
}

void check_reduction(CheckOutcome& out, const ExactConfiguration& c) {
  const GammaChain<Rational> chain(c.curve, c.gamma);
  const auto jets = prolong_gamma_jets(chain, 1);
  const auto vw = reduce_to_vw(chain);

  std::vector<Jet<Rational>> t2;
  for (long m = 0; m < 4; ++m) {
    t2.push_back(Jet<Rational>{chain.at(m), reduced_flow2_gamma(chain, m)});
  }
  const GammaChain<Jet<Rational>> t2_jets(c.curve, std::move(t2));

  for (long n = 0; n < 4; ++n) {
    const std::string at = "(n=" + std::to_string(n) + ")";
    const auto rate = chain_vw_rhs(vw, n);
    absorb(out, rate.v - vn_from_gamma(jets, n)[1], "dV/dx mismatch " + at);
    absorb(out, rate.w - wn_from_gamma(jets, n)[1], "dW/dx mismatch " + at);

    const auto q = q_flow_rhs(gamma_q(chain, n - 1), gamma_q(chain, n + 1), vn_from_gamma(chain, n));
    require(out, q == Polynomial<Rational>{-dkn_rhs(chain, n)}, "Q flow differs from DKN " + at);

    const auto rate2 = flow2_rhs(vw, n);
    absorb(out, rate2.v - vn_from_gamma(t2_jets, n)[1], "t2: dV mismatch " + at);
    absorb(out, rate2.w - wn_from_gamma(t2_jets, n)[1], "t2: dW mismatch " + at);
  }
}

void check_eigen(CheckOutcome& out, const ExactConfiguration& c, const VerifyOptions& o) {
  const QuadRational w = QuadRational::generator(c.curve.eval(c.p));
  for (int sign : {1, -1}) {
    const auto fields = point_fields(c.curve, c.gamma, c.p, QuadRational(sign) * w);
    const auto count = static_cast<std::size_t>(o.site_hi - o.site_lo + 5);
    const auto psi = eigenfunction_sequence(fields, o.site_lo - 2, QuadRational(1), QuadRational(c.p), count);
    const auto l4 = l4_operator(fields);
    for (long n = o.site_lo; n <= o.site_hi; ++n) {
      absorb(out, apply(l4, psi, n) - QuadRational(c.p) * psi.at(n),
             "L4 psi - z psi (n=" + std::to_string(n) + ", " + sign_label(sign) + ")");
    }
  }
}

void check_negative_y(CheckOutcome& out, const ExactConfiguration& c, const VerifyOptions& o) {
  const TheoremConstants k = resolve_constants(c, o);
  const auto jets = lift_gamma_jets(prolong_gamma_jets(GammaChain<Rational>(c.curve, c.gamma), 3));
  for (int sign : {1, -1}) {
    const auto good = exact_wp_jet(c.curve, c.p, 3, sign);
    // Bump ℘'' by one, so the jet no longer satisfies ℘'' = F'(℘)/2.
    const std::vector<QuadRational> bad{good[0], good[1], good[2] + QuadRational(1), good[3]};
    const DarbouxSample<QuadRational> sample(jets, Jet<QuadRational>(std::span<const QuadRational>(bad)), k);
    const BandNorm norm = max_band_norm(sample.commutator_y_residual(o.site_lo, o.site_hi), o.site_lo, o.site_hi);
    out.residual = std::max(out.residual, norm.max_magnitude);
    require(out, !norm.exactly_zero, "y-commutator vanished for a jet violating the curve ODE (" + sign_label(sign) + ")");
  }
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"chain",     "lax-x",     "lax-y", "factorization", "a-formula",
                                              "lax17",     "spectral",  "reduction", "eigen",     "negative-y"};
  return names;
}

std::vector<std::string> select_suites(std::string_view selector) {
  if (selector == "all") return known_suites();
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= selector.size()) {
    const std::size_t comma = selector.find(',', start);
    const std::string name(selector.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                  : comma - start));
    if (std::find(known_suites().begin(), known_suites().end(), name) == known_suites().end()) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
    out.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<ExactConfiguration> sample_configurations(const VerifyOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("verify: samples must be >= 1");
  std::vector<ExactConfiguration> out;
  for (int i = 0; i < options.samples; ++i) {
    out.push_back(random_configuration(options.seed, static_cast<std::uint64_t>(i), options.ranges));
  }
  return out;
}

TheoremConstants resolve_constants(const ExactConfiguration& c, const VerifyOptions& options) {
  return options.constants ? *options.constants : closing_constants(c.curve, c.gamma);
}

CheckOutcome check_configuration(std::string_view suite, const ExactConfiguration& c, const VerifyOptions& o) {
  CheckOutcome out;
  try {
    if (suite == "chain") {
      check_chain(out, c, o);
    } else if (suite == "lax-x") {
      check_operator(out, c, o, resolve_constants(c, o), "x-commutator",
                     [](const auto& s, long lo, long hi) { return s.commutator_x_residual(lo, hi); });
    } else if (suite == "lax-y") {
      check_operator(out, c, o, resolve_constants(c, o), "y-commutator",
                     [](const auto& s, long lo, long hi) { return s.commutator_y_residual(lo, hi); });
    } else if (suite == "factorization") {
      check_operator(out, c, o, TheoremConstants{}, "factorization",
                     [](const auto& s, long lo, long hi) { return s.factorization_residual(lo, hi); });
    } else if (suite == "a-formula") {
      check_operator(out, c, o, TheoremConstants{}, "swapped product - A formulas",
                     [](const auto& s, long lo, long hi) { return s.a_formula_residual(lo, hi); });
    } else if (suite == "lax17") {
      check_lax17(out, c, o);
    } else if (suite == "spectral") {
      check_spectral(out, c);
    } else if (suite == "reduction") {
      check_reduction(out, c);
    } else if (suite == "eigen") {
      check_eigen(out, c, o);
    } else if (suite == "negative-y") {
      check_negative_y(out, c, o);
    } else {
      throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = e.what();
  }
  return out;
}

SuiteReport run_suite(std::string_view suite, const std::vector<ExactConfiguration>& configs,
                      const VerifyOptions& options) {
  SuiteReport report;
  report.suite = std::string(suite);
  report.samples = static_cast<int>(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const CheckOutcome outcome = check_configuration(suite, configs[i], options);
    report.max_residual = std::max(report.max_residual, outcome.residual);
    if (outcome.ok) {
      ++report.passes;
      continue;
    }
    json dump = {{"index", i}, {"configuration", configuration_json(configs[i])}, {"detail", outcome.detail},
                 {"residual", outcome.residual}};
    if (options.constants) dump["constants"] = constants_json(*options.constants);
    report.failures.push_back(std::move(dump));
  }
  return report;
}

json report_json(const std::vector<SuiteReport>& reports, const VerifyOptions& options) {
  json suites = json::array();
  bool all = true;
  for (const auto& r : reports) {
    suites.push_back({{"suite", r.suite},
                      {"samples", r.samples},
                      {"passes", r.passes},
                      {"failures", r.failures},
                      {"max_residual", r.max_residual},
                      {"passed", r.passed()}});
    all = all && r.passed();
  }
  return {{"seed", options.seed},
          {"samples", options.samples},
          {"constants", options.constants ? json(options.constants->str()) : json("closing")},
          {"sites", {options.site_lo, options.site_hi}},
          {"suites", std::move(suites)},
          {"passed", all}};
}

std::vector<ExactConfiguration> replay_configurations(const json& j) {
  std::vector<ExactConfiguration> out;
  std::set<std::string> seen;
  const auto add = [&](const json& cfg) {
    if (seen.insert(cfg.dump()).second) out.push_back(configuration_from_json(cfg));
  };
  if (j.is_object() && j.contains("suites")) {
    for (const auto& s : j.at("suites")) {
      for (const auto& f : s.at("failures")) add(f.at("configuration"));
    }
  } else if (j.is_object() && j.contains("configuration")) {
    add(j.at("configuration"));
  } else if (j.is_object()) {
    add(j);
  } else if (j.is_array()) {
    for (const auto& cfg : j) add(cfg.contains("configuration") ? cfg.at("configuration") : cfg);
  } else {
    throw std::invalid_argument("replay: expected a report, a configuration, or an array of configurations");
  }
  return out;
}

}  // namespace dkn
