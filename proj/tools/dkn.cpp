// dkn: verification suites, chain integrators, commutant search, ℘
// trajectories and single-configuration Darboux reports.
//
// Exit status: 0 success, 1 a selected check failed, 2 bad configuration or
// usage, 3 runtime failure (degenerate chain, pole, lost accuracy).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dkn/commutant.hpp"
#include "dkn/darboux.hpp"
#include "dkn/elliptic.hpp"
#include "dkn/rk4.hpp"
#include "dkn/serialize.hpp"
#include "dkn/spectral_q.hpp"
#include "dkn/verify.hpp"
#include "settings.hpp"

namespace {

using namespace dkn;
using cli::ConfigError;
using cli::Settings;
using nlohmann::json;
using R = Rational;

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

// z³ - z with a 4-periodic γ whose DKN trajectory stays bounded and
// separated (neighbour gap >= 0.2) for x in [0, 10].
const std::vector<R> kDefaultCurve{R(0), R(-1), R(0)};
const std::vector<R> kDefaultGamma{R(-9, 10), R(11, 10), R(-7, 5), R(9, 10)};

/// Flag text collected by CLI11, copied into Settings after parsing.
struct FlagTable {
  struct Entry {
    std::string key;
    std::string flag;
    std::shared_ptr<std::string> text;
  };
  std::vector<Entry> entries;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    auto text = std::make_shared<std::string>();
    app->add_option(flag, *text, help);
    entries.push_back({key, flag, std::move(text)});
  }

  void apply(CLI::App* app, Settings& s) const {
    for (const auto& e : entries) {
      if (app->count(e.flag) > 0) s.set_flag(e.key, e.flag, *e.text);
    }
  }
};

struct Command {
  CLI::App* app = nullptr;
  FlagTable flags;
  std::string config;
};

Command make_command(CLI::App& root, const std::string& name, const std::string& help) {
  Command c;
  c.app = root.add_subcommand(name, help);
  c.app->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  return c;
}

Settings load(const Command& c) {
  Settings s;
  if (!c.config.empty()) s.load_file(c.config);
  c.flags.apply(c.app, s);
  return s;
}

SpectralCurve read_curve(const Settings& s) {
  const auto c = s.rationals("curve.coefficients", kDefaultCurve);
  if (c.size() < 3 || c.size() % 2 == 0) {
    s.fail("curve.coefficients", "a genus-g curve needs 2g+1 coefficients c0..c2g (monic term implicit), got " +
                                     std::to_string(c.size()));
  }
  return SpectralCurve(c);
}

SpectralCurve read_elliptic_curve(const Settings& s) {
  SpectralCurve curve = read_curve(s);
  if (curve.genus() != 1) s.fail("curve.coefficients", "this command needs a genus-one curve (3 coefficients)");
  return curve;
}

std::ostream& open_or(const Settings& s, const std::string& key, std::ofstream& file, std::ostream& fallback) {
  const auto path = s.find(key);
  if (!path) return fallback;
  file.open(path->text);
  if (!file) s.fail(key, "cannot open '" + path->text + "' for writing");
  return file;
}

void write_json(const Settings& s, const json& j, std::ostream& fallback) {
  std::ofstream file;
  open_or(s, "output.json", file, fallback) << j.dump(2) << '\n';
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- verify

int run_verify(const Settings& s) {
  VerifyOptions o;
  o.samples = static_cast<int>(s.integer("verify.samples", 20));
  o.seed = s.unsigned_integer("verify.seed", 7);
  o.ranges.coordinate_bound = s.integer("verify.coordinate_bound", o.ranges.coordinate_bound);
  o.ranges.curve_bound = s.integer("verify.curve_bound", o.ranges.curve_bound);
  if (o.samples < 1) s.fail("verify.samples", "must be at least 1");
  if (o.ranges.coordinate_bound < 1 || o.ranges.curve_bound < 1) {
    s.fail(s.has("verify.curve_bound") ? "verify.curve_bound" : "verify.coordinate_bound", "must be at least 1");
  }

  std::string suite_selector = s.text("verify.suite", "all");
  std::string constants_text = s.text("verify.constants", "closing");
  std::vector<ExactConfiguration> configs;

  if (const auto replay = s.find("verify.replay")) {
    std::ifstream in(replay->text);
    if (!in) s.fail("verify.replay", "cannot open '" + replay->text + "'");
    json j;
    try {
      j = json::parse(in);
      configs = replay_configurations(j);
    } catch (const std::exception& e) {
      s.fail("verify.replay", e.what());
    }
    if (configs.empty()) s.fail("verify.replay", "no configurations to replay");
    // A replayed report keeps its own suites and constants unless overridden.
    if (j.is_object() && j.contains("suites") && !s.has("verify.suite")) {
      suite_selector.clear();
      for (const auto& r : j.at("suites")) {
        if (r.at("failures").empty()) continue;
        if (!suite_selector.empty()) suite_selector += ",";
        suite_selector += r.at("suite").get<std::string>();
      }
    }
    if (j.is_object() && j.contains("constants") && !s.has("verify.constants")) {
      constants_text = j.at("constants").get<std::string>();
    }
    o.samples = static_cast<int>(configs.size());
  }

  if (constants_text != "closing") {
    try {
      o.constants = TheoremConstants::parse(constants_text);
    } catch (const std::invalid_argument& e) {
      s.fail("verify.constants", e.what());
    }
  }
  std::vector<std::string> suites;
  try {
    suites = select_suites(suite_selector);
  } catch (const std::invalid_argument& e) {
    s.fail("verify.suite", e.what());
  }
  if (configs.empty()) configs = sample_configurations(o);

  std::vector<SuiteReport> reports;
  for (const auto& name : suites) reports.push_back(run_suite(name, configs, o));
  const json report = report_json(reports, o);
  write_json(s, report, std::cout);
  for (const auto& r : reports) {
    std::cerr << r.suite << ": " << r.passes << "/" << r.samples << (r.passed() ? " pass" : " FAIL") << '\n';
  }
  return report.at("passed").get<bool>() ? 0 : kExitFailed;
}

// -------------------------------------------------------------- simulate

bool gamma_flow(Flow f) { return f == Flow::dkn || f == Flow::reduced_t2; }

/// Σ log|V_n|; conserved by every flow here.
double log_v_product(Flow flow, const SpectralCurve& curve, const std::vector<double>& state, std::size_t period) {
  double sum = 0.0;
  if (gamma_flow(flow)) {
    const GammaChain<double> chain(curve, state);
    for (long n = 0; n < static_cast<long>(period); ++n) sum += std::log(std::fabs(vn_from_gamma(chain, n)));
  } else {
    for (std::size_t n = 0; n < period; ++n) sum += std::log(std::fabs(state[n]));
  }
  return sum;
}

struct Series {
  std::string name;
  std::vector<double> values;

  [[nodiscard]] json summary() const {
    double drift = 0.0;
    for (double v : values) drift = std::max(drift, std::fabs(v - values.front()));
    return {{"name", name}, {"initial", values.front()}, {"final", values.back()}, {"max_drift", drift},
            {"samples", values.size()}};
  }
};

int run_simulate(const Settings& s) {
  const SpectralCurve curve = read_elliptic_curve(s);
  Flow flow{};
  try {
    flow = parse_flow(s.text("chain.flow", "dkn"));
  } catch (const std::invalid_argument& e) {
    s.fail("chain.flow", e.what());
  }
  const auto gamma_exact = s.rationals("chain.gamma", kDefaultGamma);
  const double h = s.real("chain.h", 1e-3);
  const long steps = s.integer("chain.steps", 10000);
  const long record_every = s.integer("chain.record_every", 1);
  if (gamma_exact.size() < 3) s.fail("chain.gamma", "the chain stencil needs a period of at least 3");
  if (!(h > 0.0) || !std::isfinite(h)) s.fail("chain.h", "step must be positive");
  if (steps < 1) s.fail("chain.steps", "must be at least 1");
  if (record_every < 1) s.fail("chain.record_every", "must be at least 1");

  std::vector<double> gamma;
  for (const auto& g : gamma_exact) gamma.push_back(g.to_double());
  const std::size_t period = gamma.size();
  const GammaChain<double> chain(curve, gamma);

  std::vector<double> initial;
  try {
    if (gamma_flow(flow)) {
      initial = gamma;
    } else {
      const auto vw = reduce_to_vw(chain);
      initial = vw.v;
      initial.insert(initial.end(), vw.w.begin(), vw.w.end());
    }
  } catch (const DegenerateConfiguration& e) {
    s.fail("chain.gamma", e.what());
  }

  const auto traj = rk4_integrate(initial, flow_vector_field(flow, curve, static_cast<long>(period)), h,
                                  static_cast<int>(steps), static_cast<int>(record_every));

  {
    std::ofstream file;
    std::ostream& csv = open_or(s, "output.csv", file, std::cout);
    csv << (gamma_flow(flow) ? "step,x,site,gamma\n" : "step,x,site,V,W\n");
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
      const long step = std::lround(traj.x[i] / h);
      for (std::size_t n = 0; n < period; ++n) {
        csv << step << ',' << num(traj.x[i]) << ',' << n << ',' << num(traj.states[i][n]);
        if (!gamma_flow(flow)) csv << ',' << num(traj.states[i][period + n]);
        csv << '\n';
      }
    }
  }

  std::vector<Series> invariants{{"sum_log_abs_V", {}}};
  for (const auto& st : traj.states) invariants[0].values.push_back(log_v_product(flow, curve, st, period));

  // The closing constants of the 4-periodic chain are first integrals of
  // the DKN flow; evaluate them exactly at rationalized states.
  json closing_error;
  if (flow == Flow::dkn && period == 4) {
    const long every = std::max<long>(1, s.integer("chain.invariant_every", 0) > 0
                                             ? s.integer("chain.invariant_every", 0)
                                             : static_cast<long>(traj.states.size() / 100));
    Series s0{"closing_s0", {}}, k0{"closing_k0", {}}, p0{"closing_p0", {}};
    try {
      for (std::size_t i = 0; i < traj.states.size(); i += static_cast<std::size_t>(every)) {
        std::vector<R> g;
        for (double v : traj.states[i]) g.push_back(R::from_double(v));
        const auto k = closing_constants(curve, g);
        s0.values.push_back(k.s0.to_double());
        k0.values.push_back(k.k0.to_double());
        p0.values.push_back(k.p0.to_double());
      }
    } catch (const std::exception& e) {
      closing_error = e.what();
    }
    for (auto* series : {&s0, &k0, &p0}) {
      if (!series->values.empty()) invariants.push_back(*series);
    }
  }

  json summary = {{"flow", to_string(flow)},
                  {"curve", curve_json(curve)},
                  {"period", period},
                  {"h", h},
                  {"steps", steps},
                  {"completed_steps", traj.ok() ? steps : traj.failure->step},
                  {"failure", nullptr},
                  {"invariants", json::array()}};
  for (const auto& series : invariants) summary["invariants"].push_back(series.summary());
  if (!closing_error.is_null()) summary["closing_constants_error"] = closing_error;
  if (!traj.ok()) summary["failure"] = {{"step", traj.failure->step}, {"reason", traj.failure->reason}};
  write_json(s, summary, std::cerr);

  if (!traj.ok()) {
    std::cerr << "integration stopped at step " << traj.failure->step << ": " << traj.failure->reason << '\n';
    return kExitRuntime;
  }
  return 0;
}

// ------------------------------------------------------------- commutant

std::pair<long, long> read_sites(const Settings& s, long lo, long hi) {
  const auto v = s.rationals("commutant.sites", {R(lo), R(hi)});
  const auto fits = [](const R& x) { return x.is_integer() && x.numerator().fits_slong_p(); };
  if (v.size() != 2 || !fits(v[0]) || !fits(v[1]) || v[1] < v[0]) {
    s.fail("commutant.sites", "expected two integers lo,hi with lo <= hi");
  }
  return {v[0].numerator().get_si(), v[1].numerator().get_si()};
}

Polynomial<R> read_polynomial(const Settings& s, const std::string& key) {
  if (!s.has(key)) s.fail(key, "required for the custom variant (coefficients in n, lowest degree first)");
  return Polynomial<R>(s.rationals(key, {}));
}

int run_commutant(const Settings& s) {
  const std::string variant = s.text("commutant.variant", "sharp");
  const long genus = s.integer("commutant.genus", 1);
  if (genus < 1) s.fail("commutant.genus", "must be at least 1");
  const long band = s.integer("commutant.band", 2 * genus + 1);
  if (band < 0) s.fail("commutant.band", "must be non-negative");

  if (variant == "flat") {
    const auto r = s.reals("commutant.r", {0.0, 1.0});
    if (r.size() != 2) s.fail("commutant.r", "flat needs r0,r1");
    const auto [lo, hi] = read_sites(s, 0, 39);
    DifferenceOperator<double> l;
    try {
      l = flat_operator(FlatParams{r[0], r[1], static_cast<int>(genus)});
    } catch (const std::invalid_argument& e) {
      s.fail("commutant.r", e.what());
    }
    WindowedCommutant result;
    try {
      result = commutant_solve_windowed(l, static_cast<int>(band), lo, hi);
    } catch (const std::invalid_argument& e) {
      s.fail("commutant.sites", e.what());
    }
    json out = windowed_commutant_json(result);
    out["variant"] = "flat";
    write_json(s, out, std::cout);
    std::cerr << "nullity " << result.nullity << ", trivial " << result.trivial_count << '\n';
    return 0;
  }

  PolynomialBandOperator l;
  if (variant == "sharp") {
    const auto r = s.rationals("commutant.r", {R(0), R(0), R(0), R(1)});
    if (r.size() != 4) s.fail("commutant.r", "sharp needs r0,r1,r2,r3");
    try {
      l = PolynomialBandOperator::from_operator(sharp_operator(SharpParams{{r[0], r[1], r[2], r[3]},
                                                                           static_cast<int>(genus)}));
    } catch (const std::invalid_argument& e) {
      s.fail("commutant.r", e.what());
    }
  } else if (variant == "custom") {
    const auto v = read_polynomial(s, "commutant.v");
    const auto w = read_polynomial(s, "commutant.w");
    const auto op = build_l4<R>([v](long n) { return v(R(n)); }, [w](long n) { return w(R(n)); });
    l = PolynomialBandOperator::from_operator(op);
  } else {
    s.fail("commutant.variant", "expected sharp, flat or custom, got '" + variant + "'");
  }

  const long degree = s.integer("commutant.degree", 0);
  const long max_degree = s.integer("commutant.max_degree", std::max<long>(degree, 12));
  if (degree < 0) s.fail("commutant.degree", "must be non-negative");
  if (max_degree < degree) s.fail("commutant.max_degree", "must be at least the starting degree");
  const auto [lo, hi] = read_sites(s, 100, 140);

  const auto result = commutant_search_exact(l, static_cast<int>(band), static_cast<int>(degree),
                                             static_cast<int>(max_degree));
  json out = exact_commutant_json(l, result, lo, hi);
  out["variant"] = variant;
  out["operator"] = polynomial_operator_json(l);
  write_json(s, out, std::cout);
  std::cerr << "degree " << result.ansatz.degree << ": dimension " << result.dimension() << ", trivial "
            << result.trivial_dimension << (result.has_nontrivial() ? ", nontrivial found" : ", nothing new")
            << '\n';
  return 0;
}

// -------------------------------------------------------------- elliptic

int run_elliptic(const Settings& s) {
  const SpectralCurve curve = read_elliptic_curve(s);
  const double h = s.real("elliptic.h", 1e-3);
  const long steps = s.integer("elliptic.steps", 10000);
  const long record_every = s.integer("elliptic.record_every", 1);
  if (!(h > 0.0) || !std::isfinite(h)) s.fail("elliptic.h", "step must be positive");
  if (steps < 1) s.fail("elliptic.steps", "must be at least 1");
  if (record_every < 1) s.fail("elliptic.record_every", "must be at least 1");

  WpState start;
  try {
    start = wp_init_bounded(curve);
  } catch (const UnsupportedCurve& e) {
    s.fail("curve.coefficients", e.what());
  }
  const auto traj = wp_trajectory(curve, start, h, static_cast<int>(steps), static_cast<int>(record_every));

  std::ofstream file;
  std::ostream& csv = open_or(s, "output.csv", file, std::cout);
  csv << "y,wp,wp_prime,energy_drift\n";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    csv << num(traj.y[i]) << ',' << num(traj.states[i].wp) << ',' << num(traj.states[i].wp_prime) << ','
        << num(traj.energy_drift[i]) << '\n';
  }
  std::cerr << "max energy drift " << traj.max_drift << '\n';
  return 0;
}

// --------------------------------------------------------------- darboux

int run_darboux(const Settings& s) {
  ExactConfiguration c;
  c.curve = read_elliptic_curve(s);
  c.gamma = s.rationals("darboux.gamma", kDefaultGamma);
  c.p = s.rational("darboux.p", R(2));
  try {
    validate_configuration(c);
  } catch (const std::invalid_argument& e) {
    s.fail(s.has("darboux.p") ? "darboux.p" : "darboux.gamma", e.what());
  }

  const std::string sign_text = s.text("darboux.sign", "both");
  std::vector<int> signs;
  if (sign_text == "both") {
    signs = {1, -1};
  } else if (sign_text == "+1" || sign_text == "1") {
    signs = {1};
  } else if (sign_text == "-1") {
    signs = {-1};
  } else {
    s.fail("darboux.sign", "expected +1, -1 or both");
  }

  const TheoremConstants closing = closing_constants(c.curve, c.gamma);
  TheoremConstants constants = closing;
  if (const auto k = s.find("darboux.constants"); k && k->text != "closing") {
    try {
      constants = TheoremConstants::parse(k->text);
    } catch (const std::invalid_argument& e) {
      s.fail("darboux.constants", e.what());
    }
  }

  constexpr long kLo = 0;
  constexpr long kHi = 7;
  bool all = true;
  json branches = json::array();
  for (int sign : signs) {
    const auto sample = exact_sample(c.curve, c.gamma, c.p, sign, constants);
    const auto& v = sample.values();
    json sites = json::array();
    bool chain_ok = true;
    for (long n = 0; n < 4; ++n) {
      const auto r = sample.chain_residuals(n);
      for (const auto& x : r) chain_ok = chain_ok && is_zero(x);
      sites.push_back({{"n", n},
                       {"chi1", to_string(v.chi1(n))},
                       {"chi2", to_string(v.chi2(n))},
                       {"b", to_string(v.b(n))},
                       {"d", to_string(v.d(n))},
                       {"f", to_string(v.f(n))},
                       {"g", to_string(v.g(n))},
                       {"R", {to_string(r[0]), to_string(r[1]), to_string(r[2])}}});
    }
    json checks = json::object();
    bool branch_ok = chain_ok;
    const auto record = [&](const char* name, const DifferenceOperator<QuadRational>& op) {
      const BandNorm norm = max_band_norm(op, kLo, kHi);
      checks[name] = {{"zero", norm.exactly_zero}, {"max_magnitude", norm.max_magnitude}};
      branch_ok = branch_ok && norm.exactly_zero;
    };
    record("factorization", sample.factorization_residual(kLo, kHi));
    record("a_formula", sample.a_formula_residual(kLo, kHi));
    record("lax_x", sample.commutator_x_residual(kLo, kHi));
    record("lax_y", sample.commutator_y_residual(kLo, kHi));
    checks["chain"] = {{"zero", chain_ok}};
    branches.push_back({{"sign", sign}, {"sites", std::move(sites)}, {"checks", std::move(checks)},
                        {"passed", branch_ok}});
    all = all && branch_ok;
  }

  json out = {{"configuration", configuration_json(c)},
              {"constants", constants_json(constants)},
              {"closing_constants", constants_json(closing)},
              {"window", {kLo, kHi}},
              {"branches", std::move(branches)},
              {"passed", all}};
  write_json(s, out, std::cout);
  std::cerr << (all ? "all residuals vanish" : "nonzero residuals") << '\n';
  return all ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for rank-two commuting difference operators"};
  app.require_subcommand(1);

  Command verify = make_command(app, "verify", "Exact residual suites on random configurations");
  Command simulate = make_command(app, "simulate", "RK4 on a periodic chain; CSV trajectory, JSON drift summary");
  Command commutant = make_command(app, "commutant", "Search for operators commuting with L4");
  Command elliptic = make_command(app, "elliptic", "Bounded real branch of (wp')^2 = F(wp) as CSV");
  Command darboux = make_command(app, "darboux", "Darboux data and residuals for one exact configuration");

  for (Command* c : {&verify, &simulate, &commutant, &elliptic, &darboux}) {
    c->app->add_option("--config", c->config, "Key-value file with [sections]; flags override it")
        ->check(CLI::ExistingFile);
    c->flags.add(c->app, "--output", "output.json", "JSON output path");
  }
  for (Command* c : {&simulate, &elliptic, &darboux}) {
    c->flags.add(c->app, "--curve", "curve.coefficients", "c0,c1,c2 of z^3 + c2 z^2 + c1 z + c0");
  }
  for (Command* c : {&simulate, &elliptic}) c->flags.add(c->app, "--csv", "output.csv", "CSV output path");

  verify.flags.add(verify.app, "--suite", "verify.suite", "all or a comma-separated list of suites");
  verify.flags.add(verify.app, "--samples", "verify.samples", "random configurations (default 20)");
  verify.flags.add(verify.app, "--seed", "verify.seed", "64-bit seed (default 7)");
  verify.flags.add(verify.app, "--constants", "verify.constants", "s0,k0,p0,s1,k1,p1 or 'closing'");
  verify.flags.add(verify.app, "--replay", "verify.replay", "re-run the configurations of a report");
  verify.flags.add(verify.app, "--coordinate-bound", "verify.coordinate_bound", "numerator/denominator bound");
  verify.flags.add(verify.app, "--curve-bound", "verify.curve_bound", "bound for curve coefficients");

  simulate.flags.add(simulate.app, "--flow", "chain.flow", "dkn, vw, flow2 or reduced_t2");
  simulate.flags.add(simulate.app, "--gamma", "chain.gamma", "initial gamma over one period");
  simulate.flags.add(simulate.app, "--h", "chain.h", "step size (default 1e-3)");
  simulate.flags.add(simulate.app, "--steps", "chain.steps", "number of steps (default 10000)");
  simulate.flags.add(simulate.app, "--record-every", "chain.record_every", "CSV stride in steps");
  simulate.flags.add(simulate.app, "--invariant-every", "chain.invariant_every",
                     "stride (in recorded states) for the exact first integrals");

  commutant.flags.add(commutant.app, "--variant", "commutant.variant", "sharp, flat or custom");
  commutant.flags.add(commutant.app, "--band", "commutant.band", "half-width M of the ansatz (default 2g+1)");
  commutant.flags.add(commutant.app, "--degree", "commutant.degree", "starting polynomial degree");
  commutant.flags.add(commutant.app, "--max-degree", "commutant.max_degree", "last degree tried");
  commutant.flags.add(commutant.app, "--genus", "commutant.genus", "genus of the sharp/flat family");
  commutant.flags.add(commutant.app, "--r", "commutant.r", "sharp: r0,r1,r2,r3; flat: r0,r1");
  commutant.flags.add(commutant.app, "--v", "commutant.v", "custom V(n), coefficients lowest first");
  commutant.flags.add(commutant.app, "--w", "commutant.w", "custom W(n), coefficients lowest first");
  commutant.flags.add(commutant.app, "--sites", "commutant.sites", "lo,hi: verification or solve window");

  elliptic.flags.add(elliptic.app, "--h", "elliptic.h", "step size (default 1e-3)");
  elliptic.flags.add(elliptic.app, "--steps", "elliptic.steps", "number of steps (default 10000)");
  elliptic.flags.add(elliptic.app, "--record-every", "elliptic.record_every", "CSV stride in steps");

  darboux.flags.add(darboux.app, "--gamma", "darboux.gamma", "gamma_0..gamma_3, exact");
  darboux.flags.add(darboux.app, "--p", "darboux.p", "z0 = p with F(p) a non-square");
  darboux.flags.add(darboux.app, "--sign", "darboux.sign", "+1, -1 or both");
  darboux.flags.add(darboux.app, "--constants", "darboux.constants", "s0,k0,p0,s1,k1,p1 or 'closing'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify.app) return run_verify(load(verify));
    if (*simulate.app) return run_simulate(load(simulate));
    if (*commutant.app) return run_commutant(load(commutant));
    if (*elliptic.app) return run_elliptic(load(elliptic));
    if (*darboux.app) return run_darboux(load(darboux));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}
