#pragma once

/// \file verify.hpp
/// Exact verification suites over random configurations.
///
/// Suites:
///   chain          R1, R2, R3 of the 4-periodic chain, n = 0..3
///   lax-x          [L~, ∂_x - b T^{-1} - d T^{-2}]
///   lax-y          [L~, ∂_y - T - f]
///   factorization  left ∘ right - (L_4 - z0)
///   a-formula      swapped product - explicit A-formula operator
///   lax17          [L_4, ∂_x - V_{n-1}V_n T^{-2}] with V, W from γ
///   spectral       quadratic identity = F_1, linear identity, ∂_x of the
///                  quadratic identity, propagation of Q
///   reduction      (V, W) flow, Q flow and k = 2 flow against the chain
///                  rule through V(γ), W(γ)
///   eigen          L_4 ψ = z ψ for the two-term recursion
///   negative-y     a z0 jet violating (℘')² = F_1(℘) must leave a nonzero
///                  y-commutator
/// Every suite except the last passes when all residuals are exactly zero
/// for both signs of ω.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dkn/darboux.hpp"
#include "dkn/random.hpp"

namespace dkn {

struct VerifyOptions {
  int samples = 20;
  std::uint64_t seed = 7;
  /// Constants of g_n; unset means the closing constants of each
  /// configuration.
  std::optional<TheoremConstants> constants;
  RandomRanges ranges;
  long site_lo = 0;
  long site_hi = 7;
};

struct CheckOutcome {
  bool ok = true;
  /// Largest residual magnitude seen (numeric embedding of Q(ω)).
  double residual = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int samples = 0;
  int passes = 0;
  nlohmann::json failures = nlohmann::json::array();
  double max_residual = 0.0;

  [[nodiscard]] bool passed() const noexcept { return passes == samples; }
};

/// Every suite, in the order "all" runs them.
const std::vector<std::string>& known_suites();

/// "all" or a comma-separated list of suite names; throws
/// std::invalid_argument for unknown names.
std::vector<std::string> select_suites(std::string_view selector);

std::vector<ExactConfiguration> sample_configurations(const VerifyOptions& options);

/// The constants a configuration is checked with.
TheoremConstants resolve_constants(const ExactConfiguration& c, const VerifyOptions& options);

CheckOutcome check_configuration(std::string_view suite, const ExactConfiguration& c, const VerifyOptions& options);

SuiteReport run_suite(std::string_view suite, const std::vector<ExactConfiguration>& configs,
                      const VerifyOptions& options);

/// {seed, samples, constants, suites: [{suite, samples, passes, failures,
/// max_residual, passed}], passed}
nlohmann::json report_json(const std::vector<SuiteReport>& reports, const VerifyOptions& options);

/// Configurations from a report (every failure dump), a single
/// configuration object, or an array of configuration objects.
std::vector<ExactConfiguration> replay_configurations(const nlohmann::json& j);

}  // namespace dkn
