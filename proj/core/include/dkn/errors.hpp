#pragma once

#include <stdexcept>
#include <string>

namespace dkn {

/// Two chain values that must differ coincide (exactly, or within the
/// numeric collision tolerance).
class DegenerateConfiguration : public std::domain_error {
 public:
  DegenerateConfiguration(long site_a, long site_b, const std::string& what)
      : std::domain_error("degenerate configuration: " + what + " (sites " + std::to_string(site_a) +
                          ", " + std::to_string(site_b) + ")"),
        site_a_(site_a),
        site_b_(site_b) {}

  [[nodiscard]] long site_a() const noexcept { return site_a_; }
  [[nodiscard]] long site_b() const noexcept { return site_b_; }

 private:
  long site_a_;
  long site_b_;
};

/// A denominator in an explicit formula vanished.
class PoleError : public std::domain_error {
 public:
  PoleError(long site, const std::string& factor)
      : std::domain_error("pole at site " + std::to_string(site) + ": " + factor + " = 0"),
        site_(site),
        factor_(factor) {}

  [[nodiscard]] long site() const noexcept { return site_; }
  [[nodiscard]] const std::string& factor() const noexcept { return factor_; }

 private:
  long site_;
  std::string factor_;
};

class UnsupportedCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric integration lost accuracy (energy drift above tolerance, etc.).
class AccuracyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dkn
