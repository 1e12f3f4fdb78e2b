#pragma once

// Run settings: a flat "key = value" file with [sections], overridden by
// command-line flags. Every value remembers where it came from so parse
// errors can name the field and the line.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkn/rational.hpp"

namespace dkn::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Value {
  std::string text;
  std::string origin;  ///< "file.ini:12" or "--flag"
};

class Settings {
 public:
  /// Reads `path`; throws ConfigError on malformed lines, unknown keys and
  /// duplicate keys.
  void load_file(const std::filesystem::path& path);

  /// A flag value replaces whatever the file said.
  void set_flag(const std::string& key, const std::string& flag, const std::string& text);

  [[nodiscard]] std::optional<Value> find(const std::string& key) const;
  [[nodiscard]] bool has(const std::string& key) const { return find(key).has_value(); }

  [[nodiscard]] std::string text(const std::string& key, const std::string& fallback) const;
  [[nodiscard]] long integer(const std::string& key, long fallback) const;
  [[nodiscard]] std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const;
  [[nodiscard]] double real(const std::string& key, double fallback) const;
  [[nodiscard]] Rational rational(const std::string& key, const Rational& fallback) const;
  [[nodiscard]] std::vector<Rational> rationals(const std::string& key, const std::vector<Rational>& fallback) const;
  [[nodiscard]] std::vector<double> reals(const std::string& key, const std::vector<double>& fallback) const;

  /// "<key> (<origin>): <message>"
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

  static const std::vector<std::string>& known_keys();

 private:
  std::map<std::string, Value> values_;
};

std::vector<std::string> split_list(const std::string& text);

}  // namespace dkn::cli
