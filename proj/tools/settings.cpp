#include "settings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace dkn::cli {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

template <class T>
T parse_number(const Settings& s, const std::string& key, const std::string& text) {
  T out{};
  const std::string t = trim(text);
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty()) s.fail(key, "cannot parse '" + text + "'");
  return out;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(trim(item));
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(trim(item));
  return out;
}

const std::vector<std::string>& Settings::known_keys() {
  static const std::vector<std::string> keys{
      "curve.coefficients",
      "chain.gamma",         "chain.flow",          "chain.h",          "chain.steps",
      "chain.record_every",  "chain.invariant_every",
      "verify.suite",        "verify.samples",      "verify.seed",      "verify.constants",
      "verify.replay",       "verify.coordinate_bound", "verify.curve_bound",
      "commutant.variant",   "commutant.band",      "commutant.degree", "commutant.max_degree",
      "commutant.genus",     "commutant.r",         "commutant.v",      "commutant.w",
      "commutant.sites",
      "elliptic.h",          "elliptic.steps",      "elliptic.record_every",
      "darboux.gamma",       "darboux.p",           "darboux.sign",     "darboux.constants",
      "output.csv",          "output.json",
  };
  return keys;
}

void Settings::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::string line;
  std::string section;
  int number = 0;
  const std::string name = path.filename().string();
  while (std::getline(in, line)) {
    ++number;
    const std::string where = name + ":" + std::to_string(number);
    if (const auto hash = line.find_first_of("#;"); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
    const auto& known = known_keys();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
    if (values_.count(key) != 0) throw ConfigError(where + ": '" + key + "' already set at " + values_[key].origin);
    values_[key] = Value{trim(line.substr(eq + 1)), where};
  }
}

void Settings::set_flag(const std::string& key, const std::string& flag, const std::string& text) {
  values_[key] = Value{text, flag};
}

std::optional<Value> Settings::find(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void Settings::fail(const std::string& key, const std::string& message) const {
  const auto v = find(key);
  throw ConfigError(key + " (" + (v ? v->origin : std::string("default")) + "): " + message);
}

std::string Settings::text(const std::string& key, const std::string& fallback) const {
  const auto v = find(key);
  return v ? v->text : fallback;
}

long Settings::integer(const std::string& key, long fallback) const {
  const auto v = find(key);
  return v ? parse_number<long>(*this, key, v->text) : fallback;
}

std::uint64_t Settings::unsigned_integer(const std::string& key, std::uint64_t fallback) const {
  const auto v = find(key);
  return v ? parse_number<std::uint64_t>(*this, key, v->text) : fallback;
}

double Settings::real(const std::string& key, double fallback) const {
  const auto v = find(key);
  return v ? parse_number<double>(*this, key, v->text) : fallback;
}

Rational Settings::rational(const std::string& key, const Rational& fallback) const {
  const auto v = find(key);
  if (!v) return fallback;
  try {
    return Rational::parse(v->text);
  } catch (const std::invalid_argument& e) {
    fail(key, e.what());
  }
}

std::vector<Rational> Settings::rationals(const std::string& key, const std::vector<Rational>& fallback) const {
  const auto v = find(key);
  if (!v) return fallback;
  std::vector<Rational> out;
  for (const auto& item : split_list(v->text)) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      fail(key, "item '" + item + "': " + e.what());
    }
  }
  return out;
}

std::vector<double> Settings::reals(const std::string& key, const std::vector<double>& fallback) const {
  const auto v = find(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& item : split_list(v->text)) out.push_back(parse_number<double>(*this, key, item));
  return out;
}

}  // namespace dkn::cli
