#include "dkn/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dkn {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw std::invalid_argument("Rational: malformed integer '" + std::string(s) + "'");
  }
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    const mpz_class ez = parse_integer(s.substr(e + 1));
    if (!ez.fits_slong_p()) throw std::invalid_argument("Rational: exponent out of range");
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string whole(mantissa);
  std::string frac;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    whole = std::string(mantissa.substr(0, dot));
    frac = std::string(mantissa.substr(dot + 1));
  }
  if (whole.empty() && frac.empty()) throw std::invalid_argument("Rational: empty number");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
    throw std::invalid_argument("Rational: malformed decimal '" + std::string(s) + "'");
  }
  mpz_class num(whole.empty() ? std::string("0") : whole + frac, 10);
  if (whole.empty()) num = mpz_class(frac, 10);
  exponent -= static_cast<long>(frac.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  if (negative) q = -q;
  return Rational(q);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("Rational: empty string");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    return Rational(mpq_class(num, den));
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(mpq_class(parse_integer(text)));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("Rational: non-finite double");
  return Rational(mpq_class(value));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.value().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(x.value().get_den_mpz_t()) != 0;
}

}  // namespace dkn
