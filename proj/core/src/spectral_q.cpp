#include "dkn/spectral_q.hpp"

#include <cmath>

namespace dkn {

DifferenceOperator<Rational> sharp_operator(const SharpParams& params) {
  if (params.genus < 1) throw std::invalid_argument("sharp_operator: genus must be >= 1");
  if (params.r[3].is_zero()) throw std::invalid_argument("sharp_operator: r3 must be nonzero");

  const auto r = params.r;
  const Rational diag = Rational(params.genus) * Rational(params.genus + 1) * r[3];
  auto potential = [r](long n) {
    const Rational x(n);
    return ((r[3] * x + r[2]) * x + r[1]) * x + r[0];
  };
  auto diagonal = [diag](long n) { return diag * Rational(n); };
  return build_l4<Rational>(potential, diagonal);
}

DifferenceOperator<double> flat_operator(const FlatParams& params) {
  if (params.genus < 1) throw std::invalid_argument("flat_operator: genus must be >= 1");
  if (params.r1 == 0.0) throw std::invalid_argument("flat_operator: r1 must be nonzero");

  const double r0 = params.r0;
  const double r1 = params.r1;
  const double g = params.genus;
  const double amplitude = -4.0 * r1 * std::sin(g / 2.0) * std::sin((g + 1.0) / 2.0);
  auto potential = [r0, r1](long n) { return r1 * std::cos(static_cast<double>(n)) + r0; };
  auto diagonal = [amplitude](long n) { return amplitude * std::cos(static_cast<double>(n) + 0.5); };
  return build_l4<double>(potential, diagonal);
}

}  // namespace dkn
