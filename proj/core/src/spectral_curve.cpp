#include "dkn/spectral_curve.hpp"

namespace dkn {

SpectralCurve::SpectralCurve(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.size() < 3 || c_.size() % 2 == 0) {
    throw std::invalid_argument("SpectralCurve: expected 2g+1 coefficients c_0..c_2g (g >= 1), got " +
                                std::to_string(c_.size()));
  }
  genus_ = static_cast<int>(c_.size() - 1) / 2;

  const Polynomial<Rational> f = polynomial();
  const Polynomial<Rational> f1 = f.derivative();
  const Polynomial<Rational> f2 = f1.derivative();
  d1_ = f1.coefficients();
  d2_ = f2.coefficients();
}

SpectralCurve SpectralCurve::elliptic(Rational c2, Rational c1, Rational c0) {
  return SpectralCurve({std::move(c0), std::move(c1), std::move(c2)});
}

const Rational& SpectralCurve::coefficient(int i) const {
  static const Rational one(1);
  if (i == degree()) return one;
  if (i < 0 || i > degree()) throw std::out_of_range("SpectralCurve: coefficient index out of range");
  return c_[static_cast<std::size_t>(i)];
}

Polynomial<Rational> SpectralCurve::polynomial() const {
  std::vector<Rational> all = c_;
  all.emplace_back(1);
  return Polynomial<Rational>(std::move(all));
}

}  // namespace dkn
