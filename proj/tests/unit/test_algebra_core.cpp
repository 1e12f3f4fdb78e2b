#include <doctest.h>

#include <cmath>

#include "dkn/jet.hpp"
#include "dkn/polynomial.hpp"
#include "dkn/quad_ext.hpp"
#include "dkn/random.hpp"
#include "dkn/rational.hpp"
#include "dkn/spectral_curve.hpp"

using namespace dkn;

TEST_CASE("rational: lowest terms and string form") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(4, 6).denominator() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational: parse") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/12") == Rational(-1, 4));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("-2.5e-1") == Rational(-1, 4));
  CHECK(Rational::parse("1e3") == Rational(1000));
  CHECK(Rational::parse(" 1/3 ") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational: division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational: field axioms on random triples") {
  CounterRng rng(11, 0);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(1000), b = rng.rational(1000), c = rng.rational(1000);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational: squares") {
  CHECK(is_rational_square(Rational(9, 4)));
  CHECK(is_rational_square(Rational(0)));
  CHECK_FALSE(is_rational_square(Rational(8)));
  CHECK_FALSE(is_rational_square(Rational(-4)));
  CHECK_FALSE(is_rational_square(Rational(4, 3)));
}

TEST_CASE("quad_ext: norm identity on random samples") {
  CounterRng rng(12, 0);
  for (int i = 0; i < 100; ++i) {
    const Rational a = rng.rational(500), b = rng.rational(500), d = rng.rational(500);
    const QuadRational x(a, b, d);
    const QuadRational prod = x * x.conjugate();
    CHECK(prod.b() == Rational(0));
    CHECK(prod.a() == a * a - d * b * b);
    CHECK(x.norm() == a * a - d * b * b);
  }
}

TEST_CASE("quad_ext: generator squares to D, inverse, zero test") {
  const QuadRational w = QuadRational::generator(Rational(8));
  CHECK(w * w == QuadRational(Rational(8)));
  const QuadRational x(Rational(1), Rational(2), Rational(8));
  CHECK(x * x.inverse() == QuadRational(1));
  CHECK(is_zero(x - x));
  CHECK_FALSE(is_zero(w));
  CHECK(to_string(x) == "1/1 + 2/1*w | w^2 = 8/1");
  CHECK(to_string(QuadRational(Rational(1, 2))) == "1/2 + 0/1*w | w^2 = *");
}

TEST_CASE("quad_ext: mixing discriminants is rejected") {
  const QuadRational a = QuadRational::generator(Rational(2));
  const QuadRational b = QuadRational::generator(Rational(3));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_NOTHROW(a + QuadRational(5));
}

TEST_CASE("quad_ext: square discriminant is kept formal") {
  const QuadRational w = QuadRational::generator(Rational(1));
  CHECK_FALSE(is_zero(w - QuadRational(1)));
  CHECK_THROWS_AS((w - QuadRational(1)).inverse(), std::domain_error);
}

TEST_CASE("quad_ext: magnitude embeds numerically") {
  const QuadRational x(Rational(1), Rational(1), Rational(2));
  CHECK(magnitude(x) == doctest::Approx(1.0 + std::sqrt(2.0)));
  const QuadRational y(Rational(3), Rational(2), Rational(-1));
  CHECK(magnitude(y) == doctest::Approx(std::hypot(3.0, 2.0)));
}

TEST_CASE("jet: spec examples") {
  using J = Jet<Rational>;
  const J c{Rational(3), Rational(7)};
  CHECK(J{Rational(1), Rational(0)} * c == c);

  const J x = J::variable(Rational(5), 1);
  const J sq = x * x;
  CHECK(sq[0] == Rational(25));
  CHECK(sq[1] == Rational(10));

  const J q = J{Rational(1), Rational(0)} / J{Rational(2), Rational(3)};
  CHECK(q.order() == 1);
  CHECK(q[0] == Rational(1, 2));
  CHECK(q[1] == Rational(-3, 4));
}

TEST_CASE("jet: division by a zero value") {
  using J = Jet<Rational>;
  const J num{Rational(1), Rational(1)};
  const J den{Rational(0), Rational(2)};
  CHECK_THROWS_AS(num / den, std::domain_error);
}

TEST_CASE("jet: mixed orders truncate to the smaller order") {
  using J = Jet<Rational>;
  const J a{Rational(1), Rational(2), Rational(3)};
  const J b{Rational(4), Rational(5)};
  CHECK((a * b).order() == 1);
  CHECK((a + Rational(1)).order() == 2);
  CHECK_THROWS_AS(a[3], std::out_of_range);
}

TEST_CASE("jet: chain rule matches analytic derivatives") {
  // r(t) = (t² + a)/(t - b):
  //   r'  = (t² - 2bt - a)/(t - b)²
  //   r'' = 2(a + b²)/(t - b)³
  using J = Jet<Rational>;
  CounterRng rng(13, 0);
  for (int i = 0; i < 100; ++i) {
    const Rational a = rng.rational(100), b = rng.rational(100);
    const Rational t0 = rng.rational(100), t1 = rng.rational(100), t2 = rng.rational(100);
    if (t0 == b) continue;
    const J t{t0, t1, t2};
    const J r = (t * t + J(a)) / (t - J(b));
    const Rational u = t0 - b;
    const Rational r1 = (t0 * t0 - Rational(2) * b * t0 - a) / (u * u);
    const Rational r2 = Rational(2) * (a + b * b) / (u * u * u);
    CHECK(r[0] == (t0 * t0 + a) / u);
    CHECK(r[1] == r1 * t1);
    CHECK(r[2] == r2 * t1 * t1 + r1 * t2);
  }
}

TEST_CASE("jet: derivative shifts down") {
  using J = Jet<Rational>;
  const J a{Rational(1), Rational(2), Rational(3), Rational(4)};
  const J d = a.derivative();
  CHECK(d.order() == 2);
  CHECK(d[0] == Rational(2));
  CHECK(d[2] == Rational(4));
}

TEST_CASE("curve: evaluation examples") {
  const auto cubic = SpectralCurve::elliptic(0, 0, 0);
  CHECK(cubic.eval(Rational(2)) == Rational(8));
  const auto zz = SpectralCurve::elliptic(0, -1, 0);
  CHECK(zz.eval(Rational(1)) == Rational(0));
  const SpectralCurve genus2({1, 1, 1, 1, 1});
  CHECK(genus2.genus() == 2);
  CHECK(genus2.eval(Rational(2)) == Rational(63));
  CHECK(cubic.eval(2.0) == 8.0);
}

TEST_CASE("curve: derivatives") {
  const auto cubic = SpectralCurve::elliptic(0, 0, 0);
  CHECK(cubic.eval_derivative(Rational(2), 1) == Rational(12));
  CHECK(cubic.eval_derivative(Rational(2), 2) == Rational(12));
  CHECK(SpectralCurve::elliptic(0, -1, 0).eval_derivative(Rational(0), 1) == Rational(-1));
  CHECK_THROWS_AS(cubic.eval_derivative(Rational(2), 3), std::invalid_argument);
  CHECK_THROWS_AS(cubic.eval_derivative(Rational(2), 0), std::invalid_argument);
}

TEST_CASE("curve: malformed coefficient lists") {
  CHECK_THROWS_AS(SpectralCurve({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralCurve({1}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralCurve({}), std::invalid_argument);
}

TEST_CASE("curve: Horner agrees with term-by-term summation") {
  CounterRng rng(14, 0);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(rng.rational(50));
    const SpectralCurve curve(c);
    const Rational z = rng.rational(50);
    Rational sum = pow(z, 5);
    for (unsigned k = 0; k < 5; ++k) sum += c[k] * pow(z, k);
    CHECK(curve.eval(z) == sum);
    CHECK(curve.polynomial()(z) == sum);
  }
}

TEST_CASE("curve: jets through F give F' and F''") {
  const auto curve = SpectralCurve::elliptic(Rational(1, 3), -2, Rational(5, 7));
  const Rational z(3, 4);
  const auto j = curve.eval(Jet<Rational>::variable(z, 2));
  CHECK(j[1] == curve.eval_derivative(z, 1));
  CHECK(j[2] == curve.eval_derivative(z, 2));
}

TEST_CASE("polynomial: shift, derivative, interpolation") {
  const Polynomial<Rational> p{1, 2, 3};  // 1 + 2t + 3t²
  const Polynomial<Rational> shifted{6, 8, 3};
  CHECK(p.shifted(1) == shifted);
  const Polynomial<Rational> dp{2, 6};
  CHECK(p.derivative() == dp);
  CHECK(p(Rational(2)) == Rational(17));
  const std::vector<Rational> nodes{0, 1, 2, 5};
  std::vector<Rational> values;
  for (const auto& n : nodes) values.push_back(p(n));
  CHECK(interpolate(nodes, values) == p);
  const Polynomial<Rational> lin{1, 1};
  CHECK((lin - lin).degree() == -1);
}
