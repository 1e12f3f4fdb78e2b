#include <doctest.h>

#include <map>

#include "dkn/difference_operator.hpp"
#include "dkn/dkn_flows.hpp"
#include "dkn/random.hpp"

using namespace dkn;
using Op = DifferenceOperator<Rational>;
using Seq = SiteSequence<Rational>;

namespace {

bool same_on(const Op& a, const Op& b, long lo = -6, long hi = 6) { return a.window(lo, hi) == b.window(lo, hi); }

Op random_operator(CounterRng& rng, int lo, int hi) {
  // Coefficients a_j(n) = α_j + β_j n + δ_j n², drawn once.
  std::map<int, Op::SiteFunction> bands;
  for (int j = lo; j <= hi; ++j) {
    const Rational a = rng.rational(30), b = rng.rational(30), d = rng.rational(30);
    bands[j] = [a, b, d](long n) { return a + b * Rational(n) + d * Rational(n) * Rational(n); };
  }
  return Op::from_bands(std::move(bands));
}

const Op n_times = Op::multiplication([](long n) { return Rational(n); });

}  // namespace

TEST_CASE("compose: examples") {
  CounterRng rng(21, 0);
  const Op b = random_operator(rng, -2, 1);
  CHECK(same_on(compose(Op::identity(), b), b));

  const Op l = Op::shift(1) + Op::shift(-1);
  const Op expected = Op::shift(2) + Rational(2) * Op::identity() + Op::shift(-2);
  CHECK(same_on(compose(l, l), expected));

  const Op u = Op::multiplication([](long n) { return Rational(n * n + 1); });
  const Op shifted_u = compose(Op::multiplication([](long n) { return Rational((n + 1) * (n + 1) + 1); }),
                               Op::shift(1));
  CHECK(same_on(compose(Op::shift(1), u), shifted_u));
}

TEST_CASE("commutator: examples") {
  CHECK(max_band_norm(commutator(Op::shift(1), Op::shift(-1)), -5, 5).exactly_zero);
  CounterRng rng(22, 0);
  const Op a = random_operator(rng, -1, 2);
  CHECK(max_band_norm(commutator(a, a), -5, 5).exactly_zero);

  const Op c = commutator(Op::shift(1), n_times);
  CHECK(same_on(c, Op::shift(1)));
  const BandNorm norm = max_band_norm(c, 0, 5);
  CHECK_FALSE(norm.exactly_zero);
  CHECK(norm.max_magnitude == 1.0);
}

TEST_CASE("lax_residual: trivial cases") {
  CounterRng rng(23, 0);
  const Op l = random_operator(rng, -2, 2);
  const Op zero;
  CHECK(max_band_norm(lax_residual(l, zero, zero), -4, 4).exactly_zero);
  // A = 0 leaves L_t itself.
  const Op lt = random_operator(rng, -2, 2);
  CHECK(same_on(lax_residual(l, lt, zero), lt));
}

TEST_CASE("build_l4: examples") {
  const Op one = build_l4<Rational>([](long) { return Rational(1); }, [](long) { return Rational(0); });
  CHECK(same_on(one, Op::shift(2) + Rational(2) * Op::identity() + Op::shift(-2)));

  const Op w0 = build_l4<Rational>([](long) { return Rational(0); }, [](long) { return Rational(7, 3); });
  CHECK(same_on(w0, Op::shift(2) + Rational(7, 3) * Op::identity()));
}

TEST_CASE("build_l4: band-by-band hand expansion") {
  // (T + V T⁻¹)² + W = T² + (V_{n+1} + V_n) + V_n V_{n-1} T⁻² + W.
  CounterRng rng(24, 0);
  std::vector<Rational> v(4), w(4);
  for (auto& x : v) x = rng.rational(50);
  for (auto& x : w) x = rng.rational(50);
  const auto at = [](const std::vector<Rational>& s, long n) { return s[static_cast<std::size_t>(wrap_index(n, 4))]; };
  const Op l = build_l4<Rational>([&](long n) { return at(v, n); }, [&](long n) { return at(w, n); });
  CHECK(l.band_lo() == -2);
  CHECK(l.band_hi() == 2);
  for (long n = -3; n <= 7; ++n) {
    CHECK(l.coefficient(2, n) == Rational(1));
    CHECK(l.coefficient(1, n) == Rational(0));
    CHECK(l.coefficient(0, n) == at(v, n + 1) + at(v, n) + at(w, n));
    CHECK(l.coefficient(-1, n) == Rational(0));
    CHECK(l.coefficient(-2, n) == at(v, n) * at(v, n - 1));
  }
}

TEST_CASE("apply: examples") {
  const Seq psi{-2, {Rational(3), Rational(3), Rational(3), Rational(3), Rational(3)}};
  CHECK(apply(Op::identity(), psi, 0) == Rational(3));
  CHECK(apply(Op::shift(1) + Op::shift(-1), psi, 0) == Rational(6));

  Seq ramp{0, {}};
  for (int n = 0; n <= 8; ++n) ramp.values.push_back(Rational(n));
  CHECK(apply(Op::shift(2), ramp, 3) == Rational(5));
  CHECK_THROWS_AS(apply(Op::shift(2), ramp, 7), std::out_of_range);
}

TEST_CASE("max_band_norm: examples") {
  const BandNorm z = max_band_norm(Op(), -3, 3);
  CHECK(z.exactly_zero);
  CHECK(z.max_magnitude == 0.0);
  CHECK(max_band_norm(Op::shift(1) + Rational(3) * Op::identity(), -3, 3).max_magnitude == 3.0);
  CHECK(max_band_norm(commutator(Op::shift(1), n_times), 0, 5).max_magnitude == 1.0);
}

TEST_CASE("operator algebra: associativity, Jacobi, apply of a product") {
  CounterRng rng(25, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Op a = random_operator(rng, -1, 1);
    const Op b = random_operator(rng, -2, 0);
    const Op c = random_operator(rng, 0, 2);
    CHECK(same_on(compose(compose(a, b), c), compose(a, compose(b, c))));

    const Op jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                      commutator(c, commutator(a, b));
    CHECK(max_band_norm(jacobi, -5, 5).exactly_zero);

    Seq psi{-10, {}};
    for (int i = 0; i < 21; ++i) psi.values.push_back(rng.rational(40));
    // (AB)ψ at n equals A(Bψ) at n.
    Seq b_psi{-6, {}};
    for (long n = -6; n <= 6; ++n) b_psi.values.push_back(apply(b, psi, n));
    for (long n = -4; n <= 4; ++n) CHECK(apply(compose(a, b), psi, n) == apply(a, b_psi, n));
  }
}

TEST_CASE("providers: outside-band coefficients are zero, materialization preserves values") {
  CounterRng rng(26, 0);
  const Op a = random_operator(rng, -1, 2);
  CHECK(a.coefficient(3, 0) == Rational(0));
  CHECK(a.coefficient(-2, 5) == Rational(0));
  const Op m = a.materialized(-5, 5);
  CHECK(same_on(a, m, -5, 5));
  CHECK_THROWS_AS(m.coefficient(0, 6), std::out_of_range);
}

TEST_CASE("numeric operators agree with the exact path") {
  CounterRng rng(27, 0);
  const Op a = random_operator(rng, -2, 1);
  const Op b = random_operator(rng, -1, 2);
  const auto to_d = [](const Rational& x) { return x.to_double(); };
  const auto exact = commutator(a, b);
  const auto numeric = commutator(a.map(to_d), b.map(to_d));
  for (long n = -3; n <= 3; ++n) {
    for (int j = -3; j <= 3; ++j) {
      CHECK(numeric.coefficient(j, n) == doctest::Approx(exact.coefficient(j, n).to_double()).epsilon(1e-12));
    }
  }
}
