#include "dkn/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace dkn {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept : key_(seed ^ splitmix64(stream)) {}

std::uint64_t CounterRng::next() noexcept { return splitmix64(key_ + kGolden * counter_++); }

long CounterRng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("CounterRng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational CounterRng::rational(long bound) {
  if (bound < 1) throw std::invalid_argument("CounterRng::rational: bound must be >= 1");
  const long num = uniform(-bound, bound);
  const long den = uniform(1, bound);
  return Rational(num, den);
}

void validate_configuration(const ExactConfiguration& c) {
  if (c.curve.genus() != 1) throw std::invalid_argument("configuration: curve must have genus one");
  if (c.gamma.size() != 4) throw std::invalid_argument("configuration: gamma must have period 4");
  for (std::size_t i = 0; i < 4; ++i) {
    if (c.curve.eval(c.gamma[i]).is_zero()) throw std::invalid_argument("configuration: F(gamma) = 0");
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (c.gamma[i] == c.gamma[j]) throw std::invalid_argument("configuration: gamma values must be distinct");
    }
    if (c.gamma[i] == c.p) throw std::invalid_argument("configuration: p coincides with a gamma value");
  }
  const Rational fp = c.curve.eval(c.p);
  if (fp.is_zero() || is_rational_square(fp)) {
    throw std::invalid_argument("configuration: F(p) must be a nonzero non-square");
  }
}

ExactConfiguration random_configuration(std::uint64_t seed, std::uint64_t index, const RandomRanges& ranges) {
  CounterRng rng(seed, index);
  ExactConfiguration c;
  const Rational c2 = rng.rational(ranges.curve_bound);
  const Rational c1 = rng.rational(ranges.curve_bound);
  const Rational c0 = rng.rational(ranges.curve_bound);
  c.curve = SpectralCurve::elliptic(c2, c1, c0);

  while (c.gamma.size() < 4) {
    const Rational g = rng.rational(ranges.coordinate_bound);
    if (c.curve.eval(g).is_zero()) continue;
    if (std::find(c.gamma.begin(), c.gamma.end(), g) != c.gamma.end()) continue;
    c.gamma.push_back(g);
  }
  for (;;) {
    c.p = rng.rational(ranges.coordinate_bound);
    const Rational fp = c.curve.eval(c.p);
    if (std::find(c.gamma.begin(), c.gamma.end(), c.p) != c.gamma.end()) continue;
    if (fp.is_zero() || is_rational_square(fp)) continue;
    break;
  }
  return c;
}

}  // namespace dkn
