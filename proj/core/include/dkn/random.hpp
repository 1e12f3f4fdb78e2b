#pragma once

/// \file random.hpp
/// Counter-based randomness and random exact sample configurations.
///
/// Draw k of stream s under seed S is splitmix64(S ^ splitmix64(s) + k·φ)
/// with φ = 0x9e3779b97f4a7c15 and splitmix64 the standard finalizer. Bounded
/// integers are taken modulo the range size. Nothing depends on the C++
/// standard library's distributions, so replays are portable.

#include <cstdint>
#include <vector>

#include "dkn/rational.hpp"
#include "dkn/spectral_curve.hpp"

namespace dkn {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform in [lo, hi] (modulo reduction).
  long uniform(long lo, long hi);
  /// num/den with num in [-bound, bound], den in [1, bound].
  Rational rational(long bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct RandomRanges {
  long coordinate_bound = 1000;  ///< γ_n and p
  long curve_bound = 20;         ///< c_0, c_1, c_2
};

/// A 4-periodic γ on an elliptic curve with a point p.
struct ExactConfiguration {
  SpectralCurve curve = SpectralCurve::elliptic(Rational(0), Rational(0), Rational(0));
  std::vector<Rational> gamma;
  Rational p;
};

/// Configuration `index` under `seed` (stream = index). Guarantees:
/// the four γ are distinct with F(γ_n) ≠ 0, p ∉ {γ_n}, and F(p) is a
/// nonzero non-square, so every Darboux denominator is nonzero.
ExactConfiguration random_configuration(std::uint64_t seed, std::uint64_t index, const RandomRanges& ranges = {});

/// Throws std::invalid_argument when `c` violates the guarantees above.
void validate_configuration(const ExactConfiguration& c);

}  // namespace dkn
