#pragma once

#include <cstdint>

#include "adjorbit/rational.hpp"

namespace adjorbit {

/// SplitMix64 (Steele, Lea, Flood 2014). All sampling in the library draws
/// from one explicitly seeded instance so reports are reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] (modulo reduction; the bias is below 2^-50
  /// for the tiny ranges used here).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Sample rational: numerator in [-9, 9], denominator in {1, 2, 3}.
  Rational rational() {
    const auto num = uniform(-9, 9);
    const auto den = uniform(1, 3);
    Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (sgn(r) != 0) return r;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace adjorbit
