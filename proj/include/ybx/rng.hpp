#pragma once

#include <cstdint>

#include "ybx/field.hpp"

namespace ybx {

/// SplitMix64 (Steele/Lea/Flood): the single documented generator behind all
/// sampled checks. State advances by the golden-gamma constant; output is the
/// standard 64-bit finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  uint64_t below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Derives an independent stream for a named sub-check.
  SplitMix64 fork(uint64_t salt) {
    SplitMix64 g(state_ ^ (0xD1B54A32D192ED03ULL * (salt + 1)));
    g.next();
    return g;
  }

 private:
  uint64_t state_;
};

/// Sampling policy for parametric identities: numerators in [-99, 99],
/// denominators in [1, 99], exact arithmetic at each sampled point.
class RatSampler {
 public:
  explicit RatSampler(SplitMix64 gen) : g_(gen) {}

  Rat rational() {
    long num = static_cast<long>(g_.below(199)) - 99;  // [-99, 99]
    long den = static_cast<long>(g_.below(99)) + 1;    // [1, 99]
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  Rat nonzero() {
    Rat r = rational();
    while (is_zero(r)) r = rational();
    return r;
  }

  /// Nonzero and different from every value in `avoid`.
  template <class It>
  Rat nonzero_avoiding(It begin, It end) {
    for (;;) {
      Rat r = nonzero();
      bool clash = false;
      for (It it = begin; it != end; ++it)
        if (*it == r) {
          clash = true;
          break;
        }
      if (!clash) return r;
    }
  }

  SplitMix64& gen() { return g_; }

 private:
  SplitMix64 g_;
};

}  // namespace ybx
