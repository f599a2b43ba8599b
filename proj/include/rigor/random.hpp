#pragma once

// Seeded randomness. Every randomized routine takes an Rng or a seed so that
// results are reproducible bit for bit.

#include "rigor/scalar.hpp"

#include <cstdint>
#include <random>

namespace rigor {

// SplitMix64 finalizer; used to derive independent per-trial streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi] by rejection, independent of the standard library's
  // distribution implementation.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Integer in [lo, hi] as a rational.
  Rational integer(std::int64_t lo, std::int64_t hi) { return Rational(uniform(lo, hi)); }

  // Random vector with integer entries in [lo, hi].
  RationalVector integer_vector(Eigen::Index d, std::int64_t lo, std::int64_t hi) {
    RationalVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = integer(lo, hi);
    return v;
  }

  // m / 2^bits with |m| <= 2^bits * magnitude.
  Rational dyadic(unsigned bits, std::int64_t magnitude = 1) {
    const std::int64_t scale = std::int64_t{1} << bits;
    return Rational(uniform(-scale * magnitude, scale * magnitude)) / Rational(Integer(scale));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rigor
