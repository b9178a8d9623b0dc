#pragma once

// Seeded sampling. The engine is std::mt19937_64, whose output sequence is
// fixed by the standard, and bounded draws use rejection sampling rather
// than std::uniform_int_distribution (whose algorithm is implementation
// defined), so streams agree across platforms.

#include <cstdint>
#include <initializer_list>
#include <random>

#include "dser/ring.hpp"

namespace dser {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Folds the words into one seed, order-sensitively.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

ModInt sample_element(const PrimeField& f, Rng& rng);
ModInt sample_unit(const PrimeField& f, Rng& rng);
/// Small rationals n/d with |n| <= 9 and 1 <= d <= 5.
Rational sample_element(const RationalField& f, Rng& rng);
Rational sample_unit(const RationalField& f, Rng& rng);

}  // namespace dser
