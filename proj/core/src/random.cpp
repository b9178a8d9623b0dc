#include "dser/random.hpp"

namespace dser {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = mix64(seed);
  for (auto w : words) h = mix64(h ^ w);
  return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

ModInt sample_element(const PrimeField& f, Rng& rng) {
  return {static_cast<std::uint32_t>(rng.below(f.modulus())), f.modulus()};
}

ModInt sample_unit(const PrimeField& f, Rng& rng) {
  return {static_cast<std::uint32_t>(1 + rng.below(f.modulus() - 1)), f.modulus()};
}

Rational sample_element(const RationalField&, Rng& rng) {
  Rational r(static_cast<long>(rng.between(-9, 9)), static_cast<unsigned long>(rng.between(1, 5)));
  r.canonicalize();
  return r;
}

Rational sample_unit(const RationalField& f, Rng& rng) {
  Rational r;
  do {
    r = sample_element(f, rng);
  } while (sgn(r) == 0);
  return r;
}

}  // namespace dser
