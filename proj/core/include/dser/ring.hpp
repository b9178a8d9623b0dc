#pragma once

// Exact commutative rings in which 2 is a unit.
//
// A ring is a small context object (the "descriptor") that knows how to make
// constants and how to halve, invert, print and parse its elements. Elements
// are plain values with +, -, * and == so that generic code (matrices,
// quadratic forms, generators) reads like ordinary algebra.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "dser/errors.hpp"

namespace dser {

template <class R>
concept Ring = std::copyable<R> && std::equality_comparable<R> &&
    requires(const R& ring, const typename R::value_type& a, std::int64_t n, std::string_view text) {
      typename R::value_type;
      { R::is_field } -> std::convertible_to<bool>;
      { ring.zero() } -> std::same_as<typename R::value_type>;
      { ring.one() } -> std::same_as<typename R::value_type>;
      { ring.from_int(n) } -> std::same_as<typename R::value_type>;
      { ring.half(a) } -> std::same_as<typename R::value_type>;
      { ring.invert(a) } -> std::same_as<typename R::value_type>;
      { ring.is_zero(a) } -> std::same_as<bool>;
      { ring.to_string(a) } -> std::same_as<std::string>;
      { ring.parse(text) } -> std::same_as<typename R::value_type>;
      { ring.name() } -> std::same_as<std::string>;
      { a + a } -> std::convertible_to<typename R::value_type>;
      { a - a } -> std::convertible_to<typename R::value_type>;
      { a * a } -> std::convertible_to<typename R::value_type>;
      { -a } -> std::convertible_to<typename R::value_type>;
      { a == a } -> std::same_as<bool>;
    };

// ---------------------------------------------------------------------------
// Rationals

using Rational = mpq_class;

/// Q with GMP rationals. Results of gmpxx arithmetic are already in lowest
/// terms with a positive denominator, which is the canonical payload.
class RationalField {
 public:
  using value_type = Rational;
  static constexpr bool is_field = true;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const;
  Rational from_rational(const Rational& r) const { return r; }
  Rational half(const Rational& a) const { return a / 2; }
  Rational invert(const Rational& a) const;
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  std::string to_string(const Rational& a) const { return a.get_str(); }
  Rational parse(std::string_view text) const;
  std::string name() const { return "rational"; }

  /// Reduces an arbitrary numerator/denominator pair.
  Rational canonicalize(const mpz_class& num, const mpz_class& den) const;

  bool operator==(const RationalField&) const = default;
};

// ---------------------------------------------------------------------------
// Residues modulo an odd prime

/// Residue class in [0, modulus). The modulus travels with the value so that
/// mixing residues from different rings is caught at the operation.
struct ModInt {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;

  friend ModInt operator+(ModInt a, ModInt b) {
    check_same(a, b);
    std::uint32_t s = a.value + b.value;
    if (s >= a.modulus) s -= a.modulus;
    return {s, a.modulus};
  }
  friend ModInt operator-(ModInt a, ModInt b) {
    check_same(a, b);
    return {a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value, a.modulus};
  }
  friend ModInt operator*(ModInt a, ModInt b) {
    check_same(a, b);
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % a.modulus),
            a.modulus};
  }
  friend ModInt operator-(ModInt a) { return {a.value == 0 ? 0 : a.modulus - a.value, a.modulus}; }
  friend bool operator==(ModInt a, ModInt b) { return a.value == b.value && a.modulus == b.modulus; }

 private:
  static void check_same(ModInt a, ModInt b) {
    if (a.modulus != b.modulus) [[unlikely]]
      raise(ErrorCode::DescriptorMismatch, "residues modulo different primes");
  }
};

/// Z/pZ for an odd prime p < 2^31.
class PrimeField {
 public:
  using value_type = ModInt;
  static constexpr bool is_field = true;

  /// Throws ConfigError unless modulus is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }

  ModInt zero() const { return {0, modulus_}; }
  ModInt one() const { return {1, modulus_}; }
  ModInt from_int(std::int64_t n) const;
  /// Image of num/den; NotAUnit if p divides den.
  ModInt from_rational(const Rational& r) const;
  ModInt half(ModInt a) const { return a * ModInt{half_one_, modulus_}; }
  ModInt invert(ModInt a) const;
  bool is_zero(ModInt a) const { return a.value == 0; }
  std::string to_string(ModInt a) const;
  ModInt parse(std::string_view text) const;
  std::string name() const { return "zmod:" + std::to_string(modulus_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t modulus_;
  std::uint32_t half_one_;
};

bool is_prime(std::uint64_t n);

}  // namespace dser
