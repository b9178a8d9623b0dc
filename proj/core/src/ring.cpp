#include "dser/ring.hpp"

#include <charconv>
#include <string>

namespace dser {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

Rational RationalField::from_int(std::int64_t n) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return Rational(z);
}

Rational RationalField::invert(const Rational& a) const {
  if (sgn(a) == 0) raise(ErrorCode::NotAUnit, "zero has no inverse in Q");
  return 1 / a;
}

Rational RationalField::canonicalize(const mpz_class& num, const mpz_class& den) const {
  if (sgn(den) == 0) raise(ErrorCode::NotAUnit, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational RationalField::parse(std::string_view text) const {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    raise(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  return canonicalize(n, d);
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint32_t modulus) : modulus_(modulus), half_one_(0) {
  if (modulus < 3 || modulus % 2 == 0 || modulus >= (1u << 31) || !is_prime(modulus))
    raise(ErrorCode::ConfigError, "modulus " + std::to_string(modulus) + " is not an odd prime below 2^31");
  half_one_ = (modulus + 1) / 2;
}

ModInt PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  return {static_cast<std::uint32_t>(r), modulus_};
}

ModInt PrimeField::from_rational(const Rational& r) const {
  mpz_class num, den;
  mpz_fdiv_r_ui(num.get_mpz_t(), r.get_num_mpz_t(), modulus_);
  mpz_fdiv_r_ui(den.get_mpz_t(), r.get_den_mpz_t(), modulus_);
  ModInt n{static_cast<std::uint32_t>(num.get_ui()), modulus_};
  ModInt d{static_cast<std::uint32_t>(den.get_ui()), modulus_};
  return n * invert(d);
}

ModInt PrimeField::invert(ModInt a) const {
  if (a.modulus != modulus_) raise(ErrorCode::DescriptorMismatch, "residue from another field");
  if (a.value == 0) raise(ErrorCode::NotAUnit, "zero has no inverse mod " + std::to_string(modulus_));
  // Extended Euclid on (a, p); the Bezout coefficient of a is the inverse.
  std::int64_t r0 = modulus_, r1 = a.value, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

std::string PrimeField::to_string(ModInt a) const {
  return std::to_string(a.value) + " mod " + std::to_string(modulus_);
}

ModInt PrimeField::parse(std::string_view text) const {
  text = trim(text);
  auto pos = text.find("mod");
  std::string_view value = trim(text.substr(0, pos));
  if (pos != std::string_view::npos) {
    std::string_view mod = trim(text.substr(pos + 3));
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(mod.data(), mod.data() + mod.size(), p);
    if (ec != std::errc() || ptr != mod.data() + mod.size())
      raise(ErrorCode::ParseError, "bad modulus in '" + std::string(text) + "'");
    if (p != modulus_) raise(ErrorCode::DescriptorMismatch, "residue modulo " + std::string(mod));
  }
  if (!is_integer_literal(value)) raise(ErrorCode::ParseError, "not a residue: '" + std::string(text) + "'");
  mpz_class z(std::string(value.front() == '+' ? value.substr(1) : value), 10);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), modulus_);
  return {static_cast<std::uint32_t>(r.get_ui()), modulus_};
}

}  // namespace dser
