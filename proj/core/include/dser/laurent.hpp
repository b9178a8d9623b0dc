#pragma once

// Polynomials over Q localized at a set of variables.
//
// A value is stored as a Laurent polynomial: a sorted list of terms whose
// exponents may be negative only on inverted variables. This is the same
// thing as numerator / monomial with the monomial made minimal, but the
// Laurent form makes the canonical payload a plain sorted term list.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dser/ring.hpp"

namespace dser {

inline constexpr std::size_t kMaxPolyVariables = 64;

struct Monomial {
  std::array<std::int16_t, kMaxPolyVariables> exp{};
  std::int32_t degree = 0;

  Monomial& operator*=(const Monomial& o) {
    for (std::size_t v = 0; v < kMaxPolyVariables; ++v) exp[v] = static_cast<std::int16_t>(exp[v] + o.exp[v]);
    degree += o.degree;
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.degree == b.degree && a.exp == b.exp; }

  /// Graded lexicographic: total degree first, then exponents in declared
  /// variable order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    for (std::size_t v = 0; v < kMaxPolyVariables; ++v)
      if (a.exp[v] != b.exp[v]) return a.exp[v] <=> b.exp[v];
    return std::strong_ordering::equal;
  }
};

struct PolyTerm {
  Monomial mono;
  Rational coef;

  friend bool operator==(const PolyTerm& a, const PolyTerm& b) { return a.mono == b.mono && a.coef == b.coef; }
};

/// Canonical element of the localized ring: terms strictly decreasing in
/// graded-lex order, no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Monomial& m, const Rational& c);

  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly scaled(const Rational& c) const;

  /// Sorts and merges an arbitrary term list into canonical form.
  static LaurentPoly from_terms(std::vector<PolyTerm> terms);

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract);

  std::vector<PolyTerm> terms_;
};

/// Variable names and which of them are inverted.
struct PolyVariables {
  std::vector<std::string> names;
  std::vector<bool> inverted;

  bool operator==(const PolyVariables&) const = default;
};

/// Q[x_1..x_k][S^-1] where S is generated by the inverted variables (and 2,
/// which is already a unit of Q).
class LocalizedPolyRing {
 public:
  using value_type = LaurentPoly;
  static constexpr bool is_field = false;

  /// Throws ConfigError on duplicate names, too many variables, or inverted
  /// names that are not variables.
  LocalizedPolyRing(std::vector<std::string> names, const std::vector<std::string>& inverted);

  const PolyVariables& variables() const { return *vars_; }
  std::size_t variable_count() const { return vars_->names.size(); }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  LaurentPoly zero() const { return {}; }
  LaurentPoly one() const { return LaurentPoly::constant(1); }
  LaurentPoly from_int(std::int64_t n) const;
  LaurentPoly from_rational(const Rational& r) const { return LaurentPoly::constant(r); }
  LaurentPoly variable(std::string_view name) const;
  LaurentPoly variable(std::size_t index) const;
  LaurentPoly half(const LaurentPoly& a) const { return a.scaled(Rational(1, 2)); }
  /// Units are nonzero rational multiples of monomials in inverted
  /// variables. Zero gives NotAUnit; anything else NonMonomialDenominator.
  LaurentPoly invert(const LaurentPoly& a) const;
  bool is_zero(const LaurentPoly& a) const { return a.is_zero(); }
  std::string to_string(const LaurentPoly& a) const;
  LaurentPoly parse(std::string_view text) const;
  std::string name() const;

  /// numerator / denominator, where the denominator is a monomial in
  /// inverted variables. Throws NonMonomialDenominator otherwise.
  LaurentPoly canonicalize(const LaurentPoly& numerator, const Monomial& denominator) const;

  /// Inverse view of canonicalize: the minimal monomial denominator and the
  /// polynomial numerator.
  std::pair<LaurentPoly, Monomial> split(const LaurentPoly& a) const;

  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const LocalizedPolyRing& a, const LocalizedPolyRing& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const PolyVariables> vars_;
};

}  // namespace dser
