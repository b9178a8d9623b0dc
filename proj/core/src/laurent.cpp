#include "dser/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace dser {

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(Monomial{}, c); }

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  LaurentPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono > ib->mono)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->mono > ia->mono) {
      out.terms_.push_back({ib->mono, subtract ? Rational(-ib->coef) : ib->coef});
      ++ib;
    } else {
      Rational c = subtract ? Rational(ia->coef - ib->coef) : Rational(ia->coef + ib->coef);
      if (sgn(c) != 0) out.terms_.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::merge(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::merge(a, b, true); }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& x, const PolyTerm& y) { return x.mono > y.mono; });
  LaurentPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef += t.coef;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().coef) == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().coef) == 0) out.terms_.pop_back();
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return LaurentPoly::monomial(a.terms_[0].mono * b.terms_[0].mono, a.terms_[0].coef * b.terms_[0].coef);
  }
  std::vector<PolyTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) raw.push_back({x.mono * y.mono, x.coef * y.coef});
  return LaurentPoly::from_terms(std::move(raw));
}

// ---------------------------------------------------------------------------

LocalizedPolyRing::LocalizedPolyRing(std::vector<std::string> names, const std::vector<std::string>& inverted) {
  if (names.size() > kMaxPolyVariables)
    raise(ErrorCode::ConfigError, "at most " + std::to_string(kMaxPolyVariables) + " polynomial variables");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      raise(ErrorCode::ConfigError, "bad variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        raise(ErrorCode::ConfigError, "bad variable name '" + n + "'");
    if (!seen.insert(n).second) raise(ErrorCode::ConfigError, "duplicate variable '" + n + "'");
  }
  auto vars = std::make_shared<PolyVariables>();
  vars->names = std::move(names);
  vars->inverted.assign(vars->names.size(), false);
  for (const auto& inv : inverted) {
    auto it = std::find(vars->names.begin(), vars->names.end(), inv);
    if (it == vars->names.end()) raise(ErrorCode::ConfigError, "inverted variable '" + inv + "' is not a variable");
    vars->inverted[static_cast<std::size_t>(it - vars->names.begin())] = true;
  }
  vars_ = std::move(vars);
}

int LocalizedPolyRing::index_of(std::string_view name) const {
  for (std::size_t v = 0; v < vars_->names.size(); ++v)
    if (vars_->names[v] == name) return static_cast<int>(v);
  return -1;
}

LaurentPoly LocalizedPolyRing::from_int(std::int64_t n) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return LaurentPoly::constant(Rational(z));
}

LaurentPoly LocalizedPolyRing::variable(std::string_view name) const {
  int v = index_of(name);
  if (v < 0) raise(ErrorCode::ParseError, "unknown variable '" + std::string(name) + "'");
  return variable(static_cast<std::size_t>(v));
}

LaurentPoly LocalizedPolyRing::variable(std::size_t index) const {
  if (index >= vars_->names.size()) raise(ErrorCode::IndexOutOfRange, "variable index");
  Monomial m;
  m.exp[index] = 1;
  m.degree = 1;
  return LaurentPoly::monomial(m, 1);
}

LaurentPoly LocalizedPolyRing::invert(const LaurentPoly& a) const {
  if (a.is_zero()) raise(ErrorCode::NotAUnit, "zero has no inverse");
  if (a.size() != 1) raise(ErrorCode::NonMonomialDenominator, "cannot invert " + to_string(a));
  const PolyTerm& t = a.terms()[0];
  Monomial inv;
  for (std::size_t v = 0; v < vars_->names.size(); ++v) {
    if (t.mono.exp[v] != 0 && !vars_->inverted[v])
      raise(ErrorCode::NonMonomialDenominator, "variable " + vars_->names[v] + " is not inverted");
    inv.exp[v] = static_cast<std::int16_t>(-t.mono.exp[v]);
  }
  inv.degree = -t.mono.degree;
  return LaurentPoly::monomial(inv, 1 / t.coef);
}

LaurentPoly LocalizedPolyRing::canonicalize(const LaurentPoly& numerator, const Monomial& denominator) const {
  Monomial inv;
  for (std::size_t v = 0; v < kMaxPolyVariables; ++v) {
    if (denominator.exp[v] < 0) raise(ErrorCode::NonMonomialDenominator, "negative denominator exponent");
    if (denominator.exp[v] != 0 && (v >= vars_->names.size() || !vars_->inverted[v]))
      raise(ErrorCode::NonMonomialDenominator, "denominator uses a variable that is not inverted");
    inv.exp[v] = static_cast<std::int16_t>(-denominator.exp[v]);
  }
  inv.degree = -denominator.degree;
  return numerator * LaurentPoly::monomial(inv, 1);
}

std::pair<LaurentPoly, Monomial> LocalizedPolyRing::split(const LaurentPoly& a) const {
  Monomial den;
  for (const auto& t : a.terms())
    for (std::size_t v = 0; v < kMaxPolyVariables; ++v)
      if (-t.mono.exp[v] > den.exp[v]) den.exp[v] = static_cast<std::int16_t>(-t.mono.exp[v]);
  den.degree = 0;
  for (auto e : den.exp) den.degree += e;
  return {a * LaurentPoly::monomial(den, 1), den};
}

std::string LocalizedPolyRing::monomial_string(const Monomial& m) const {
  std::string out;
  for (std::size_t v = 0; v < vars_->names.size(); ++v) {
    if (m.exp[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_->names[v];
    if (m.exp[v] != 1) out += '^' + std::to_string(m.exp[v]);
  }
  return out;
}

std::string LocalizedPolyRing::to_string(const LaurentPoly& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    Rational mag = abs(t.coef);
    if (first) {
      if (sgn(t.coef) < 0) out += '-';
    } else {
      out += sgn(t.coef) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(t.mono);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

LaurentPoly LocalizedPolyRing::parse(std::string_view text) const {
  // term := factor ('*' factor)*; factor := integer ['/' integer] | name ['^' int]
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    raise(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) fail("expected integer");
    return std::string(text.substr(start, pos - start));
  };

  std::vector<PolyTerm> terms;
  skip();
  if (pos == text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    PolyTerm term{Monomial{}, Rational(sign)};
    while (true) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        mpz_class num(read_int(), 10), den(1);
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = mpz_class(read_int(), 10);
          if (sgn(den) <= 0) fail("denominator must be positive");
        }
        Rational c(num, den);
        c.canonicalize();
        term.coef *= c;
      } else if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        int v = index_of(text.substr(start, pos - start));
        if (v < 0) fail("unknown variable '" + std::string(text.substr(start, pos - start)) + "'");
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = std::stoi(read_int());
        }
        if (e < 0 && !vars_->inverted[static_cast<std::size_t>(v)])
          raise(ErrorCode::NonMonomialDenominator, "negative power of non-inverted " + vars_->names[static_cast<std::size_t>(v)]);
        term.mono.exp[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(term.mono.exp[static_cast<std::size_t>(v)] + e);
        term.mono.degree += e;
      } else {
        fail("expected coefficient or variable");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string LocalizedPolyRing::name() const {
  std::string out = "poly:", inv;
  for (std::size_t v = 0; v < vars_->names.size(); ++v) {
    if (v) out += ',';
    out += vars_->names[v];
    if (vars_->inverted[v]) inv += (inv.empty() ? "" : ",") + vars_->names[v];
  }
  return inv.empty() ? out : out + "/" + inv;
}

}  // namespace dser
