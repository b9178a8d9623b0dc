#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "dser/lemma.hpp"

namespace dser {

std::string_view to_string(LemmaId id) {
  static constexpr std::array<std::string_view, 21> names = {"L01", "C01", "L02", "C02", "R01", "L03", "C03",
                                                             "L04", "C04", "L05", "C05", "L06", "C06", "L07",
                                                             "C07", "L08", "L09", "L10", "L11", "L12", "L13"};
  return names[static_cast<std::size_t>(id)];
}

LemmaId parse_lemma(std::string_view text) {
  std::string up(text);
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto id : kAllLemmas)
    if (to_string(id) == up) return id;
  raise(ErrorCode::ParseError, "unknown lemma '" + std::string(text) + "'");
}

int Indices::get(char letter) const {
  switch (letter) {
    case 'i': return i;
    case 'j': return j;
    case 'k': return k;
    case 'l': return l;
    case 'p': return p;
    case 'q': return q;
    case 'r': return r;
    case 's': return s;
  }
  raise(ErrorCode::ParseError, std::string("unknown index letter '") + letter + "'");
}

std::string Indices::to_string() const {
  std::string out;
  auto add = [&](char name, int v) {
    if (v == 0) return;
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(v);
  };
  add('i', i);
  add('j', j);
  add('k', k);
  add('l', l);
  add('p', p);
  add('q', q);
  add('r', r);
  add('s', s);
  return out;
}

bool ClosedForm::is_identity() const {
  auto* a = std::get_if<AdditiveForm>(&body);
  return a && a->terms.empty();
}

const ClosedForm* LemmaSpec::proof(const Indices& idx, std::size_t branch) const {
  if (proof_for) return proof_for(idx);
  const auto& b = branches.at(branch);
  return b.proof ? &*b.proof : nullptr;
}

Fault parse_fault(std::string_view text) {
  if (text.empty() || text == "none") return Fault::None;
  if (text == "l01-sign") return Fault::L01Sign;
  raise(ErrorCode::ConfigError, "unknown fault '" + std::string(text) + "' (expected l01-sign)");
}

// ---------------------------------------------------------------------------
// Notation parser

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, const std::vector<SlotSpec>& slots) : text_(text), slots_(slots) {}

  ClosedForm parse_form() {
    ClosedForm out;
    out.text = std::string(text_);
    skip();
    if (peek() == 'I') {
      ++pos_;
      AdditiveForm add;
      while (true) {
        skip();
        if (done()) break;
        char sign = peek();
        if (sign != '+' && sign != '-') fail("expected '+' or '-'");
        ++pos_;
        Word w = word();
        if (sign == '-') w.coef.value = -w.coef.value;
        add.terms.push_back(std::move(w));
      }
      out.body = std::move(add);
    } else {
      out.body = group();
      skip();
      if (!done()) fail("trailing input");
    }
    return out;
  }

  Word parse_word_only() {
    Word w = word();
    skip();
    if (!done()) fail("trailing input");
    return w;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    raise(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Word word() {
    Word w;
    skip();
    if (peek() == '-') {
      w.coef.value = -1;
      ++pos_;
      skip();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      int num = integer();
      int den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational c(num, den);
      c.canonicalize();
      w.coef.value *= c;
    }
    while (true) {
      skip();
      char c = peek();
      if (c == '$') {
        ++pos_;
        char s = peek();
        if (s < 'a' || s > 'f') fail("scalar must be $a..$f");
        ++pos_;
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = integer();
        }
        w.coef.scalar_pow[static_cast<std::size_t>(s - 'a')] += e;
      } else if (std::islower(static_cast<unsigned char>(c))) {
        ++pos_;
        auto it = std::find_if(slots_.begin(), slots_.end(), [&](const SlotSpec& sl) { return sl.symbol == c; });
        if (it == slots_.end()) fail(std::string("unknown slot '") + c + "'");
        Factor f{static_cast<int>(it - slots_.begin()), false, it->row, it->col};
        if (peek() == '@') {
          ++pos_;
          f.row = peek();
          ++pos_;
          f.col = peek();
          ++pos_;
          Indices probe;
          probe.get(f.row);
          probe.get(f.col);
        }
        if (peek() == '*') {
          f.star = true;
          ++pos_;
        }
        w.factors.push_back(f);
      } else {
        break;
      }
    }
    if (w.factors.empty()) fail("empty word");
    return w;
  }

  GroupForm atom() {
    skip();
    GroupForm g;
    if (peek() == 'E') {
      ++pos_;
      expect('(');
      g.op = GroupForm::Op::Gen;
      g.gen = word();
      expect(')');
    } else if (peek() == '[') {
      ++pos_;
      g.op = GroupForm::Op::Comm;
      g.kids.push_back(group());
      expect(',');
      g.kids.push_back(group());
      expect(']');
    } else {
      fail("expected 'E(' or '['");
    }
    if (text_.substr(pos_).starts_with("^-1")) {
      pos_ += 3;
      GroupForm inv;
      inv.op = GroupForm::Op::Inv;
      inv.kids.push_back(std::move(g));
      return inv;
    }
    return g;
  }

  GroupForm group() {
    GroupForm acc = atom();
    while (true) {
      skip();
      if (done() || peek() == ',' || peek() == ']') return acc;
      GroupForm prod;
      prod.op = GroupForm::Op::Prod;
      prod.kids.push_back(std::move(acc));
      prod.kids.push_back(atom());
      acc = std::move(prod);
    }
  }

  std::string_view text_;
  const std::vector<SlotSpec>& slots_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm parse_closed_form(std::string_view text, const std::vector<SlotSpec>& slots) {
  return FormParser(text, slots).parse_form();
}

Word parse_word(std::string_view text, const std::vector<SlotSpec>& slots) {
  return FormParser(text, slots).parse_word_only();
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

using Pred = std::function<bool(const Indices&)>;

SlotSpec alpha(char sym, std::string greek, char row, char col, std::string prefix) {
  return {sym, std::move(greek), HomKind::Alpha, row, col, std::move(prefix)};
}
SlotSpec beta(char sym, std::string greek, char row, char col, std::string prefix) {
  return {sym, std::move(greek), HomKind::Beta, row, col, std::move(prefix)};
}

struct Builder {
  LemmaSpec spec;

  Builder(LemmaId id, int arity, std::vector<SlotSpec> slots, ScalarShape scalars = ScalarShape::None) {
    spec.id = id;
    spec.arity = arity;
    spec.slots = std::move(slots);
    spec.scalars = scalars;
    spec.hypothesis = "none";
    spec.admissible = [](const Indices&) { return true; };
  }
  Builder& hypothesis(std::string text, Pred p) {
    spec.hypothesis = std::move(text);
    spec.admissible = std::move(p);
    return *this;
  }
  Builder& lhs(std::string_view text) {
    spec.lhs_text = std::string(text);
    auto f = parse_closed_form(text, spec.slots);
    spec.lhs = std::get<GroupForm>(f.body);
    return *this;
  }
  std::optional<ClosedForm> form(std::string_view text) const {
    if (text.empty()) return std::nullopt;
    return parse_closed_form(text, spec.slots);
  }
  Builder& branch(std::string predicate, Pred p, std::string_view statement, std::string_view proof) {
    spec.branches.push_back({std::move(predicate), std::move(p), form(statement), form(proof)});
    return *this;
  }
  Builder& aux(std::string name, std::string_view word, std::string_view dual) {
    spec.auxiliaries.push_back({std::move(name), parse_word(word, spec.slots), parse_word(dual, spec.slots),
                                std::string(word), std::string(dual)});
    return *this;
  }
};

const Pred any = [](const Indices&) { return true; };

// Pairs: slot 1 at (i,j), slot 2 at (k,l).
LemmaSpec make_l01(Fault fault) {
  const char* form = fault == Fault::L01Sign ? "I - d a* - a d*" : "I + d a* - a d*";
  Builder b(LemmaId::L01, 2, {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t")});
  b.lhs("[E(a), E(d)]")
      .branch("i=k", [](const Indices& x) { return x.i == x.k; }, fault == Fault::L01Sign ? form : "I", form)
      .branch("i!=k", [](const Indices& x) { return x.i != x.k; }, form, form);
  return b.spec;
}

LemmaSpec make_c01() {
  Builder b(LemmaId::C01, 2, {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t")},
            ScalarShape::Pair);
  const char* st = "[E($c a), E($d d)]";
  const char* pf = "I - $a $b a d* + $a $b d a*";
  b.lhs("[E($a a), E($b d)]")
      .branch("i=k", [](const Indices& x) { return x.i == x.k; }, st, pf)
      .branch("i!=k", [](const Indices& x) { return x.i != x.k; }, st, pf);
  return b.spec;
}

const Pred i_ne_k = [](const Indices& x) { return x.i != x.k; };

LemmaSpec make_l02() {
  Builder b(LemmaId::L02, 2, {alpha('a', "alpha", 'i', 'j', "w"), beta('b', "beta", 'k', 'l', "v")});
  b.hypothesis("i!=k", i_ne_k).lhs("[E(a), E(b)]").branch("i!=k", any, "I - a b* + b a*", "I - a b* + b a*");
  return b.spec;
}

LemmaSpec make_c02() {
  Builder b(LemmaId::C02, 2, {alpha('a', "alpha", 'i', 'j', "w"), beta('b', "beta", 'k', 'l', "v")},
            ScalarShape::Pair);
  b.hypothesis("i!=k", i_ne_k).lhs("[E($a a), E($b b)]").branch("i!=k", any, "[E($c a), E($d b)]", "");
  return b.spec;
}

LemmaSpec make_r01() {
  Builder b(LemmaId::R01, 2, {alpha('a', "alpha", 'i', 'j', "w"), beta('b', "beta", 'k', 'l', "v")});
  b.hypothesis("i!=k", i_ne_k).lhs("[E(a), E(b)]^-1").branch("i!=k", any, "I + a b* - b a*", "[E(b), E(a)]");
  return b.spec;
}

LemmaSpec make_l03() {
  Builder b(LemmaId::L03, 2, {beta('b', "beta", 'i', 'j', "v"), beta('g', "gamma", 'k', 'l', "c")});
  const char* pf = "I + g b* - b g*";
  b.lhs("[E(b), E(g)]")
      .branch("i=k", [](const Indices& x) { return x.i == x.k; }, "I", pf)
      .branch("i!=k", [](const Indices& x) { return x.i != x.k; }, pf, pf);
  return b.spec;
}

LemmaSpec make_c03() {
  Builder b(LemmaId::C03, 2, {beta('b', "beta", 'i', 'j', "v"), beta('g', "gamma", 'k', 'l', "c")},
            ScalarShape::Pair);
  const char* st = "[E($c b), E($d g)]";
  b.lhs("[E($a b), E($b g)]")
      .branch("i=k", [](const Indices& x) { return x.i == x.k; }, st, "")
      .branch("i!=k", [](const Indices& x) { return x.i != x.k; }, st, "");
  return b.spec;
}

// Triples: slots at (i,j), (k,l), (p,q); every lemma assumes k != p.
const Pred k_ne_p = [](const Indices& x) { return x.k != x.p; };
const Pred i_eq_p = [](const Indices& x) { return x.i == x.p; };
const Pred i_ne_p = [](const Indices& x) { return x.i != x.p; };
const Pred i_eq_k = [](const Indices& x) { return x.i == x.k; };
const Pred neither_pk = [](const Indices& x) { return x.i != x.p && x.i != x.k; };

LemmaSpec make_l04() {
  Builder b(LemmaId::L04, 3,
            {beta('b', "beta", 'i', 'j', "v"), alpha('a', "alpha", 'k', 'l', "w"), alpha('d', "delta", 'p', 'q', "t")});
  b.hypothesis("k!=p", k_ne_p)
      .lhs("[E(b), [E(a), E(d)]]")
      .branch("i=p", i_eq_p, "E(a d* b) [E(b), E(1/2 a d* b)]",
              "I - b* d a* + a d* b + 1/2 a d* b b* - 1/2 b b* d a* - 1/2 a d* b b* d a*")
      .branch("i=k", i_eq_k, "E(-d a* b) [E(b), E(-1/2 d a* b)]",
              "I + b* a d* + 1/2 b b* a d* - 1/2 d a* b b* - d a* b - 1/2 d a* b b* a d*")
      .branch("i!=p and i!=k", neither_pk, "I", "I")
      .aux("lambda", "a d* b", "b* d a*")
      .aux("xi", "-d a* b", "-b* a d*");
  return b.spec;
}

LemmaSpec make_c04() {
  Builder b(LemmaId::C04, 3,
            {beta('b', "beta", 'i', 'j', "v"), alpha('a', "alpha", 'k', 'l', "w"), alpha('d', "delta", 'p', 'q', "t")},
            ScalarShape::Triple);
  const char* st = "[E($d b), [E($e a), E($f d)]]";
  const char* pf =
      "I - $a^2 $b $c b* d a* + $a $b $c a d* b + 1/2 $a^2 $b $c a d* b b* - 1/2 $a^2 $b $c b b* d a*"
      " - 1/2 $a^2 $b^2 $c^2 a d* b b* d a*";
  b.hypothesis("i!=k and k!=p", [](const Indices& x) { return x.i != x.k && x.k != x.p; })
      .lhs("[E($a b), [E($b a), E($c d)]]")
      .branch("i=p", i_eq_p, st, pf)
      .branch("i!=p", i_ne_p, st, pf);
  return b.spec;
}

LemmaSpec make_l05() {
  Builder b(LemmaId::L05, 3,
            {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t"), beta('b', "beta", 'p', 'q', "v")});
  b.hypothesis("k!=p", k_ne_p)
      .lhs("[E(a), [E(d), E(b)]]")
      .branch("i=p", i_eq_p, "E(d b* a) [E(a), E(1/2 d b* a)]",
              "I - a* b d* + d b* a + 1/2 d b* a a* - 1/2 d b* a a* b d* - 1/2 a a* b d* + a* b d* b d*")
      .branch("i=k or i!=p", i_ne_p, "I", "I")
      .aux("mu", "d b* a", "a* b d*");
  return b.spec;
}

LemmaSpec make_c05() {
  Builder b(LemmaId::C05, 3,
            {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t"), beta('b', "beta", 'p', 'q', "v")},
            ScalarShape::Triple);
  b.hypothesis("i!=p and k!=p", [](const Indices& x) { return x.i != x.p && x.k != x.p; })
      .lhs("[E($a a), [E($b d), E($c b)]]")
      .branch("any", any, "[E($d a), [E($e d), E($f b)]]", "");
  return b.spec;
}

LemmaSpec make_l06() {
  Builder b(LemmaId::L06, 3,
            {beta('b', "beta", 'i', 'j', "v"), alpha('a', "alpha", 'k', 'l', "w"), beta('g', "gamma", 'p', 'q', "c")});
  const char* general = "I + b* a g* - g a* b - 1/2 g a* b b* + 1/2 b b* a g* - 1/2 g a* b b* a g*";
  b.hypothesis("k!=p", k_ne_p)
      .lhs("[E(b), [E(a), E(g)]]")
      .branch("i=p", i_eq_p, "E(-g a* b) [E(b), E(-1/2 g a* b)]", general)
      .branch("i=k or i!=p", i_ne_p, "I", general)
      .aux("nu", "-g a* b", "-b* a g*");
  return b.spec;
}

LemmaSpec make_c06() {
  Builder b(LemmaId::C06, 3,
            {beta('b', "beta", 'i', 'j', "v"), beta('g', "gamma", 'k', 'l', "c"), alpha('a', "alpha", 'p', 'q', "w")},
            ScalarShape::Triple);
  const char* st = "[E($d b), [E($e g), E($f a)]]";
  b.hypothesis("i!=k and k!=p", [](const Indices& x) { return x.i != x.k && x.k != x.p; })
      .lhs("[E($a b), [E($b g), E($c a)]]")
      .branch("i=p", i_eq_p, st, "")
      .branch("i!=p", i_ne_p, st, "");
  return b.spec;
}

LemmaSpec make_l07() {
  Builder b(LemmaId::L07, 3,
            {alpha('a', "alpha", 'i', 'j', "w"), beta('b', "beta", 'k', 'l', "v"), beta('g', "gamma", 'p', 'q', "c")});
  b.hypothesis("k!=p", k_ne_p)
      .lhs("[E(a), [E(b), E(g)]]")
      .branch("i=p", i_eq_p, "E(b g* a) [E(a), E(1/2 b g* a)]",
              "I - a* g b* - 1/2 a a* g b* + b g* a + 1/2 b g* a a* - 1/2 b g* a a* g b*")
      .branch("i=k", i_eq_k, "E(g b* a) [E(a), E(1/2 g b* a)]",
              "I - g b* a + a* b g* + 1/2 a a* b g* - 1/2 g b* a a* - 1/2 g b* a a* b g*")
      .branch("i!=p and i!=k", neither_pk, "I", "I")
      .aux("eta", "b g* a", "a* g b*")
      .aux("vartheta", "g b* a", "a* b g*");
  return b.spec;
}

LemmaSpec make_c07() {
  Builder b(LemmaId::C07, 3,
            {alpha('a', "alpha", 'i', 'j', "w"), beta('b', "beta", 'k', 'l', "v"), beta('g', "gamma", 'p', 'q', "c")},
            ScalarShape::Triple);
  const char* st = "[E($d a), [E($e b), E($f g)]]";
  b.hypothesis("i!=k and k!=p", [](const Indices& x) { return x.i != x.k && x.k != x.p; })
      .lhs("[E($a a), [E($b b), E($c g)]]")
      .branch("i=p", i_eq_p, st, "")
      .branch("i!=p", i_ne_p, st, "");
  return b.spec;
}

// Quads: [[slot1 (i,j), slot2 (k,l)], [slot3 (r,s), slot4 (p,q)]], all with
// i != k and r != p.
const Pred quad_hyp = [](const Indices& x) { return x.i != x.k && x.r != x.p; };

LemmaSpec make_l08() {
  Builder b(LemmaId::L08, 4,
            {beta('b', "beta", 'i', 'j', "v"), beta('g', "gamma", 'k', 'l', "c"), alpha('a', "alpha", 'r', 's', "w"),
             beta('m', "mu", 'p', 'q', "h")});
  const char* eq = "I - g b* a m* - m a* g b* + b g* a m* + m a* b g*";
  b.hypothesis("i!=k and r!=p", quad_hyp)
      .lhs("[[E(b), E(g)], [E(a), E(m)]]")
      .branch("k=r", [](const Indices& x) { return x.k == x.r; }, "[E(m a*), E(b g*)]", eq)
      .branch("i=r", [](const Indices& x) { return x.i == x.r; }, "[E(g b*), E(m a*)]", eq)
      .branch("otherwise", [](const Indices& x) { return x.k != x.r && x.i != x.r; }, "I", eq);
  return b.spec;
}

LemmaSpec make_l09() {
  Builder b(LemmaId::L09, 4,
            {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t"), alpha('x', "xi", 'r', 's', "g"),
             beta('b', "beta", 'p', 'q', "v")});
  const char* eq = "I + d a* b x* - a d* b x* + x b* d a* - x b* a d* - x b* d a* b x* + x b* a d* b x*";
  b.hypothesis("i!=k and r!=p", quad_hyp)
      .lhs("[[E(a), E(d)], [E(x), E(b)]]")
      .branch("i=p", [](const Indices& x) { return x.i == x.p; }, "[E(d a*), E(x b*)]", eq)
      .branch("k=p", [](const Indices& x) { return x.k == x.p; }, "[E(a d*), E(x b*)]", eq)
      .branch("otherwise", [](const Indices& x) { return x.i != x.p && x.k != x.p; }, "I", eq);
  return b.spec;
}

const char* kEq3 =
    "I + b a* g d* + a b* d g* - g d* b a* + a b* d g* a b* + a b* d g* a b* d g* - d g* a b* d g*"
    " - b a* g d* b a* - d g* a b* + g d* b a* g d* + b a* g d* b a* g d*";

LemmaSpec make_l10() {
  Builder b(LemmaId::L10, 4,
            {alpha('a', "alpha", 'i', 'j', "w"), beta('b', "beta", 'k', 'l', "v"), alpha('d', "delta", 'r', 's', "t"),
             beta('g', "gamma", 'p', 'q', "c")});
  b.hypothesis("i!=k and r!=p", quad_hyp)
      .lhs("[[E(a), E(b)], [E(d), E(g)]]")
      .branch("k=r and i!=p", [](const Indices& x) { return x.k == x.r && x.i != x.p; }, "[E(a b*), E(g d*)]^-1", kEq3)
      .branch("i=p and k!=r", [](const Indices& x) { return x.i == x.p && x.k != x.r; }, "[E(d g*), E(b a*)]", kEq3)
      .branch("k!=r and i!=p", [](const Indices& x) { return x.k != x.r && x.i != x.p; }, "I", kEq3)
      .branch("k=r and i=p", [](const Indices& x) { return x.k == x.r && x.i == x.p; }, "", kEq3);
  return b.spec;
}

LemmaSpec make_l11() {
  Builder b(LemmaId::L11, 4,
            {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t"), alpha('x', "xi", 'r', 's', "g"),
             alpha('m', "mu", 'p', 'q', "h")});
  b.hypothesis("i!=k and r!=p", quad_hyp).lhs("[[E(a), E(d)], [E(x), E(m)]]").branch("any", any, "I", "I");
  return b.spec;
}

LemmaSpec make_l12() {
  Builder b(LemmaId::L12, 4,
            {beta('b', "beta", 'i', 'j', "v"), beta('g', "gamma", 'k', 'l', "c"), beta('e', "eta", 'r', 's', "y"),
             beta('n', "nu", 'p', 'q', "u")});
  b.hypothesis("i!=k and r!=p", quad_hyp).lhs("[[E(b), E(g)], [E(e), E(n)]]").branch("any", any, "I", "I");
  return b.spec;
}

LemmaSpec make_l13() {
  Builder b(LemmaId::L13, 4,
            {alpha('a', "alpha", 'i', 'j', "w"), alpha('d', "delta", 'k', 'l', "t"), beta('b', "beta", 'r', 's', "v"),
             beta('g', "gamma", 'p', 'q', "c")});
  // The statement reuses the previous lemma's display verbatim, so beta
  // and delta appear at the index pairs (k,l) and (r,s).
  b.hypothesis("i!=k and r!=p", quad_hyp)
      .lhs("[[E(a), E(d)], [E(b), E(g)]]")
      .branch("k=r and i!=p", [](const Indices& x) { return x.k == x.r && x.i != x.p; }, "[E(a b@kl*), E(g d@rs*)]^-1",
              "")
      .branch("i=p and k!=r", [](const Indices& x) { return x.i == x.p && x.k != x.r; }, "[E(d@rs g*), E(b@kl a*)]", "")
      .branch("k!=r and i!=p", [](const Indices& x) { return x.k != x.r && x.i != x.p; }, "I", "")
      .branch("k=r and i=p", [](const Indices& x) { return x.k == x.r && x.i == x.p; }, "", "");

  auto& pool = b.spec.proof_pool;
  pool.push_back(*b.form("I + d a* g b* - b g* a d*"));
  pool.push_back(*b.form("I + a d* b g* - g b* d a*"));
  pool.push_back(*b.form("I - d a* b g* + g b* a d*"));
  pool.push_back(*b.form("I - a d* g b* + b g* d a*"));
  pool.push_back(*b.form(
      "I + d a* g b* + a d* b g* - g b* d a* - b g* a d* - b g* a d* b g* + g b* d a* g b* - d a* g b* d a*"
      " + a d* b g* a d* + a d* b g* a d* b g* + d a* g b* d a* g b* + a d* b g* d a* g b*"));
  pool.push_back(*b.form(
      "I - d a* b g* - a d* g b* + g b* a d* + b g* d a* - g b* a d* g b* + b g* d a* b g* + d a* b g* d a*"
      " - a d* g b* a d* + d a* b g* a d* g b* + d a* b g* d a* b g* + a d* g b* a d* g b*"));
  return b.spec;
}

const ClosedForm* l13_proof(const LemmaSpec& spec, const Indices& x) {
  const auto& pool = spec.proof_pool;
  const int i = x.i, k = x.k, p = x.p, r = x.r;
  if ((i == p && k != r) || (i != r && k != p && k != r)) return &pool[0];
  if ((k == r && i != p) || (i != r && k != p && i != p)) return &pool[1];
  if ((i == r && k != p) || (i != p && k != r && k != p)) return &pool[2];
  if ((k == p && i != r) || (i != p && k != r && i != r)) return &pool[3];
  if (i == p || k == r || (i != r && k != p)) return &pool[4];
  return &pool[5];
}

struct Catalog {
  std::map<LemmaId, LemmaSpec> specs;

  explicit Catalog(Fault fault) {
    for (auto s : {make_l01(fault), make_c01(), make_l02(), make_c02(), make_r01(), make_l03(), make_c03(), make_l04(),
                   make_c04(), make_l05(), make_c05(), make_l06(), make_c06(), make_l07(), make_c07(), make_l08(),
                   make_l09(), make_l10(), make_l11(), make_l12(), make_l13()})
      specs.emplace(s.id, std::move(s));
    // Selection among the displayed reductions; bound after the spec has
    // reached its final address.
    LemmaSpec& l13 = specs.at(LemmaId::L13);
    l13.proof_for = [&l13](const Indices& x) { return l13_proof(l13, x); };
  }
};

}  // namespace

const LemmaSpec& lemma_spec(LemmaId id, Fault fault) {
  static const Catalog clean(Fault::None);
  static const Catalog faulty(Fault::L01Sign);
  return (fault == Fault::None ? clean : faulty).specs.at(id);
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
void for_each_tuple(int m, int n, int arity, F&& f) {
  // Unused letters run over the single value 0.
  const int pq_rows = arity >= 3 ? m : 0, pq_cols = arity >= 3 ? n : 0, pq_lo = arity >= 3 ? 1 : 0;
  const int rs_rows = arity >= 4 ? m : 0, rs_cols = arity >= 4 ? n : 0, rs_lo = arity >= 4 ? 1 : 0;
  Indices x;
  for (x.i = 1; x.i <= m; ++x.i)
    for (x.j = 1; x.j <= n; ++x.j)
      for (x.k = 1; x.k <= m; ++x.k)
        for (x.l = 1; x.l <= n; ++x.l)
          for (x.p = pq_lo; x.p <= pq_rows; ++x.p)
            for (x.q = pq_lo; x.q <= pq_cols; ++x.q)
              for (x.r = rs_lo; x.r <= rs_rows; ++x.r)
                for (x.s = rs_lo; x.s <= rs_cols; ++x.s) f(x);
}

std::vector<CaseSkeleton> collect(int m, int n, const LemmaSpec& spec) {
  std::vector<CaseSkeleton> out;
  for_each_tuple(m, n, spec.arity, [&](const Indices& x) {
    if (!spec.admissible(x)) return;
    for (std::size_t b = 0; b < spec.branches.size(); ++b)
      if (spec.branches[b].holds(x)) {
        out.push_back({spec.id, x, b});
        return;
      }
    raise(ErrorCode::ConstraintViolated, std::string(to_string(spec.id)) + ": no branch for " + x.to_string());
  });
  return out;
}

}  // namespace

std::vector<std::string> unreachable_branches(int m, int n, LemmaId id) {
  const auto& spec = lemma_spec(id);
  std::vector<std::size_t> hits(spec.branches.size(), 0);
  if (m >= 1 && n >= 1)
    for (const auto& c : collect(m, n, spec)) ++hits[c.branch];
  std::vector<std::string> out;
  for (std::size_t b = 0; b < hits.size(); ++b)
    if (hits[b] == 0) out.push_back(spec.branches[b].predicate);
  return out;
}

std::vector<CaseSkeleton> enumerate_cases(int m, int n, LemmaId id) {
  const auto& spec = lemma_spec(id);
  if (n < 1) raise(ErrorCode::IndexOutOfRange, "n must be at least 1");
  if (m < spec.arity) {
    std::string msg = std::string(to_string(id)) + " needs m >= " + std::to_string(spec.arity) +
                      " (pairwise distinct row indices are unreachable at m=" + std::to_string(m) + ")";
    auto missing = unreachable_branches(m, n, id);
    if (!missing.empty()) {
      msg += "; branches with no admissible tuple:";
      for (const auto& b : missing) msg += " '" + b + "'";
    }
    // Branches that lose their tuples with pairwise distinct rows.
    std::set<std::size_t> lost;
    for (const auto& c : collect(spec.arity, 1, spec)) {
      std::set<int> rows{c.idx.i, c.idx.k};
      if (spec.arity >= 3) rows.insert(c.idx.p);
      if (spec.arity >= 4) rows.insert(c.idx.r);
      if (static_cast<int>(rows.size()) == spec.arity &&
          std::find(missing.begin(), missing.end(), spec.branches[c.branch].predicate) == missing.end())
        lost.insert(c.branch);
    }
    if (!lost.empty()) {
      msg += "; branches missing their distinct-row tuples:";
      for (auto b : lost) msg += " '" + spec.branches[b].predicate + "'";
    }
    raise(ErrorCode::RankTooSmall, msg);
  }
  return collect(m, n, spec);
}

}  // namespace dser
