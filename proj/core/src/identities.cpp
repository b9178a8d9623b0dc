#include "dser/identities.hpp"

#include <map>
#include <set>
#include <tuple>

namespace dser {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::MatchesBoth: return "MatchesBoth";
    case Status::MatchesProofOnly: return "MatchesProofOnly";
    case Status::MatchesStatementOnly: return "MatchesStatementOnly";
    case Status::MatchesNeither: return "MatchesNeither";
    case Status::StatementAbsent: return "StatementAbsent";
  }
  return "?";
}

Status classify(bool has_statement, bool statement_ok, bool has_proof, bool proof_ok) {
  if (!has_statement) return has_proof && !proof_ok ? Status::MatchesNeither : Status::StatementAbsent;
  if (!has_proof) return statement_ok ? Status::MatchesBoth : Status::MatchesNeither;
  if (statement_ok && proof_ok) return Status::MatchesBoth;
  if (proof_ok) return Status::MatchesProofOnly;
  if (statement_ok) return Status::MatchesStatementOnly;
  return Status::MatchesNeither;
}

std::string word_label(const LemmaSpec& spec, const Word& w, const Indices& idx) {
  std::string out;
  const auto& c = w.coef;
  if (c.value != 1 || std::any_of(c.scalar_pow.begin(), c.scalar_pow.end(), [](int e) { return e != 0; })) {
    if (c.value != 1) out += c.value.get_str();
    for (int s = 0; s < 6; ++s) {
      if (c.scalar_pow[s] == 0) continue;
      if (!out.empty() && out != "-") out += "*";
      out += static_cast<char>('a' + s);
      if (c.scalar_pow[s] != 1) out += "^" + std::to_string(c.scalar_pow[s]);
    }
    out += "*";
  }
  for (std::size_t f = 0; f < w.factors.size(); ++f) {
    const auto& fac = w.factors[f];
    if (f) out += " ";
    out += spec.slots.at(fac.slot).greek + "_" + std::to_string(idx.get(fac.row)) + std::to_string(idx.get(fac.col));
    if (fac.star) out += "*";
  }
  return out;
}

namespace {

struct Sig {
  Summand to, from;
};

template <Ring R>
class Evaluator {
 public:
  using V = typename R::value_type;

  explicit Evaluator(const IdentityCase<R>& c) : c_(c), spec_(c.spec()), amb_(*c.amb), ring_(c.ring()) {}

  Sig signature(const Factor& f) const {
    HomKind k = spec_.slots.at(f.slot).kind;
    if (f.star) return {Summand::Q, dual_source_of(k)};
    return {target_of(k), Summand::Q};
  }

  std::pair<std::size_t, std::size_t> position(const Factor& f) const {
    int r = c_.skeleton.idx.get(f.row), col = c_.skeleton.idx.get(f.col);
    if (r < 1 || col < 1) raise(ErrorCode::IndexOutOfRange, "index letter without a value");
    return {static_cast<std::size_t>(r), static_cast<std::size_t>(col)};
  }

  const HomMap<R>& component(const Factor& f) {
    auto [r, col] = position(f);
    auto key = std::make_tuple(f.slot, r, col);
    auto it = comps_.find(key);
    if (it == comps_.end()) it = comps_.emplace(key, component_map(c_.maps.at(f.slot), r, col)).first;
    return it->second;
  }

  const Matrix<R>& factor_matrix(const Factor& f) {
    auto [r, col] = position(f);
    auto key = std::make_tuple(f.slot, r, col, f.star);
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
      const auto& theta = component(f);
      it = blocks_.emplace(key, f.star ? ambient_star(theta, amb_) : ambient_endo(theta, amb_)).first;
    }
    return it->second;
  }

  V coefficient(const Coefficient& k) const {
    V v = ring_.from_rational(k.value);
    if (k.scalar_pow != std::array<int, 6>{}) {
      if (!c_.scalars) raise(ErrorCode::ConstraintViolated, "closed form uses scalars the case does not carry");
      for (int s = 0; s < 6; ++s)
        for (int e = 0; e < k.scalar_pow[s]; ++e) v = v * (*c_.scalars)[s];
    }
    return v;
  }

  Sig check_typing(const Word& w) const {
    if (w.factors.empty()) raise(ErrorCode::ConstraintViolated, "empty word");
    for (std::size_t t = 0; t + 1 < w.factors.size(); ++t)
      if (signature(w.factors[t]).from != signature(w.factors[t + 1]).to)
        raise(ErrorCode::ConstraintViolated, "ill-typed composite " + word_label(spec_, w, c_.skeleton.idx));
    return {signature(w.factors.front()).to, signature(w.factors.back()).from};
  }

  Matrix<R> word_matrix(const Word& w) {
    check_typing(w);
    Matrix<R> acc = factor_matrix(w.factors.front());
    for (std::size_t t = 1; t < w.factors.size(); ++t) acc = acc * factor_matrix(w.factors[t]);
    V k = coefficient(w.coef);
    if (!(k == ring_.one())) acc = acc.scaled(k);
    return acc;
  }

  Matrix<R> additive(const AdditiveForm& f) {
    Matrix<R> acc = amb_.identity();
    for (const auto& t : f.terms) acc += word_matrix(t);
    return acc;
  }

  /// The Hom map a word denotes, or nullopt if it is not Q -> P / Q -> P*.
  std::optional<HomMap<R>> word_hom(const Word& w) {
    Sig s = check_typing(w);
    if (s.from != Summand::Q || s.to == Summand::Q) return std::nullopt;
    HomKind kind = s.to == Summand::P ? HomKind::Alpha : HomKind::Beta;
    auto [row, ignored] = position(w.factors.front());
    auto [ignored2, col] = position(w.factors.back());
    (void)ignored;
    (void)ignored2;
    if (w.factors.size() == 1) return scale(component(w.factors.front()), coefficient(w.coef));
    return extract_hom(word_matrix(w), kind, amb_, std::make_pair(row, col));
  }

  std::shared_ptr<const DserGenerator<R>> generator(const Word& w) {
    std::string label = word_label(spec_, w, c_.skeleton.idx);
    if (auto theta = word_hom(w)) return std::make_shared<const DserGenerator<R>>(elementary(*theta, amb_, label));
    return std::make_shared<const DserGenerator<R>>(elementary_endo(word_matrix(w), amb_, label));
  }

  CommExpr<R> expr(const GroupForm& g) {
    using Op = GroupForm::Op;
    switch (g.op) {
      case Op::Gen: return CommExpr<R>::leaf(generator(g.gen));
      case Op::Inv: return CommExpr<R>::inv(expr(g.kids.at(0)));
      case Op::Comm: return CommExpr<R>::comm(expr(g.kids.at(0)), expr(g.kids.at(1)));
      case Op::Prod: {
        CommExpr<R> acc = expr(g.kids.at(0));
        for (std::size_t t = 1; t < g.kids.size(); ++t) acc = CommExpr<R>::prod(std::move(acc), expr(g.kids[t]));
        return acc;
      }
    }
    raise(ErrorCode::ConstraintViolated, "bad group form");
  }

  GroupElement<R> form(const ClosedForm& f) {
    if (auto* a = std::get_if<AdditiveForm>(&f.body)) return GroupElement<R>::without_inverse(additive(*a));
    return eval_expr(expr(std::get<GroupForm>(f.body)), false);
  }

 private:
  const IdentityCase<R>& c_;
  const LemmaSpec& spec_;
  const AmbientSpace<R>& amb_;
  const R& ring_;
  std::map<std::tuple<int, std::size_t, std::size_t>, HomMap<R>> comps_;
  std::map<std::tuple<int, std::size_t, std::size_t, bool>, Matrix<R>> blocks_;
};

template <Ring R>
void check_scalars(const LemmaSpec& spec, const R& ring,
                   const std::optional<std::array<typename R::value_type, 6>>& scalars) {
  if (spec.scalars == ScalarShape::None) {
    if (scalars) raise(ErrorCode::ConstraintViolated, std::string(to_string(spec.id)) + " takes no scalars");
    return;
  }
  if (!scalars) raise(ErrorCode::ConstraintViolated, std::string(to_string(spec.id)) + " needs scalars");
  const auto& [a, b, c, d, e, f] = *scalars;
  bool ok = spec.scalars == ScalarShape::Pair ? a * b == c * d : (a * b * c == d * e * f && a * a * b * c == d * d * e * f);
  (void)ring;
  if (!ok) raise(ErrorCode::ConstraintViolated, std::string(to_string(spec.id)) + ": scalar constraint fails");
}

template <Ring R>
std::array<typename R::value_type, 6> constrained_scalars(ScalarShape shape, const R& ring,
                                                          std::array<typename R::value_type, 6> s) {
  // Free entries: a, b, c (c a unit) for pairs; a, b, c, e (e a unit) for triples.
  if (shape == ScalarShape::Pair) {
    s[3] = s[0] * s[1] * ring.invert(s[2]);
    s[4] = s[5] = ring.zero();
  } else {
    s[3] = s[0];
    s[5] = s[1] * s[2] * ring.invert(s[4]);
  }
  return s;
}

}  // namespace

template <Ring R>
IdentityCase<R> make_case(const CaseSkeleton& skel, QuadraticSpace<R> q_space, std::size_t m,
                          std::vector<Matrix<R>> vectors, std::optional<std::array<typename R::value_type, 6>> scalars,
                          std::string origin) {
  const auto& spec = lemma_spec(skel.lemma);
  const auto& x = skel.idx;
  if (!spec.admissible(x))
    raise(ErrorCode::ConstraintViolated,
          std::string(to_string(skel.lemma)) + " requires " + spec.hypothesis + ", got " + x.to_string());
  if (skel.branch >= spec.branches.size() || !spec.branches[skel.branch].holds(x))
    raise(ErrorCode::ConstraintViolated, "branch label does not fit " + x.to_string());
  if (vectors.size() != spec.slots.size())
    raise(ErrorCode::DimensionMismatch, "expected " + std::to_string(spec.slots.size()) + " vector sets");
  const R ring = q_space.ring();
  check_scalars(spec, ring, scalars);

  IdentityCase<R> c{skel, std::make_shared<const AmbientSpace<R>>(std::move(q_space), m), {}, {}, scalars,
                    std::move(origin)};
  for (const auto& s : spec.slots)
    for (char letter : {s.row, s.col}) {
      int v = x.get(letter);
      std::size_t bound = letter == s.row ? m : c.amb->n();
      if (v < 1 || static_cast<std::size_t>(v) > bound)
        raise(ErrorCode::IndexOutOfRange, std::string("index ") + letter + " out of range in " + x.to_string());
    }
  for (std::size_t t = 0; t < vectors.size(); ++t)
    c.maps.push_back(hom_from_vectors(spec.slots[t].kind, vectors[t], *c.amb));
  c.vectors = std::move(vectors);
  return c;
}

template <Ring R>
IdentityCase<R> random_instance(const CaseSkeleton& skel, const R& ring, std::size_t m, std::size_t n, Rng& rng) {
  const auto& spec = lemma_spec(skel.lemma);
  std::vector<typename R::value_type> d;
  for (std::size_t j = 0; j < n; ++j) d.push_back(sample_unit(ring, rng));
  std::vector<Matrix<R>> vectors;
  for (std::size_t s = 0; s < spec.slots.size(); ++s) {
    Matrix<R> w(ring, n, m);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b) w(a, b) = sample_element(ring, rng);
    vectors.push_back(std::move(w));
  }
  std::optional<std::array<typename R::value_type, 6>> scalars;
  if (spec.scalars != ScalarShape::None) {
    std::array<typename R::value_type, 6> s;
    s.fill(ring.zero());
    s[0] = sample_element(ring, rng);
    s[1] = sample_element(ring, rng);
    if (spec.scalars == ScalarShape::Pair) {
      s[2] = sample_unit(ring, rng);
    } else {
      s[2] = sample_element(ring, rng);
      s[4] = sample_unit(ring, rng);
    }
    scalars = constrained_scalars(spec.scalars, ring, s);
  }
  return make_case(skel, diagonal_space(ring, d), m, std::move(vectors), scalars, "random");
}

namespace {

void collect_factors(const Word& w, std::vector<Factor>& out) {
  for (const auto& f : w.factors) out.push_back(f);
}

void collect_factors(const GroupForm& g, std::vector<Factor>& out) {
  if (g.op == GroupForm::Op::Gen) collect_factors(g.gen, out);
  for (const auto& k : g.kids) collect_factors(k, out);
}

void collect_factors(const ClosedForm& f, std::vector<Factor>& out) {
  if (auto* a = std::get_if<AdditiveForm>(&f.body))
    for (const auto& t : a->terms) collect_factors(t, out);
  else
    collect_factors(std::get<GroupForm>(f.body), out);
}

}  // namespace

IdentityCase<LocalizedPolyRing> symbolic_instance(const CaseSkeleton& skel, std::size_t m, std::size_t n) {
  const auto& spec = lemma_spec(skel.lemma);
  const auto& x = skel.idx;

  // Only the components some form actually reads get an indeterminate.
  std::vector<Factor> used;
  collect_factors(spec.lhs, used);
  for (const auto& b : spec.branches) {
    if (b.statement) collect_factors(*b.statement, used);
    if (b.proof) collect_factors(*b.proof, used);
  }
  for (const auto& f : spec.proof_pool) collect_factors(f, used);
  for (const auto& a : spec.auxiliaries) {
    collect_factors(a.word, used);
    collect_factors(a.displayed_dual, used);
  }
  std::set<std::tuple<int, int, int>> comps;
  for (const auto& f : used) comps.emplace(f.slot, x.get(f.row), x.get(f.col));

  std::vector<std::string> names, inverted;
  for (std::size_t j = 1; j <= n; ++j) {
    names.push_back("d" + std::to_string(j));
    inverted.push_back(names.back());
  }
  for (const auto& [slot, r, col] : comps) {
    if (r < 1 || col < 1 || static_cast<std::size_t>(r) > m || static_cast<std::size_t>(col) > n)
      raise(ErrorCode::IndexOutOfRange, "component out of range in " + x.to_string());
    names.push_back(spec.slots.at(slot).var_prefix + std::to_string(r) + std::to_string(col));
  }
  if (spec.scalars == ScalarShape::Pair) {
    for (const char* s : {"a", "b", "c"}) names.push_back(s);
    inverted.push_back("c");
  } else if (spec.scalars == ScalarShape::Triple) {
    for (const char* s : {"a", "b", "c", "e"}) names.push_back(s);
    inverted.push_back("e");
  }
  if (names.size() > static_cast<std::size_t>(kMaxPolyVariables))
    raise(ErrorCode::ConfigError, "symbolic case needs " + std::to_string(names.size()) + " indeterminates");

  LocalizedPolyRing ring(names, inverted);
  std::vector<LaurentPoly> d;
  for (std::size_t j = 1; j <= n; ++j) d.push_back(ring.variable("d" + std::to_string(j)));
  std::vector<Matrix<LocalizedPolyRing>> vectors(spec.slots.size(), Matrix<LocalizedPolyRing>(ring, n, m));
  for (const auto& [slot, r, col] : comps)
    vectors[slot](col - 1, r - 1) = ring.variable(spec.slots[slot].var_prefix + std::to_string(r) + std::to_string(col));

  std::optional<std::array<LaurentPoly, 6>> scalars;
  if (spec.scalars != ScalarShape::None) {
    std::array<LaurentPoly, 6> s;
    s.fill(ring.zero());
    s[0] = ring.variable("a");
    s[1] = ring.variable("b");
    s[2] = ring.variable("c");
    if (spec.scalars == ScalarShape::Triple) s[4] = ring.variable("e");
    scalars = constrained_scalars(spec.scalars, ring, s);
  }
  return make_case(skel, diagonal_space(ring, d), m, std::move(vectors), scalars, "symbolic");
}

template <Ring R>
CommExpr<R> lhs_expr(const IdentityCase<R>& c) {
  Evaluator<R> ev(c);
  return ev.expr(c.spec().lhs);
}

template <Ring R>
ClosedForms<R> closed_forms(const IdentityCase<R>& c, Fault fault) {
  const auto& spec = lemma_spec(c.skeleton.lemma, fault);
  const auto& branch = spec.branches.at(c.skeleton.branch);
  Evaluator<R> ev(c);
  ClosedForms<R> out;
  if (branch.statement) out.statement = ev.form(*branch.statement);
  if (const ClosedForm* p = spec.proof(c.skeleton.idx, c.skeleton.branch)) out.proof = ev.form(*p);
  return out;
}

namespace {

template <Ring R>
ClosedForms<R> closed_forms_of_arity(const IdentityCase<R>& c, Fault fault, int arity, const char* what) {
  if (c.spec().arity != arity)
    raise(ErrorCode::ConstraintViolated, std::string(to_string(c.skeleton.lemma)) + " is not a " + what + " identity");
  return closed_forms(c, fault);
}

}  // namespace

template <Ring R>
ClosedForms<R> closed_form_pair(const IdentityCase<R>& c, Fault fault) {
  return closed_forms_of_arity(c, fault, 2, "pairwise");
}
template <Ring R>
ClosedForms<R> closed_form_triple(const IdentityCase<R>& c, Fault fault) {
  return closed_forms_of_arity(c, fault, 3, "triple");
}
template <Ring R>
ClosedForms<R> closed_form_quad(const IdentityCase<R>& c, Fault fault) {
  return closed_forms_of_arity(c, fault, 4, "four-fold");
}

template <Ring R>
Verdict<R> check_case(const IdentityCase<R>& c, Fault fault) {
  GroupElement<R> lhs = eval_expr(lhs_expr(c), false);
  ClosedForms<R> rhs = closed_forms(c, fault);
  const bool st_ok = rhs.statement && rhs.statement->matrix() == lhs.matrix();
  const bool pf_ok = rhs.proof && rhs.proof->matrix() == lhs.matrix();
  Status s = classify(rhs.statement.has_value(), st_ok, rhs.proof.has_value(), pf_ok);
  std::optional<Matrix<R>> st, pf;
  if (rhs.statement) st = rhs.statement->matrix();
  if (rhs.proof) pf = rhs.proof->matrix();
  return {c, std::move(lhs), std::move(st), std::move(pf), s};
}

template <Ring R>
Verdict<R> scaling_equiv(const IdentityCase<R>& c) {
  const auto& spec = c.spec();
  if (spec.scalars == ScalarShape::None)
    raise(ErrorCode::ConstraintViolated, std::string(to_string(spec.id)) + " is not a scaling identity");
  check_scalars(spec, c.ring(), c.scalars);
  return check_case(c);
}

template <Ring R>
std::vector<StarCheck> composite_star_checks(const IdentityCase<R>& c) {
  const auto& spec = c.spec();
  Evaluator<R> ev(c);
  std::vector<StarCheck> out;
  for (const auto& aux : spec.auxiliaries) {
    auto theta = ev.word_hom(aux.word);
    if (!theta) raise(ErrorCode::NonComponentComposite, aux.name + " is not a Hom composite");
    bool ok = ambient_star(*theta, *c.amb) == ev.word_matrix(aux.displayed_dual);
    out.push_back({aux.name, aux.text, aux.dual_text, ok});
  }
  return out;
}

template <Ring R>
Matrix<R> word_matrix(const IdentityCase<R>& c, const Word& w) {
  Evaluator<R> ev(c);
  return ev.word_matrix(w);
}

#define DSER_IDENTITIES_INSTANTIATE(R)                                                                              \
  template IdentityCase<R> make_case(const CaseSkeleton&, QuadraticSpace<R>, std::size_t, std::vector<Matrix<R>>,   \
                                     std::optional<std::array<typename R::value_type, 6>>, std::string);            \
  template CommExpr<R> lhs_expr(const IdentityCase<R>&);                                                            \
  template ClosedForms<R> closed_forms(const IdentityCase<R>&, Fault);                                              \
  template ClosedForms<R> closed_form_pair(const IdentityCase<R>&, Fault);                                          \
  template ClosedForms<R> closed_form_triple(const IdentityCase<R>&, Fault);                                        \
  template ClosedForms<R> closed_form_quad(const IdentityCase<R>&, Fault);                                          \
  template Verdict<R> check_case(const IdentityCase<R>&, Fault);                                                    \
  template Verdict<R> scaling_equiv(const IdentityCase<R>&);                                                        \
  template std::vector<StarCheck> composite_star_checks(const IdentityCase<R>&);                                    \
  template Matrix<R> word_matrix(const IdentityCase<R>&, const Word&);

DSER_IDENTITIES_INSTANTIATE(RationalField)
DSER_IDENTITIES_INSTANTIATE(PrimeField)
DSER_IDENTITIES_INSTANTIATE(LocalizedPolyRing)

template IdentityCase<RationalField> random_instance(const CaseSkeleton&, const RationalField&, std::size_t, std::size_t,
                                                     Rng&);
template IdentityCase<PrimeField> random_instance(const CaseSkeleton&, const PrimeField&, std::size_t, std::size_t,
                                                  Rng&);

}  // namespace dser
