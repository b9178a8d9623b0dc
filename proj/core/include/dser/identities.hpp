#pragma once

// Instances of the catalogued identities and their verdicts.
//
// The left-hand side of every identity is evaluated only as a group word
// (eval_expr over elementary generators). Closed forms are evaluated
// separately, additive forms by block arithmetic and bracket forms again as
// group words, and the verdict compares the matrices exactly.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dser/group.hpp"
#include "dser/laurent.hpp"
#include "dser/lemma.hpp"
#include "dser/random.hpp"

namespace dser {

enum class Status { MatchesBoth, MatchesProofOnly, MatchesStatementOnly, MatchesNeither, StatementAbsent };

std::string_view to_string(Status s);

template <Ring R>
struct IdentityCase {
  using value_type = typename R::value_type;

  CaseSkeleton skeleton;
  std::shared_ptr<const AmbientSpace<R>> amb;
  /// Per slot: the star vectors w_1..w_m as columns of an n x m matrix.
  std::vector<Matrix<R>> vectors;
  /// Per slot: the full Hom map; the lemma uses its (row, col) component.
  std::vector<HomMap<R>> maps;
  /// a, b, c, d, e, f for corollaries (unused entries are zero).
  std::optional<std::array<value_type, 6>> scalars;
  std::string origin;

  const LemmaSpec& spec() const { return lemma_spec(skeleton.lemma); }
  const R& ring() const { return amb->ring(); }
};

template <Ring R>
struct Verdict {
  IdentityCase<R> c;
  GroupElement<R> lhs;
  std::optional<Matrix<R>> rhs_statement;
  std::optional<Matrix<R>> rhs_proof;
  Status status;
};

/// Closed forms of one case; absent entries mean the source gives none.
template <Ring R>
struct ClosedForms {
  std::optional<GroupElement<R>> statement;
  std::optional<GroupElement<R>> proof;
};

/// Builds a case from the Q-form, star vectors (one n x m matrix per slot)
/// and scalars. Throws ConstraintViolated when the indices break the
/// lemma's hypothesis or the scalars break the corollary's constraints.
template <Ring R>
IdentityCase<R> make_case(const CaseSkeleton& skel, QuadraticSpace<R> q_space, std::size_t m,
                          std::vector<Matrix<R>> vectors,
                          std::optional<std::array<typename R::value_type, 6>> scalars = std::nullopt,
                          std::string origin = {});

/// Q-form diag(d_j) with d_j random units, random star vectors, and
/// scalars with the constraints imposed by construction (d = ab/c for
/// pairs; d = a, f = bc/e for triples).
template <Ring R>
IdentityCase<R> random_instance(const CaseSkeleton& skel, const R& ring, std::size_t m, std::size_t n, Rng& rng);

/// Fresh indeterminates: d1..dn (inverted) for the Q-form, "<prefix><i><j>"
/// for the j-th coordinate of the i-th star vector of each slot, scalars
/// a, b, c (c inverted; d = ab/c) or a, b, c, e (e inverted; d = a, f = bc/e).
IdentityCase<LocalizedPolyRing> symbolic_instance(const CaseSkeleton& skel, std::size_t m, std::size_t n);

/// The left-hand side bracket tree over the case's generators.
template <Ring R>
CommExpr<R> lhs_expr(const IdentityCase<R>& c);

template <Ring R>
ClosedForms<R> closed_forms(const IdentityCase<R>& c, Fault fault = Fault::None);

/// Arity-checked entry points (ConstraintViolated on a lemma of another arity).
template <Ring R>
ClosedForms<R> closed_form_pair(const IdentityCase<R>& c, Fault fault = Fault::None);
template <Ring R>
ClosedForms<R> closed_form_triple(const IdentityCase<R>& c, Fault fault = Fault::None);
template <Ring R>
ClosedForms<R> closed_form_quad(const IdentityCase<R>& c, Fault fault = Fault::None);

Status classify(bool has_statement, bool statement_ok, bool has_proof, bool proof_ok);

template <Ring R>
Verdict<R> check_case(const IdentityCase<R>& c, Fault fault = Fault::None);

/// For corollaries: both scaled brackets evaluated by brute force.
/// Throws ConstraintViolated for lemmas without scalars.
template <Ring R>
Verdict<R> scaling_equiv(const IdentityCase<R>& c);

struct StarCheck {
  std::string name;
  std::string word, displayed_dual;
  bool matches;
};

/// For each auxiliary map of the lemma (lambda, xi, mu, nu, eta, vartheta):
/// the dual of its extracted Hom block against the dual the proof displays.
template <Ring R>
std::vector<StarCheck> composite_star_checks(const IdentityCase<R>& c);

/// Ambient matrix of a word (product of component blocks, scaled).
template <Ring R>
Matrix<R> word_matrix(const IdentityCase<R>& c, const Word& w);

/// "alpha_12", "beta_31*", ...
std::string word_label(const LemmaSpec& spec, const Word& w, const Indices& idx);

#define DSER_IDENTITIES_EXTERN(R)                                                                                   \
  extern template IdentityCase<R> make_case(const CaseSkeleton&, QuadraticSpace<R>, std::size_t,                    \
                                            std::vector<Matrix<R>>,                                                 \
                                            std::optional<std::array<typename R::value_type, 6>>, std::string);     \
  extern template CommExpr<R> lhs_expr(const IdentityCase<R>&);                                                     \
  extern template ClosedForms<R> closed_forms(const IdentityCase<R>&, Fault);                                       \
  extern template ClosedForms<R> closed_form_pair(const IdentityCase<R>&, Fault);                                   \
  extern template ClosedForms<R> closed_form_triple(const IdentityCase<R>&, Fault);                                 \
  extern template ClosedForms<R> closed_form_quad(const IdentityCase<R>&, Fault);                                   \
  extern template Verdict<R> check_case(const IdentityCase<R>&, Fault);                                             \
  extern template Verdict<R> scaling_equiv(const IdentityCase<R>&);                                                 \
  extern template std::vector<StarCheck> composite_star_checks(const IdentityCase<R>&);                             \
  extern template Matrix<R> word_matrix(const IdentityCase<R>&, const Word&);

DSER_IDENTITIES_EXTERN(RationalField)
DSER_IDENTITIES_EXTERN(PrimeField)
DSER_IDENTITIES_EXTERN(LocalizedPolyRing)

extern template IdentityCase<RationalField> random_instance(const CaseSkeleton&, const RationalField&, std::size_t,
                                                            std::size_t, Rng&);
extern template IdentityCase<PrimeField> random_instance(const CaseSkeleton&, const PrimeField&, std::size_t,
                                                         std::size_t, Rng&);

#undef DSER_IDENTITIES_EXTERN

}  // namespace dser
