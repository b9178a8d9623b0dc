#pragma once

// Ring-independent description of every commutator identity: slots,
// index hypotheses, branches, and the closed forms as small expression trees.
//
// Closed forms are written in a compact notation and parsed once:
//
//   additive form   I + d a* - 1/2 a d* b b* + $a^2 $b a d*
//   group form      E(a d* b) [E(b), E(1/2 a d* b)]      [E(x), E(y)]^-1
//
// Lower-case letters name the lemma's slots (each slot is the component map
// theta_ij of one Hom map), a trailing * is the dual, "@kl" takes the
// component at other index letters of the slot's full map, "$a".."$f" are
// the corollary scalars. Words compose right to left as maps.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dser/dser.hpp"

namespace dser {

enum class LemmaId { L01, C01, L02, C02, R01, L03, C03, L04, C04, L05, C05, L06, C06, L07, C07, L08, L09, L10, L11, L12, L13 };

inline constexpr std::array<LemmaId, 21> kAllLemmas = {
    LemmaId::L01, LemmaId::C01, LemmaId::L02, LemmaId::C02, LemmaId::R01, LemmaId::L03, LemmaId::C03,
    LemmaId::L04, LemmaId::C04, LemmaId::L05, LemmaId::C05, LemmaId::L06, LemmaId::C06, LemmaId::L07,
    LemmaId::C07, LemmaId::L08, LemmaId::L09, LemmaId::L10, LemmaId::L11, LemmaId::L12, LemmaId::L13};

std::string_view to_string(LemmaId id);
/// Case-insensitive ("l08", "L08"). Throws ParseError.
LemmaId parse_lemma(std::string_view text);

/// 1-based indices; letters a lemma does not use stay 0. The member order
/// gives the lexicographic enumeration order.
struct Indices {
  int i = 0, j = 0, k = 0, l = 0, p = 0, q = 0, r = 0, s = 0;

  int get(char letter) const;
  auto operator<=>(const Indices&) const = default;
  std::string to_string() const;
};

enum class ScalarShape { None, Pair, Triple };

struct SlotSpec {
  char symbol;            // letter used in the closed-form notation
  std::string greek;      // "alpha", "beta", ...
  HomKind kind;
  char row, col;          // index letters, e.g. 'i', 'j'
  std::string var_prefix; // symbolic variable prefix for its star vectors
};

// -- expression trees --------------------------------------------------------

struct Factor {
  int slot = 0;
  bool star = false;
  char row = 0, col = 0;  // index letters of the component (the slot's own unless "@")
};

struct Coefficient {
  Rational value = 1;
  std::array<int, 6> scalar_pow{};  // exponents of a, b, c, d, e, f
};

struct Word {
  Coefficient coef;
  std::vector<Factor> factors;
};

/// I + sum of terms.
struct AdditiveForm {
  std::vector<Word> terms;
};

struct GroupForm {
  enum class Op { Gen, Prod, Comm, Inv };
  Op op = Op::Gen;
  Word gen;
  std::vector<GroupForm> kids;
};

struct ClosedForm {
  std::string text;
  std::variant<AdditiveForm, GroupForm> body;

  bool is_identity() const;
};

struct BranchSpec {
  std::string predicate;
  std::function<bool(const Indices&)> holds;
  std::optional<ClosedForm> statement;
  std::optional<ClosedForm> proof;
};

/// A Hom-valued composite used inside a statement (lambda, xi, mu, ...),
/// together with the dual the proof displays for it.
struct AuxiliarySpec {
  std::string name;
  Word word;
  Word displayed_dual;
  std::string text, dual_text;
};

struct LemmaSpec {
  LemmaId id;
  int arity = 2;
  std::vector<SlotSpec> slots;
  ScalarShape scalars = ScalarShape::None;
  std::string hypothesis;
  std::function<bool(const Indices&)> admissible;
  GroupForm lhs;
  std::string lhs_text;
  std::vector<BranchSpec> branches;
  std::vector<AuxiliarySpec> auxiliaries;
  /// When set, chooses the proof form from the indices instead of the branch.
  std::function<const ClosedForm*(const Indices&)> proof_for;
  std::vector<ClosedForm> proof_pool;

  const ClosedForm* proof(const Indices& idx, std::size_t branch) const;
};

enum class Fault { None, L01Sign };

/// Parses "none" or "l01-sign". Throws ConfigError.
Fault parse_fault(std::string_view text);

/// The catalog entry; with Fault::L01Sign the L01 closed forms carry one
/// flipped sign.
const LemmaSpec& lemma_spec(LemmaId id, Fault fault = Fault::None);

/// Parses closed-form notation against a slot list. Throws ParseError.
ClosedForm parse_closed_form(std::string_view text, const std::vector<SlotSpec>& slots);
Word parse_word(std::string_view text, const std::vector<SlotSpec>& slots);

struct CaseSkeleton {
  LemmaId lemma;
  Indices idx;
  std::size_t branch;

  auto operator<=>(const CaseSkeleton&) const = default;
};

/// Every admissible index tuple in lexicographic order, labelled with its
/// branch. Throws RankTooSmall if m is below the lemma's arity, naming the
/// index patterns that cannot occur, and IndexOutOfRange for n = 0.
std::vector<CaseSkeleton> enumerate_cases(int m, int n, LemmaId id);

/// Branch labels with no admissible tuple at this m, n.
std::vector<std::string> unreachable_branches(int m, int n, LemmaId id);

}  // namespace dser
