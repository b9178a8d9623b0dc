#pragma once

// Group words over ambient matrices. [a, b] = a b a^-1 b^-1 throughout.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dser/dser.hpp"

namespace dser {

/// An invertible matrix with its inverse. The inverse may be left
/// uncomputed (see eval_expr); asking for it then falls back to mat_inv.
template <Ring R>
class GroupElement {
 public:
  static GroupElement identity(const R& ring, std::size_t dim) {
    auto id = Matrix<R>::identity(ring, dim);
    return GroupElement(id, id);
  }
  static GroupElement from_generator(const DserGenerator<R>& g) { return GroupElement(g.matrix, g.inverse); }
  /// Inverse by mat_inv; throws NotInvertible.
  static GroupElement from_matrix(Matrix<R> m) {
    auto inv = mat_inv(m);
    return GroupElement(std::move(m), std::move(inv));
  }
  /// Caller vouches that inverse * matrix = I.
  static GroupElement from_pair(Matrix<R> m, Matrix<R> inverse) { return GroupElement(std::move(m), std::move(inverse)); }
  static GroupElement without_inverse(Matrix<R> m) { return GroupElement(std::move(m), std::nullopt); }

  const Matrix<R>& matrix() const { return matrix_; }
  bool has_inverse() const { return inverse_.has_value(); }
  const Matrix<R>& inverse_matrix() const {
    if (!inverse_) inverse_ = mat_inv(matrix_);
    return *inverse_;
  }

  GroupElement inverse() const { return GroupElement(inverse_matrix(), matrix_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.has_inverse() && b.has_inverse())
      return GroupElement(a.matrix_ * b.matrix_, *b.inverse_ * *a.inverse_);
    return GroupElement(a.matrix_ * b.matrix_, std::nullopt);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix_ == b.matrix_; }

 private:
  GroupElement(Matrix<R> m, std::optional<Matrix<R>> inv) : matrix_(std::move(m)), inverse_(std::move(inv)) {}

  Matrix<R> matrix_;
  mutable std::optional<Matrix<R>> inverse_;
};

template <Ring R>
GroupElement<R> group_inverse(const GroupElement<R>& g) {
  return g.inverse();
}

/// a b a^-1 b^-1. With want_inverse the result also carries b a b^-1 a^-1.
template <Ring R>
GroupElement<R> commutator(const GroupElement<R>& a, const GroupElement<R>& b, bool want_inverse = true) {
  if (a.matrix().rows() != b.matrix().rows()) raise(ErrorCode::DimensionMismatch, "commutator of different sizes");
  const auto& ai = a.inverse_matrix();
  const auto& bi = b.inverse_matrix();
  Matrix<R> m = a.matrix() * b.matrix() * ai * bi;
  if (!want_inverse) return GroupElement<R>::without_inverse(std::move(m));
  return GroupElement<R>::from_pair(std::move(m), b.matrix() * a.matrix() * bi * ai);
}

template <Ring R>
struct CommExpr {
  enum class Op { Gen, Inv, Prod, Comm };

  Op op = Op::Gen;
  std::shared_ptr<const DserGenerator<R>> gen;
  std::vector<CommExpr> kids;

  static CommExpr leaf(std::shared_ptr<const DserGenerator<R>> g) { return {Op::Gen, std::move(g), {}}; }
  static CommExpr leaf(DserGenerator<R> g) { return leaf(std::make_shared<const DserGenerator<R>>(std::move(g))); }
  static CommExpr inv(CommExpr a) { return {Op::Inv, nullptr, {std::move(a)}}; }
  static CommExpr prod(CommExpr a, CommExpr b) { return {Op::Prod, nullptr, {std::move(a), std::move(b)}}; }
  static CommExpr comm(CommExpr a, CommExpr b) { return {Op::Comm, nullptr, {std::move(a), std::move(b)}}; }
};

/// Bottom-up evaluation by matrix multiplication. Inverses of subterms are
/// propagated exactly (generator inverses are E_{-theta}); the root's own
/// inverse is only formed when want_inverse is set.
template <Ring R>
GroupElement<R> eval_expr(const CommExpr<R>& e, bool want_inverse = true) {
  using Op = typename CommExpr<R>::Op;
  switch (e.op) {
    case Op::Gen:
      if (!e.gen) raise(ErrorCode::DimensionMismatch, "unresolved generator leaf");
      return GroupElement<R>::from_generator(*e.gen);
    case Op::Inv: {
      auto g = eval_expr(e.kids.at(0), true);
      return g.inverse();
    }
    case Op::Prod: {
      auto a = eval_expr(e.kids.at(0), want_inverse);
      auto b = eval_expr(e.kids.at(1), want_inverse);
      if (a.matrix().rows() != b.matrix().rows()) raise(ErrorCode::DimensionMismatch, "product of different sizes");
      return a * b;
    }
    case Op::Comm: {
      auto a = eval_expr(e.kids.at(0), true);
      auto b = eval_expr(e.kids.at(1), true);
      return commutator(a, b, want_inverse);
    }
  }
  raise(ErrorCode::DimensionMismatch, "bad expression node");
}

template <Ring R>
std::string to_string(const CommExpr<R>& e) {
  using Op = typename CommExpr<R>::Op;
  switch (e.op) {
    case Op::Gen: return e.gen && !e.gen->label.empty() ? e.gen->label : "g";
    case Op::Inv: return to_string(e.kids.at(0)) + "^-1";
    case Op::Prod: return to_string(e.kids.at(0)) + to_string(e.kids.at(1));
    case Op::Comm: return "[" + to_string(e.kids.at(0)) + "," + to_string(e.kids.at(1)) + "]";
  }
  return "?";
}

/// Number of generator letters in the fully expanded word.
template <Ring R>
std::size_t word_length(const CommExpr<R>& e) {
  using Op = typename CommExpr<R>::Op;
  switch (e.op) {
    case Op::Gen: return 1;
    case Op::Inv: return word_length(e.kids.at(0));
    case Op::Prod: return word_length(e.kids.at(0)) + word_length(e.kids.at(1));
    case Op::Comm: return 2 * (word_length(e.kids.at(0)) + word_length(e.kids.at(1)));
  }
  return 0;
}

}  // namespace dser
