#pragma once

// Quadratic spaces stored through the Gram matrix of B_q.

#include <optional>
#include <vector>

#include "dser/matrix.hpp"

namespace dser {

template <Ring R>
class QuadraticSpace {
 public:
  using value_type = typename R::value_type;

  /// Throws DimensionMismatch if gram is not symmetric and NotInvertible if
  /// it is singular over the backend.
  explicit QuadraticSpace(Matrix<R> gram) : gram_(std::move(gram)), gram_inv_(gram_) {
    if (!gram_.is_square()) raise(ErrorCode::DimensionMismatch, "Gram matrix must be square");
    if (!(gram_ == gram_.transpose())) raise(ErrorCode::DimensionMismatch, "Gram matrix is not symmetric");
    gram_inv_ = mat_inv(gram_);
    if (is_monomial_matrix(gram_)) {
      perm_.emplace(gram_.rows());
      for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < gram_.cols(); ++j)
          if (!ring().is_zero(gram_(i, j))) (*perm_)[i] = j;
    }
  }

  const R& ring() const { return gram_.ring(); }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix<R>& gram() const { return gram_; }
  const Matrix<R>& gram_inverse() const { return gram_inv_; }

  /// Adjoint of an endomorphism with respect to the form: G^-1 X^T G, the
  /// unique X' with <Xu, v> = <u, X'v>.
  Matrix<R> adjoint(const Matrix<R>& x) const {
    if (x.rows() != dim() || x.cols() != dim()) raise(ErrorCode::DimensionMismatch, "adjoint of " + x.shape());
    if (!perm_) return gram_inv_ * x.transpose() * gram_;
    // G has one nonzero per row at column perm(i), so
    // (G^-1 X^T G)(a,b) = Ginv(a,perm a) X(perm b, perm a) G(perm b, b).
    const auto& p = *perm_;
    Matrix<R> out(ring(), dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b) {
        const auto& v = x(p[b], p[a]);
        if (ring().is_zero(v)) continue;
        out(a, b) = gram_inv_(a, p[a]) * v * gram_(p[b], b);
      }
    return out;
  }

 private:
  Matrix<R> gram_;
  Matrix<R> gram_inv_;
  std::optional<std::vector<std::size_t>> perm_;
};

/// H(A^m) in the basis (x_1..x_m, f_1..f_m): Gram [[0, I], [I, 0]].
template <Ring R>
QuadraticSpace<R> hyperbolic_space(const R& ring, std::size_t m) {
  if (m == 0) raise(ErrorCode::InvalidRank, "hyperbolic space of rank 0");
  Matrix<R> g(ring, 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    g(i, m + i) = ring.one();
    g(m + i, i) = ring.one();
  }
  return QuadraticSpace<R>(std::move(g));
}

template <Ring R>
QuadraticSpace<R> orthogonal_sum(const QuadraticSpace<R>& a, const QuadraticSpace<R>& b) {
  if (!(a.ring() == b.ring())) raise(ErrorCode::DescriptorMismatch, "orthogonal sum over different rings");
  std::size_t n = a.dim() + b.dim();
  Matrix<R> g(a.ring(), n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.gram()(i, j);
  return QuadraticSpace<R>(std::move(g));
}

/// q = sum d_j z_j^2, so the Gram matrix is diag(2 d_j).
template <Ring R>
QuadraticSpace<R> diagonal_space(const R& ring, const std::vector<typename R::value_type>& d) {
  std::vector<typename R::value_type> twice;
  for (const auto& x : d) twice.push_back(x + x);
  return QuadraticSpace<R>(Matrix<R>::diagonal(ring, twice));
}

template <Ring R>
typename R::value_type eval_bilinear(const QuadraticSpace<R>& s, const std::vector<typename R::value_type>& u,
                                     const std::vector<typename R::value_type>& v) {
  if (u.size() != s.dim() || v.size() != s.dim()) raise(ErrorCode::DimensionMismatch, "vector length");
  auto gv = s.gram().apply(v);
  auto acc = s.ring().zero();
  for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * gv[i];
  return acc;
}

template <Ring R>
typename R::value_type eval_quadratic(const QuadraticSpace<R>& s, const std::vector<typename R::value_type>& u) {
  return s.ring().half(eval_bilinear(s, u, u));
}

/// sigma^T G sigma = G. Such a sigma is automatically invertible: taking
/// determinants gives det(sigma)^2 = 1.
template <Ring R>
bool is_orthogonal(const QuadraticSpace<R>& s, const Matrix<R>& sigma) {
  if (sigma.rows() != s.dim() || sigma.cols() != s.dim())
    raise(ErrorCode::DimensionMismatch, "orthogonality test of " + sigma.shape());
  return sigma.transpose() * s.gram() * sigma == s.gram();
}

}  // namespace dser
