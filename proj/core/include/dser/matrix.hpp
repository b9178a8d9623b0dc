#pragma once

// Dense matrices over any backend satisfying Ring.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dser/errors.hpp"
#include "dser/ring.hpp"

namespace dser {

template <Ring R>
class Matrix {
 public:
  using value_type = typename R::value_type;

  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_rows(const R& ring, const std::vector<std::vector<value_type>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) raise(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Convenience for tests and examples: integer entries mapped into the ring.
  static Matrix from_ints(const R& ring, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<value_type>> v;
    for (const auto& r : rows) {
      v.emplace_back();
      for (long x : r) v.back().push_back(ring.from_int(x));
    }
    return from_rows(ring, v);
  }

  static Matrix diagonal(const R& ring, const std::vector<value_type>& d) {
    Matrix m(ring, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const value_type& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) raise(ErrorCode::OutOfBounds, "matrix index");
    return (*this)(i, j);
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!ring_.is_zero(x)) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? ring_.one() : ring_.zero()))) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += ring_.is_zero(x) ? 0 : 1;
    return n;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t t = 0; t < data_.size(); ++t)
      if (!ring_.is_zero(o.data_[t])) data_[t] = data_[t] + o.data_[t];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t t = 0; t < data_.size(); ++t)
      if (!ring_.is_zero(o.data_[t])) data_[t] = data_[t] - o.data_[t];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_)
      if (!a.ring_.is_zero(x)) x = -x;
    return a;
  }

  Matrix scaled(const value_type& c) const {
    Matrix out = *this;
    for (auto& x : out.data_)
      if (!ring_.is_zero(x)) x = c * x;
    return out;
  }

  /// Standard product; zero entries are skipped on both sides, which is
  /// where nearly all the time goes for the sparse generator matrices.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      raise(ErrorCode::DimensionMismatch, "product of " + a.shape() + " and " + b.shape());
    if (!(a.ring_ == b.ring_)) raise(ErrorCode::DescriptorMismatch, "matrices over different rings");
    Matrix c(a.ring_, a.rows_, b.cols_);
    const R& ring = a.ring_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      value_type* crow = &c.data_[i * c.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a.data_[i * a.cols_ + k];
        if (ring.is_zero(aik)) continue;
        const value_type* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (ring.is_zero(brow[j])) continue;
          crow[j] = crow[j] + aik * brow[j];
        }
      }
    }
    return c;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<value_type> apply(const std::vector<value_type>& v) const {
    if (v.size() != cols_) raise(ErrorCode::DimensionMismatch, "vector length");
    std::vector<value_type> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!ring_.is_zero((*this)(i, j)) && !ring_.is_zero(v[j])) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      raise(ErrorCode::DimensionMismatch, shape() + " vs " + o.shape());
    if (!(ring_ == o.ring_)) raise(ErrorCode::DescriptorMismatch, "matrices over different rings");
  }

  R ring_;
  std::size_t rows_, cols_;
  std::vector<value_type> data_;
};

template <Ring R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b;
}

template <Ring R>
Matrix<R> transpose(const Matrix<R>& a) {
  return a.transpose();
}

/// True when every row and every column holds exactly one nonzero entry.
template <Ring R>
bool is_monomial_matrix(const Matrix<R>& a) {
  if (!a.is_square()) return false;
  std::vector<int> col_hits(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.ring().is_zero(a(i, j))) {
        ++row_hits;
        ++col_hits[j];
      }
    if (row_hits != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

/// Exact inverse. Monomial matrices (in particular diagonal ones) are
/// inverted entrywise over any backend; other matrices need a field and go
/// through Gauss-Jordan elimination.
template <Ring R>
Matrix<R> mat_inv(const Matrix<R>& a) {
  if (!a.is_square()) raise(ErrorCode::DimensionMismatch, "inverse of non-square " + a.shape());
  const R& ring = a.ring();
  const std::size_t n = a.rows();
  if (is_monomial_matrix(a)) {
    Matrix<R> inv(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!ring.is_zero(a(i, j))) {
          try {
            inv(j, i) = ring.invert(a(i, j));
          } catch (const Error& e) {
            raise(ErrorCode::NotInvertible, std::string("entry is not a unit: ") + e.what());
          }
        }
    return inv;
  }
  if constexpr (!R::is_field) {
    raise(ErrorCode::NotInvertible, "general inversion is only available over fields");
  } else {
    Matrix<R> m = a;
    Matrix<R> inv = Matrix<R>::identity(ring, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && ring.is_zero(m(piv, c))) ++piv;
      if (piv == n) raise(ErrorCode::NotInvertible, "singular matrix");
      if (piv != c)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(piv, j), m(c, j));
          std::swap(inv(piv, j), inv(c, j));
        }
      auto s = ring.invert(m(c, c));
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) = m(c, j) * s;
        inv(c, j) = inv(c, j) * s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || ring.is_zero(m(r, c))) continue;
        auto f = m(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(r, j) = m(r, j) - f * m(c, j);
          inv(r, j) = inv(r, j) - f * inv(c, j);
        }
      }
    }
    return inv;
  }
}

/// Places block into a zero target_dim x target_dim matrix.
template <Ring R>
Matrix<R> embed_block(std::size_t target_dim, std::size_t row_offset, std::size_t col_offset, const Matrix<R>& block) {
  if (row_offset + block.rows() > target_dim || col_offset + block.cols() > target_dim)
    raise(ErrorCode::OutOfBounds, "block " + block.shape() + " at (" + std::to_string(row_offset) + "," +
                                      std::to_string(col_offset) + ") exceeds dimension " + std::to_string(target_dim));
  Matrix<R> out(block.ring(), target_dim, target_dim);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) out(row_offset + i, col_offset + j) = block(i, j);
  return out;
}

template <Ring R>
Matrix<R> extract_block(const Matrix<R>& a, std::size_t row_offset, std::size_t col_offset, std::size_t rows,
                        std::size_t cols) {
  if (row_offset + rows > a.rows() || col_offset + cols > a.cols())
    raise(ErrorCode::OutOfBounds, "extract " + std::to_string(rows) + "x" + std::to_string(cols) + " from " + a.shape());
  Matrix<R> out(a.ring(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(row_offset + i, col_offset + j);
  return out;
}

/// Text dump: rows separated by ";", entries by ",".
template <Ring R>
std::string dump(const Matrix<R>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += a.ring().to_string(a(i, j));
    }
  }
  return out;
}

template <Ring R>
std::string dump(const R& ring, const std::vector<typename R::value_type>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += ring.to_string(v[i]);
  }
  return out;
}

}  // namespace dser
