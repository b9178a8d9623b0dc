#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic: matrices are plain nested vectors over int64 residues
// or mpq_class, generators come from the coordinate formulas of E and E^-1,
// and inverses from Gauss-Jordan or cofactors.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "dser/matrix.hpp"

namespace oracle {

using ModMat = std::vector<std::vector<std::int64_t>>;
using QMat = std::vector<std::vector<mpq_class>>;

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = md(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Fermat inverse, independent of the library's extended Euclid.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

inline ModMat identity(std::size_t n) {
  ModMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline ModMat mul(const ModMat& a, const ModMat& b, std::int64_t p) {
  ModMat c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

/// Coordinate display of E_{theta_ij} (or its inverse) on (z, x, f) for
/// q = sum d_j z_j^2, where the star vector is w e_j:
///   alpha: z -= f_i w e_j,  x_i += 2 d_j w z_j -/+ ... - d_j w^2 f_i
///   beta:  z -= x_i w e_j,  f_i += 2 d_j w z_j - d_j w^2 x_i
/// The inverse flips the first two signs and keeps the quadratic one.
inline ModMat display(bool alpha, std::size_t n, std::size_t m, std::size_t i, std::size_t j, std::int64_t w,
                      const std::vector<std::int64_t>& d, std::int64_t p, bool inverse = false) {
  ModMat e = identity(n + 2 * m);
  const std::size_t zj = j - 1;
  const std::size_t xi = n + i - 1, fi = n + m + i - 1;
  const std::size_t out = alpha ? xi : fi;  // coordinate that gains the z term
  const std::size_t in = alpha ? fi : xi;   // coordinate read by the dual
  const std::int64_t s = inverse ? -1 : 1;
  e[zj][in] = md(-s * w, p);
  e[out][zj] = md(s * 2 * d[zj] % p * w, p);
  e[out][in] = md(-d[zj] * (w * w % p), p);
  return e;
}

inline ModMat commutator(const ModMat& a, const ModMat& a_inv, const ModMat& b, const ModMat& b_inv,
                         std::int64_t p) {
  return mul(mul(mul(a, b, p), a_inv, p), b_inv, p);
}

template <class M>
ModMat to_mod(const M& x) {
  ModMat out(x.rows(), std::vector<std::int64_t>(x.cols()));
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out[r][c] = x(r, c).value;
  return out;
}

// -- rationals ---------------------------------------------------------------

inline QMat qmul(const QMat& a, const QMat& b) {
  QMat c(a.size(), std::vector<mpq_class>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Laplace expansion along the first row.
inline mpq_class det(const QMat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  mpq_class acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    QMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    mpq_class term = a[0][c] * det(minor);
    acc += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return acc;
}

/// Adjugate / determinant.
inline QMat cofactor_inverse(const QMat& a) {
  const std::size_t n = a.size();
  mpq_class d = det(a);
  QMat inv(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      QMat minor;
      for (std::size_t rr = 0; rr < n; ++rr) {
        if (rr == r) continue;
        std::vector<mpq_class> row;
        for (std::size_t cc = 0; cc < n; ++cc)
          if (cc != c) row.push_back(a[rr][cc]);
        minor.push_back(row);
      }
      mpq_class cof = det(minor);
      if ((r + c) % 2) cof = -cof;
      inv[c][r] = cof / d;
    }
  return inv;
}

template <class M>
QMat to_q(const M& x) {
  QMat out(x.rows(), std::vector<mpq_class>(x.cols()));
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out[r][c] = x(r, c);
  return out;
}

}  // namespace oracle
