#pragma once

// Elementary transformations E_theta on M = Q (+) H(P), P = A^m free.
//
// Coordinates are (z_1..z_n, x_1..x_m, f_1..f_m). A map theta : Q -> P
// (alpha type) or Q -> P* (beta type) is an m x n matrix; its dual
// theta* = d_B^-1 theta^t is n x m. The double-dual identification
// P -> P** is the identity in these bases.
//
// Public index arguments are 1-based, matching the (i, j) labels of the
// component maps theta_ij.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dser/quadform.hpp"

namespace dser {

enum class HomKind { Alpha, Beta };

inline const char* to_string(HomKind k) { return k == HomKind::Alpha ? "alpha" : "beta"; }

template <Ring R>
struct HomMap {
  HomKind kind;
  Matrix<R> mat;  // m x n

  friend bool operator==(const HomMap& a, const HomMap& b) { return a.kind == b.kind && a.mat == b.mat; }
};

/// The summands of M, used to address blocks of ambient endomorphisms.
enum class Summand { Q, P, PDual };

template <Ring R>
class AmbientSpace {
 public:
  AmbientSpace(QuadraticSpace<R> q, std::size_t m)
      : q_(std::move(q)), m_(m), total_(orthogonal_sum(q_, hyperbolic_space(q_.ring(), m))) {}

  const R& ring() const { return q_.ring(); }
  std::size_t n() const { return q_.dim(); }
  std::size_t m() const { return m_; }
  std::size_t dim() const { return total_.dim(); }
  const QuadraticSpace<R>& q_space() const { return q_; }
  const QuadraticSpace<R>& total() const { return total_; }

  std::size_t offset(Summand s) const {
    switch (s) {
      case Summand::Q: return 0;
      case Summand::P: return n();
      case Summand::PDual: return n() + m_;
    }
    return 0;
  }
  std::size_t size(Summand s) const { return s == Summand::Q ? n() : m_; }

  Matrix<R> identity() const { return Matrix<R>::identity(ring(), dim()); }

 private:
  QuadraticSpace<R> q_;
  std::size_t m_;
  QuadraticSpace<R> total_;
};

inline Summand target_of(HomKind k) { return k == HomKind::Alpha ? Summand::P : Summand::PDual; }
/// theta* of an alpha-type map reads the f coordinates; of a beta-type map, the x coordinates.
inline Summand dual_source_of(HomKind k) { return k == HomKind::Alpha ? Summand::PDual : Summand::P; }

template <Ring R>
void check_compatible(const HomMap<R>& theta, const AmbientSpace<R>& amb) {
  if (theta.mat.rows() != amb.m() || theta.mat.cols() != amb.n())
    raise(ErrorCode::DimensionMismatch,
          "map " + theta.mat.shape() + " on ambient with m=" + std::to_string(amb.m()) + ", n=" + std::to_string(amb.n()));
  if (!(theta.mat.ring() == amb.ring())) raise(ErrorCode::DescriptorMismatch, "map and ambient over different rings");
}

template <Ring R>
HomMap<R> component_map(const HomMap<R>& theta, std::size_t i, std::size_t j) {
  if (i < 1 || i > theta.mat.rows() || j < 1 || j > theta.mat.cols())
    raise(ErrorCode::IndexOutOfRange, "component (" + std::to_string(i) + "," + std::to_string(j) + ") of " +
                                          theta.mat.shape() + " map");
  HomMap<R> out{theta.kind, Matrix<R>(theta.mat.ring(), theta.mat.rows(), theta.mat.cols())};
  out.mat(i - 1, j - 1) = theta.mat(i - 1, j - 1);
  return out;
}

template <Ring R>
HomMap<R> negate(const HomMap<R>& theta) {
  return {theta.kind, -theta.mat};
}

template <Ring R>
HomMap<R> scale(const HomMap<R>& theta, const typename R::value_type& c) {
  return {theta.kind, theta.mat.scaled(c)};
}

/// theta* = G_Q^-1 theta^T, an n x m matrix.
template <Ring R>
Matrix<R> star(const HomMap<R>& theta, const AmbientSpace<R>& amb) {
  check_compatible(theta, amb);
  return amb.q_space().gram_inverse() * theta.mat.transpose();
}

/// theta with star vectors given by the columns of w (n x m): theta = w^T G_Q.
template <Ring R>
HomMap<R> hom_from_vectors(HomKind kind, const Matrix<R>& w, const AmbientSpace<R>& amb) {
  if (w.rows() != amb.n() || w.cols() != amb.m()) raise(ErrorCode::DimensionMismatch, "star vectors " + w.shape());
  return {kind, w.transpose() * amb.q_space().gram()};
}

/// An endomorphism of M supported on the block from -> to.
template <Ring R>
struct BlockSpec {
  Summand to;
  Summand from;
  Matrix<R> block;
};

template <Ring R>
Matrix<R> ambient_endo(const BlockSpec<R>& spec, const AmbientSpace<R>& amb) {
  if (spec.block.rows() != amb.size(spec.to) || spec.block.cols() != amb.size(spec.from))
    raise(ErrorCode::DimensionMismatch, "block " + spec.block.shape() + " does not fit its summands");
  return embed_block(amb.dim(), amb.offset(spec.to), amb.offset(spec.from), spec.block);
}

template <Ring R>
Matrix<R> ambient_endo(const HomMap<R>& theta, const AmbientSpace<R>& amb) {
  check_compatible(theta, amb);
  return ambient_endo(BlockSpec<R>{target_of(theta.kind), Summand::Q, theta.mat}, amb);
}

/// theta* lifted to M.
template <Ring R>
Matrix<R> ambient_star(const HomMap<R>& theta, const AmbientSpace<R>& amb) {
  return ambient_endo(BlockSpec<R>{Summand::Q, dual_source_of(theta.kind), star(theta, amb)}, amb);
}

template <Ring R>
Matrix<R> ambient_adjoint(const Matrix<R>& x, const AmbientSpace<R>& amb) {
  return amb.total().adjoint(x);
}

/// Reads an ambient endomorphism back as a Hom map of the given kind.
/// Raises NonComponentComposite if x has support outside the Q -> P (or
/// Q -> P*) block, or, when a component is expected, outside entry (i, j).
template <Ring R>
HomMap<R> extract_hom(const Matrix<R>& x, HomKind kind, const AmbientSpace<R>& amb,
                      std::optional<std::pair<std::size_t, std::size_t>> component = std::nullopt) {
  if (x.rows() != amb.dim() || x.cols() != amb.dim()) raise(ErrorCode::DimensionMismatch, "extract from " + x.shape());
  const std::size_t row0 = amb.offset(target_of(kind));
  HomMap<R> out{kind, Matrix<R>(amb.ring(), amb.m(), amb.n())};
  for (std::size_t r = 0; r < amb.dim(); ++r)
    for (std::size_t c = 0; c < amb.dim(); ++c) {
      if (amb.ring().is_zero(x(r, c))) continue;
      bool in_block = r >= row0 && r < row0 + amb.m() && c < amb.n();
      if (in_block && component)
        in_block = r - row0 + 1 == component->first && c + 1 == component->second;
      if (!in_block)
        raise(ErrorCode::NonComponentComposite, std::string("composite has support outside the expected ") +
                                                    to_string(kind) + " block at ambient entry (" + std::to_string(r) +
                                                    "," + std::to_string(c) + ")");
      out.mat(r - row0, c) = x(r, c);
    }
  return out;
}

/// One elementary transformation with its inverse.
template <Ring R>
struct DserGenerator {
  std::optional<HomMap<R>> theta;  // absent for composite endomorphisms
  Matrix<R> matrix;
  Matrix<R> inverse;
  std::optional<std::pair<std::size_t, std::size_t>> component;
  std::string label;
};

/// E_theta = I + theta - theta* - 1/2 theta theta*; inverse E_{-theta}.
template <Ring R>
DserGenerator<R> elementary(const HomMap<R>& theta, const AmbientSpace<R>& amb, std::string label = {}) {
  Matrix<R> t = ambient_endo(theta, amb);
  Matrix<R> ts = ambient_star(theta, amb);
  Matrix<R> half_tts = (t * ts).scaled(amb.ring().half(amb.ring().one()));
  Matrix<R> id = amb.identity();
  Matrix<R> e = id + t - ts - half_tts;
  Matrix<R> e_inv = id - t + ts - half_tts;
  return {theta, std::move(e), std::move(e_inv), std::nullopt, std::move(label)};
}

template <Ring R>
DserGenerator<R> elementary_component(const HomMap<R>& theta, std::size_t i, std::size_t j, const AmbientSpace<R>& amb,
                                      std::string label = {}) {
  auto g = elementary(component_map(theta, i, j), amb, std::move(label));
  g.component = std::make_pair(i, j);
  return g;
}

/// The generator with data (i, j, w): theta_ij whose star vector at row i is w,
/// where w must be supported on coordinate j of Q.
template <Ring R>
DserGenerator<R> elementary_from_vector(HomKind kind, std::size_t i, std::size_t j,
                                        const std::vector<typename R::value_type>& w, const AmbientSpace<R>& amb) {
  if (i < 1 || i > amb.m() || j < 1 || j > amb.n()) raise(ErrorCode::IndexOutOfRange, "generator index");
  if (w.size() != amb.n()) raise(ErrorCode::DimensionMismatch, "vector length");
  for (std::size_t c = 0; c < w.size(); ++c)
    if (c != j - 1 && !amb.ring().is_zero(w[c]))
      raise(ErrorCode::UnsupportedVector, "vector has support outside coordinate " + std::to_string(j));
  Matrix<R> wm(amb.ring(), amb.n(), amb.m());
  for (std::size_t c = 0; c < w.size(); ++c) wm(c, i - 1) = w[c];
  auto g = elementary(hom_from_vectors(kind, wm, amb), amb);
  g.component = std::make_pair(i, j);
  return g;
}

/// E_phi = I + phi - phi' - 1/2 phi phi' for an arbitrary endomorphism phi,
/// where phi' is the ambient adjoint. On Hom maps this is E_theta. The
/// inverse is E_{-phi} when that works, otherwise computed.
template <Ring R>
DserGenerator<R> elementary_endo(const Matrix<R>& phi, const AmbientSpace<R>& amb, std::string label = {}) {
  Matrix<R> pa = ambient_adjoint(phi, amb);
  Matrix<R> half_ppa = (phi * pa).scaled(amb.ring().half(amb.ring().one()));
  Matrix<R> id = amb.identity();
  Matrix<R> e = id + phi - pa - half_ppa;
  Matrix<R> inv = id - phi + pa - half_ppa;
  if (!(e * inv).is_identity()) {
    inv = ambient_adjoint(e, amb);
    if (!(e * inv).is_identity()) inv = mat_inv(e);
  }
  return {std::nullopt, std::move(e), std::move(inv), std::nullopt, std::move(label)};
}

}  // namespace dser
