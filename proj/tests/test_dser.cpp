#include <gtest/gtest.h>

#include "dser/dser.hpp"
#include "dser/laurent.hpp"
#include "dser/random.hpp"
#include "oracle.hpp"

using namespace dser;

namespace {

template <Ring R>
AmbientSpace<R> ambient(const R& ring, const std::vector<typename R::value_type>& d, std::size_t m) {
  return AmbientSpace<R>(diagonal_space(ring, d), m);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Elementary, SmallestAlphaExample) {
  RationalField q;
  auto amb = ambient(q, {Rational(1)}, 1);
  const Rational c(3, 2);
  auto g = elementary_from_vector(HomKind::Alpha, 1, 1, {c}, amb);
  // Coordinates (z, x, f); q(z) = z^2.
  auto want = Matrix<RationalField>::from_rows(q, {{1, 0, -c}, {2 * c, 1, -c * c}, {0, 0, 1}});
  EXPECT_EQ(g.matrix, want);
  EXPECT_TRUE((g.matrix * g.inverse).is_identity());
}

TEST(Elementary, MatchesCoordinateDisplayModP) {
  const std::int64_t p = 10007;
  PrimeField f(p);
  const std::size_t n = 3, m = 4;
  std::vector<std::int64_t> d{5, 17, 9999};
  auto amb = ambient(f, {f.from_int(5), f.from_int(17), f.from_int(9999)}, m);
  std::int64_t w = 1234;
  for (bool alpha : {true, false})
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        std::vector<ModInt> vec(n, f.zero());
        vec[j - 1] = f.from_int(w);
        auto g = elementary_from_vector(alpha ? HomKind::Alpha : HomKind::Beta, i, j, vec, amb);
        EXPECT_EQ(oracle::to_mod(g.matrix), oracle::display(alpha, n, m, i, j, w, d, p));
        EXPECT_EQ(oracle::to_mod(g.inverse), oracle::display(alpha, n, m, i, j, w, d, p, true));
        w = (w * 31 + 7) % p;
      }
}

TEST(Elementary, SymbolicAlphaTermByTerm) {
  LocalizedPolyRing R({"d1", "d2", "w"}, {"d1", "d2"});
  auto d2 = R.variable("d2"), w = R.variable("w");
  AmbientSpace<LocalizedPolyRing> amb(diagonal_space(R, {R.variable("d1"), d2}), 2);
  auto g = elementary_from_vector(HomKind::Alpha, 2, 2, {R.zero(), w}, amb);
  // E(z,x,f) = (z - f_2 w e_2, x + <w,z> x_2 - f_2 q(w) x_2, f), <w,z> = 2 d2 w z_2.
  Matrix<LocalizedPolyRing> want = Matrix<LocalizedPolyRing>::identity(R, 6);
  want(1, 5) = -w;
  want(3, 1) = R.from_int(2) * d2 * w;
  want(3, 5) = -(d2 * w * w);
  EXPECT_EQ(g.matrix, want);
  EXPECT_TRUE(is_orthogonal(amb.total(), g.matrix));
}

TEST(Elementary, StarCharacterizationOnBasis) {
  // <theta*(phi), z>_Q = phi(theta(z)) for phi in P* (alpha) or P** = P (beta).
  PrimeField f(10007);
  Rng rng(99);
  auto amb = ambient(f, {sample_unit(f, rng), sample_unit(f, rng)}, 3);
  for (HomKind kind : {HomKind::Alpha, HomKind::Beta}) {
    Matrix<PrimeField> w(f, 2, 3);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 3; ++b) w(a, b) = sample_element(f, rng);
    auto theta = hom_from_vectors(kind, w, amb);
    auto ts = star(theta, amb);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        std::vector<ModInt> zb(2, f.zero());
        zb[b] = f.one();
        // phi = a-th coordinate functional, so phi(theta(z_b)) = theta(a, b).
        std::vector<ModInt> col(2);
        for (std::size_t r = 0; r < 2; ++r) col[r] = ts(r, a);
        EXPECT_EQ(eval_bilinear(amb.q_space(), col, zb), theta.mat(a, b));
      }
  }
}

TEST(Elementary, ExtractAndErrors) {
  PrimeField f(101);
  auto amb = ambient(f, {f.one(), f.from_int(3)}, 2);
  Matrix<PrimeField> w(f, 2, 2);
  w(1, 0) = f.from_int(4);
  auto theta = hom_from_vectors(HomKind::Beta, w, amb);
  auto lifted = ambient_endo(theta, amb);
  EXPECT_EQ(extract_hom(lifted, HomKind::Beta, amb), theta);
  EXPECT_EQ(extract_hom(lifted, HomKind::Beta, amb, std::make_pair(1, 2)), theta);
  EXPECT_EQ(code_of([&] { extract_hom(lifted, HomKind::Alpha, amb); }), ErrorCode::NonComponentComposite);
  EXPECT_EQ(code_of([&] { extract_hom(lifted, HomKind::Beta, amb, std::make_pair(2, 2)); }),
            ErrorCode::NonComponentComposite);
  EXPECT_EQ(code_of([&] { elementary_from_vector(HomKind::Alpha, 1, 1, {f.one(), f.one()}, amb); }),
            ErrorCode::UnsupportedVector);
  EXPECT_EQ(code_of([&] { component_map(theta, 3, 1); }), ErrorCode::IndexOutOfRange);
  HomMap<PrimeField> wrong{HomKind::Alpha, Matrix<PrimeField>(f, 3, 2)};
  EXPECT_EQ(code_of([&] { elementary(wrong, amb); }), ErrorCode::DimensionMismatch);
}

TEST(Elementary, EndoAgreesWithHomConstruction) {
  PrimeField f(10007);
  Rng rng(5);
  auto amb = ambient(f, {sample_unit(f, rng), sample_unit(f, rng), sample_unit(f, rng)}, 2);
  Matrix<PrimeField> w(f, 3, 2);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 2; ++b) w(a, b) = sample_element(f, rng);
  for (HomKind kind : {HomKind::Alpha, HomKind::Beta}) {
    auto theta = hom_from_vectors(kind, w, amb);
    EXPECT_EQ(ambient_adjoint(ambient_endo(theta, amb), amb), ambient_star(theta, amb));
    auto a = elementary(theta, amb);
    auto b = elementary_endo(ambient_endo(theta, amb), amb);
    EXPECT_EQ(a.matrix, b.matrix);
    EXPECT_EQ(a.inverse, b.inverse);
  }
}
