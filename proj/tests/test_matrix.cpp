#include <gtest/gtest.h>

#include <random>

#include "dser/laurent.hpp"
#include "dser/matrix.hpp"
#include "oracle.hpp"

using namespace dser;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Matrix, ProductByHand) {
  RationalField q;
  auto a = Matrix<RationalField>::from_ints(q, {{1, 2}, {3, 4}});
  auto b = Matrix<RationalField>::from_ints(q, {{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, Matrix<RationalField>::from_ints(q, {{2, 1}, {4, 3}}));
  EXPECT_EQ(b * a, Matrix<RationalField>::from_ints(q, {{3, 4}, {1, 2}}));
  auto c = Matrix<RationalField>::from_ints(q, {{1, 0, 2}});
  auto d = Matrix<RationalField>::from_ints(q, {{1}, {5}, {-1}});
  EXPECT_EQ(c * d, Matrix<RationalField>::from_ints(q, {{-1}}));
  EXPECT_EQ(transpose(c), Matrix<RationalField>::from_ints(q, {{1}, {0}, {2}}));
}

TEST(Matrix, RandomProductsAgainstNaive) {
  RationalField q;
  std::mt19937_64 g(3);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int t = 0; t < 30; ++t) {
    Matrix<RationalField> a(q, 4, 3), b(q, 3, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rational(u(g), 1 + (u(g) & 3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) b(i, j) = u(g);
    EXPECT_EQ(oracle::to_q(a * b), oracle::qmul(oracle::to_q(a), oracle::to_q(b)));
  }
}

TEST(Matrix, InverseOverQMatchesCofactors) {
  RationalField q;
  std::mt19937_64 g(11);
  std::uniform_int_distribution<int> u(-6, 6);
  int done = 0;
  while (done < 20) {
    Matrix<RationalField> a(q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = u(g);
    if (oracle::det(oracle::to_q(a)) == 0) {
      EXPECT_EQ(code_of([&] { mat_inv(a); }), ErrorCode::NotInvertible);
      continue;
    }
    EXPECT_EQ(oracle::to_q(mat_inv(a)), oracle::cofactor_inverse(oracle::to_q(a)));
    ++done;
  }
}

TEST(Matrix, InverseOverPrimeField) {
  PrimeField f(10007);
  auto a = Matrix<PrimeField>::from_ints(f, {{2, 1, 0}, {0, 3, 1}, {1, 0, 5}});
  auto inv = mat_inv(a);
  EXPECT_TRUE((a * inv).is_identity());
  EXPECT_TRUE((inv * a).is_identity());
  auto singular = Matrix<PrimeField>::from_ints(f, {{1, 2}, {2, 4}});
  EXPECT_EQ(code_of([&] { mat_inv(singular); }), ErrorCode::NotInvertible);
}

TEST(Matrix, MonomialInverseOverLocalizedPoly) {
  LocalizedPolyRing R({"d1", "d2"}, {"d1", "d2"});
  auto d1 = R.variable("d1"), d2 = R.variable("d2");
  Matrix<LocalizedPolyRing> g(R, 3, 3);
  g(0, 1) = d1 + d1;
  g(1, 0) = d2;
  g(2, 2) = R.one();
  EXPECT_TRUE(is_monomial_matrix(g));
  auto inv = mat_inv(g);
  EXPECT_TRUE((g * inv).is_identity());
  EXPECT_EQ(inv(1, 0), R.half(R.invert(d1)));

  LocalizedPolyRing S({"x"}, {});
  auto dense = Matrix<LocalizedPolyRing>::from_ints(S, {{1, 1}, {0, 1}});
  EXPECT_EQ(code_of([&] { mat_inv(dense); }), ErrorCode::NotInvertible);
}

TEST(Matrix, Errors) {
  RationalField q;
  Matrix<RationalField> a(q, 2, 3), b(q, 2, 3);
  EXPECT_EQ(code_of([&] { (void)(a * b); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { (void)a.at(2, 0); }), ErrorCode::OutOfBounds);
  EXPECT_EQ(code_of([&] { embed_block(3, 2, 1, a); }), ErrorCode::OutOfBounds);
  EXPECT_EQ(code_of([&] { (void)(a + Matrix<RationalField>(q, 3, 2)); }), ErrorCode::DimensionMismatch);
  PrimeField p(7), r(11);
  EXPECT_EQ(code_of([&] { (void)(Matrix<PrimeField>::identity(p, 2) * Matrix<PrimeField>::identity(r, 2)); }),
            ErrorCode::DescriptorMismatch);
}

TEST(Matrix, BlocksAndDump) {
  RationalField q;
  auto blk = Matrix<RationalField>::from_ints(q, {{1, 2}});
  auto big = embed_block(3, 1, 1, blk);
  EXPECT_EQ(dump(big), "0,0,0;0,1,2;0,0,0");
  EXPECT_EQ(extract_block(big, 1, 1, 1, 2), blk);
  EXPECT_EQ(big.nonzero_count(), 2u);
  PrimeField f(7);
  EXPECT_EQ(dump(Matrix<PrimeField>::from_ints(f, {{-1}})), "6 mod 7");
}
