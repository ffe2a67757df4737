#include "support.hpp"

#include "hankel_gamma/hankel.hpp"
#include "hankel_gamma/matrix.hpp"

#include <gtest/gtest.h>

using namespace hankel_gamma;
using hg_test::cofactor_det;
using hg_test::random_poly;
using hg_test::random_poly_matrix;
using hg_test::random_rational;
using hg_test::random_rational_matrix;

namespace {

const Poly X = Poly::x();

TEST(Determinant, TrivialCases) {
  EXPECT_EQ(det_bareiss(PolyMatrix::identity(4)), Poly(1));
  EXPECT_EQ(det_interpolation(PolyMatrix::identity(4)), Poly(1));
  EXPECT_EQ(det_bareiss(PolyMatrix(0)), Poly(1));
  PolyMatrix twin(3);
  for (std::size_t i = 0; i < 3; ++i) {
    twin(i, 0) = X + static_cast<long>(i);
    twin(i, 1) = X + static_cast<long>(i);
    twin(i, 2) = X * X - static_cast<long>(i);
  }
  EXPECT_TRUE(det_bareiss(twin).is_zero());
  EXPECT_TRUE(det_interpolation(twin).is_zero());
  EXPECT_THROW(det_bareiss(PolyMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, HankelOfCentralFamilyAtTwo) {
  const auto a = entry_sequence(kCentralFamily, 5);
  const PolyMatrix m = shifted_hankel_matrix<Poly>(a, 2, {});
  EXPECT_EQ(det_bareiss(m), -1 - X + 5 * X * X);
  EXPECT_EQ(det_interpolation(m), -1 - X + 5 * X * X);
}

TEST(Determinant, NeedsPivotingWhenLeadingEntryVanishes) {
  RationalMatrix m(3);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 2) = 5;
  EXPECT_EQ(det_rational(m), Rational(-5));
}

TEST(Determinant, BareissMatchesCofactorOracleOnRationalMatrices) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_rational_matrix(rng, 1 + static_cast<std::size_t>(i % 5));
    ASSERT_EQ(det_rational(m), cofactor_det(m));
    ASSERT_EQ(det_bareiss(m), cofactor_det(m));
  }
}

TEST(Determinant, EnginesAgreeOnRandomPolynomialMatrices) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_poly_matrix(rng, 1 + static_cast<std::size_t>(i % 5), 2);
    const Poly b = det_bareiss(m);
    ASSERT_EQ(b, det_interpolation(m));
    if (m.rows() <= 4) ASSERT_EQ(b, cofactor_det(m));
  }
}

TEST(Determinant, IntegerBareissIsExact) {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 100; ++i) {
    IntegerMatrix m(5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = d(rng);
    ASSERT_EQ(det_bareiss(m), cofactor_det(m));
  }
}

TEST(Determinant, MultilinearInEachColumn) {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 50; ++i) {
    const std::size_t size = 4;
    auto a = random_rational_matrix(rng, size), b = a;
    const std::size_t col = static_cast<std::size_t>(i) % size;
    RationalMatrix sum = a;
    const Rational s = random_rational(rng);
    for (std::size_t r = 0; r < size; ++r) {
      b(r, col) = random_rational(rng);
      sum(r, col) = s * a(r, col) + b(r, col);
    }
    ASSERT_EQ(det_rational(sum), s * det_rational(a) + det_rational(b));
  }
}

TEST(Determinant, ColumnSwapNegates) {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 50; ++i) {
    auto m = random_poly_matrix(rng, 4, 2);
    const Poly d = det_bareiss(m);
    m.swap_cols(0, 1 + static_cast<std::size_t>(i) % 3);
    ASSERT_EQ(det_bareiss(m), -d);
  }
}

TEST(Determinant, RowDegreeBound) {
  PolyMatrix m(2);
  m(0, 0) = X * X;
  m(0, 1) = 1;
  m(1, 0) = X;
  EXPECT_EQ(row_degree_bound(m), 3);
  EXPECT_EQ(row_degree_bound(PolyMatrix(2)), Poly::kZeroDegree);
}

}  // namespace
