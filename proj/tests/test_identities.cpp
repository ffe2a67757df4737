#include "hankel_gamma/identities.hpp"

#include <gtest/gtest.h>

using namespace hankel_gamma;

namespace {

const Poly X = Poly::x();

Poly H(long n, const Partition& l) { return shifted_hankel_det(kCentralFamily, n, l); }

void expect_all_zero(const std::vector<IdentityResidual>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.pass()) << r.name << " n=" << r.n << ": " << to_string(r.residual);
}

TEST(FirstIdentity, VanishesThroughTwenty) {
  const auto rs = verify_first_identity(20);
  ASSERT_EQ(rs.size(), 21u);
  expect_all_zero(rs);
}

TEST(SecondIdentity, VanishesThroughTwenty) {
  const auto rs = verify_second_identity(20);
  ASSERT_EQ(rs.size(), 21u);
  expect_all_zero(rs);
}

TEST(ThirdIdentity, WeightsAtZero) {
  EXPECT_EQ(ti_weight(0, 0), 10 + 15 * X + 10 * X * X);
  EXPECT_EQ(ti_weight(0, 1), -10 - 15 * X - 3 * X * X);
  EXPECT_EQ(ti_weight(0, 2), 2 + 3 * X);
  EXPECT_THROW(ti_weight(2, 5), IndexOutOfRange);
  EXPECT_THROW(ti_weight(2, -1), IndexOutOfRange);
}

TEST(ThirdIdentity, RowSumsVanish) {
  for (long n : {0L, 1L, 3L, 12L}) EXPECT_TRUE(verify_third_identity(n).pass()) << n;
}

TEST(ThirdIdentity, WeightsAlternateInSignAtZero) {
  // The weights are positive combinations times (-1)^(n-j) for x = 0.
  for (long n = 0; n <= 8; ++n)
    for (long j = 0; j + 1 <= n + 2; ++j)
      ASSERT_LT(sign(ti_weight(n, j).coeff(0)) * sign(ti_weight(n, j + 1).coeff(0)), 0) << n << "," << j;
}

TEST(KernelRelation, HoldsWithAlternatingSign) {
  EXPECT_TRUE(kernel_relation_residual(1, 0).is_zero());
  EXPECT_TRUE(kernel_relation_residual(3, 1).is_zero());
  EXPECT_TRUE(kernel_membership_check(5));
  EXPECT_THROW(kernel_relation_residual(3, 4), IndexOutOfRange);
}

TEST(KernelRelation, AllPlusSignsFailForOddK) {
  for (long n = 1; n <= 5; ++n)
    for (long k = 1; k <= n; k += 2) {
      const Poly plus = ti_weight(n, n + 2) * H(n, Partition::hook(2, k)) +
                        ti_weight(n, n + 1) * H(n, Partition::ones(k + 1)) + ti_weight(n, n - k) * H(n, {});
      EXPECT_FALSE(plus.is_zero()) << n << "," << k;
    }
}

TEST(LinearSystem, FiveEquationsVanish) {
  for (long n : {2L, 3L, 8L}) expect_all_zero(build_five_equations(n));
  EXPECT_THROW(build_five_equations(1), NTooSmall);
}

TEST(LinearSystem, DeterminantsSolveTheSystem) {
  // M u = b with u the actual determinants.
  for (long n = 2; n <= 6; ++n) {
    const auto sys = build_M(n);
    const std::array<Poly, 5> u{H(n, {3}), H(n, {2, 1}), H(n, {1, 1, 1}), H(n, {2}), H(n, {1, 1})};
    for (std::size_t r = 0; r < 5; ++r) {
      Poly lhs;
      for (std::size_t c = 0; c < 5; ++c) lhs += sys.M(r, c) * u[c];
      ASSERT_EQ(lhs, sys.b[r]) << "n=" << n << " row " << r;
    }
  }
}

TEST(LinearSystem, DeterminantProductForm) {
  const Poly expected = 12 * (1 + 2 * X) * (1 + 4 * X) * (2 + 5 * X) * (2 + 7 * X) * (2 + 7 * X);
  EXPECT_EQ(det_bareiss(formulas::matrix_M(2)), expected);
  for (long n = 2; n <= 8; ++n) EXPECT_TRUE(det_M_check(n).pass()) << n;
  for (long n = 2; n <= 8; ++n) EXPECT_TRUE(matrix_rows_check(n).pass()) << n;
}

TEST(LinearSystem, RowFourSparsity) {
  // Only the H_2 column of the fourth row is nonzero among the unknowns.
  const PolyMatrix m = formulas::matrix_M(4);
  for (std::size_t c : {0u, 1u, 2u, 4u}) EXPECT_TRUE(m(3, c).is_zero()) << c;
  EXPECT_FALSE(m(3, 3).is_zero());
}

TEST(Expansions, H2AtTwoByHand) {
  const long n = 2;
  const Poly residual = (2 + 3 * X + 2 * n * X) * H(n, {2}) +
                        (n + 1) * (2 * n + 5) * (2 * X * X + 2 * n * X + 3 * X + 2) * H(n, {}) -
                        (4 * X * n * n + 2 * X * X * n + 16 * X * n + 4 * n + 3 * X * X + 15 * X + 10) * H(n, {1});
  EXPECT_TRUE(residual.is_zero()) << to_string(residual);
}

TEST(Expansions, PrintedAndCramerAgree) {
  for (long n : {2L, 3L, 5L}) expect_all_zero(verify_expansions(n));
}

TEST(DerivativeSystem, ResidualsVanish) {
  for (long n : {2L, 4L}) expect_all_zero(verify_derivative_system(n));
  EXPECT_THROW(derivative_system(1), NTooSmall);
}

TEST(DerivativeSystem, QEqualsU) {
  for (long n = 2; n <= 6; ++n) {
    const auto c = derivative_system(n);
    EXPECT_EQ(c.Q, c.U);
  }
}

TEST(Ode, HoldsAndMatchesElimination) {
  for (long n : {0L, 1L, 3L, 10L}) expect_all_zero(verify_ode(n));
}

TEST(Ode, DetectsAWrongSolution) {
  const auto c = formulas::derivative_coefficients(3);
  const Poly h = H(3, {}) + 1;
  const Poly d = h.derivative();
  EXPECT_FALSE((c.S2 * d.derivative() + c.S1 * d + c.S0 * h).is_zero());
}

TEST(AllIdentities, ThroughEight) {
  const auto rs = verify_all_identities(8);
  EXPECT_GT(rs.size(), 150u);
  expect_all_zero(rs);
}

}  // namespace
