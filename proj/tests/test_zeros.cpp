#include "hankel_gamma/zeros.hpp"

#include <gtest/gtest.h>

using namespace hankel_gamma;

namespace {

const Poly X = Poly::x();

TEST(Sturm, TextbookChain) {
  const auto chain = sturm_chain(X * X - 1);
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[0], X * X - 1);
  EXPECT_EQ(chain[1], 2 * X);
  EXPECT_EQ(chain[2], Poly(1));
  EXPECT_EQ(sturm_chain(Poly(5)).size(), 1u);
  EXPECT_THROW(sturm_chain(Poly()), std::invalid_argument);
}

TEST(Sturm, Counts) {
  EXPECT_EQ(count_roots(X * X - 1, Interval(Rational(-2), Rational(2))), 2);
  EXPECT_EQ(count_roots(X * X + 1, Interval(Rational(-10), Rational(10))), 0);
  EXPECT_EQ(count_roots(hankel_det(kCentralFamily, 3), open_unit_range()), 3);
  EXPECT_EQ(count_roots(hankel_det(kCentralFamily, 5), open_unit_range()), 5);
  EXPECT_THROW(count_roots(X * X - 1, Interval(Rational(1), Rational(3))), EndpointIsRoot);
  // A repeated root counts once.
  EXPECT_EQ(count_roots((X - 1) * (X - 1) * (X + 1), Interval(Rational(-5), Rational(5))), 2);
}

TEST(Sturm, AllRootsOfEveryDetLieInsideOpenRange) {
  const Interval wide(Rational(-1000000), Rational(1000000));
  for (long n = 1; n <= 12; ++n) {
    const Poly h = hankel_det(kCentralFamily, n);
    ASSERT_EQ(count_roots(h, wide), n);
    ASSERT_EQ(count_roots(h, open_unit_range()), n);
  }
}

TEST(Isolation, ExactRootOfDegreeOne) {
  const auto r = isolate_roots(1, ratio(1, 1000000));
  ASSERT_EQ(r.isolating_intervals.size(), 1u);
  const auto& iv = r.isolating_intervals[0];
  EXPECT_LT(iv.lo, ratio(-1, 3));
  EXPECT_GT(iv.hi, ratio(-1, 3));
  EXPECT_LE(iv.width(), ratio(1, 1000000));
  EXPECT_EQ(round_decimal(iv.midpoint(), 3), "-0.333");
}

TEST(Isolation, IntervalsAreDisjointSortedAndNarrow) {
  const Rational w = ratio(1, 1000000);
  for (long n = 1; n <= 10; ++n) {
    const auto r = isolate_roots(n, w);
    const Poly h = hankel_det(kCentralFamily, n);
    ASSERT_EQ(static_cast<long>(r.isolating_intervals.size()), n);
    for (std::size_t k = 0; k < r.isolating_intervals.size(); ++k) {
      const auto& iv = r.isolating_intervals[k];
      ASSERT_LE(iv.width(), w);
      ASSERT_EQ(count_roots(h, iv), 1);
      if (k > 0) ASSERT_LE(r.isolating_intervals[k - 1].hi, iv.lo);
    }
  }
}

TEST(Isolation, RejectsBadArguments) {
  EXPECT_THROW(isolate_roots(0, ratio(1, 10)), std::invalid_argument);
  EXPECT_THROW(isolate(X, open_unit_range(), Rational(0)), std::invalid_argument);
  EXPECT_THROW(Interval(Rational(1), Rational(1)), std::invalid_argument);
}

TEST(Decimal, RoundAndTruncate) {
  EXPECT_EQ(round_decimal(ratio(-1, 3), 3), "-0.333");
  EXPECT_EQ(round_decimal(ratio(2, 3), 3), "0.667");
  EXPECT_EQ(round_decimal(ratio(-1, 2000), 3), "-0.001");
  EXPECT_EQ(round_decimal(ratio(-1, 3000), 3), "0.000");
  EXPECT_EQ(round_decimal(Rational(5), 0), "5");
  EXPECT_EQ(truncate_decimal(ratio(2, 3), 3), "0.666");
  EXPECT_EQ(truncate_decimal(ratio(-1999, 1000), 2), "-1.99");
  EXPECT_EQ(truncate_decimal(ratio(1, 20), 1), "0.0");
}

TEST(Decimal, CertifiedTruncationPinsDigits) {
  const Poly p = 1000 * X - 1;  // root exactly on the grid
  EXPECT_EQ(certified_truncation(p, Interval(ratio(0, 1), ratio(1, 100)), 3), "0.001");
  const Poly q = X * X - 2;
  EXPECT_EQ(certified_truncation(q, Interval(Rational(1), Rational(2)), 6), "1.414213");
}

TEST(Interlacing, CertifiedThroughTen) {
  EXPECT_TRUE(verify_interlacing(3));
  EXPECT_TRUE(verify_interlacing(10));
  EXPECT_THROW(verify_interlacing(1), std::invalid_argument);
}

TEST(Interlacing, SharedRootIsRejected) {
  const Poly outer = (X - ratio(1, 2)) * (X + ratio(1, 2));
  const Poly inner = X - ratio(1, 2);
  EXPECT_FALSE(strictly_interlace(outer, inner, open_unit_range()));
  EXPECT_TRUE(strictly_interlace(outer, X, open_unit_range()));
  EXPECT_FALSE(strictly_interlace(outer, X - 1, open_unit_range()));
}

TEST(Interlacing, OppositeSignsOfNeighboursAtRoots) {
  for (long n = 0; n <= 8; ++n) EXPECT_TRUE(recursion_sign_check(n)) << n;
}

}  // namespace
