#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vpart/error.hpp"
#include "vpart/frobenius.hpp"
#include "vpart/oracle.hpp"
#include "vpart/quasipoly.hpp"

namespace vpart {
namespace {

using test::q;

TEST(FrobeniusPair, Examples) {
  EXPECT_EQ(frobenius_pair(3, 5), 7);
  EXPECT_EQ(frobenius_pair(1, 9), -1);
  EXPECT_EQ(frobenius_pair(2, 3), 1);
  EXPECT_THROW(frobenius_pair(4, 6), Error);
}

TEST(FrobeniusPair, LargestUnrepresentableByPopoviciu) {
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      std::int64_t largest = -1;
      for (std::int64_t n = 0; n <= a * b; ++n) {
        if (popoviciu_pair(a, b, n) == 0) largest = n;
      }
      EXPECT_EQ(frobenius_pair(a, b), largest) << a << " " << b;
    }
  }
}

TEST(FrobeniusBound, Examples) {
  EXPECT_EQ(frobenius_bound(test::matrix_m0p(), {1, 1}), 2);
  EXPECT_EQ(frobenius_bound(test::matrix_m0(), {3, 1}), 0);
  auto code = [](const ColumnMatrix& m, Vec2 n) {
    try {
      frobenius_bound(m, n);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidInput;
  };
  // on the first ray the chamber-1 form det(c1, n) vanishes
  EXPECT_EQ(code(test::matrix_m0p(), {3, 0}), Errc::DegenerateDirection);
  EXPECT_EQ(code(test::matrix_m0p(), {-1, 1}), Errc::DegenerateDirection);
  EXPECT_EQ(code(build_matrix({{1, 0}, {1, 2}, {1, 4}}), {1, 1}), Errc::NotPairwiseCoprime);
}

TEST(FrobeniusExact, Examples) {
  FrobeniusResult r = frobenius_exact(test::matrix_m0p(), {1, 1});
  ASSERT_TRUE(r.bound);
  EXPECT_EQ(*r.bound, 2);
  EXPECT_EQ(r.exact, 1);
  ASSERT_TRUE(r.witness);
  for (std::int64_t N = 2; N <= 7; ++N) EXPECT_GT(brute_count(test::matrix_m0p(), {N, N}).count, 0u);

  FrobeniusResult all = frobenius_exact(test::matrix_m0(), {3, 1});
  EXPECT_EQ(*all.bound, 0);
  EXPECT_EQ(all.exact, 0);
  EXPECT_FALSE(all.witness);
}

TEST(FrobeniusExact, HorizonAndPreconditions) {
  // every multiple of (1, 1) needs an even first coordinate
  ColumnMatrix even = build_matrix({{2, 0}, {2, 2}, {0, 2}});
  try {
    frobenius_exact(even, {1, 1}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HorizonExceeded);
  }
  EXPECT_THROW(frobenius_exact(test::matrix_m0p(), {0, 0}), Error);
  EXPECT_THROW(frobenius_exact(test::matrix_m0p(), {-1, 1}), Error);
}

TEST(FrobeniusExact, OneRowSearchMatchesPairFormula) {
  // columns (a, 0) and (b, 0) plus (0, 1); direction (1, 0) reduces to a x + b y = N
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      std::vector<Vec2> cols{{a, 0}, {b, 0}, {0, 1}};
      FrobeniusResult r = frobenius_exact(build_matrix(cols), {1, 0});
      EXPECT_EQ(std::max<std::int64_t>(r.exact, 0), std::max<std::int64_t>(frobenius_pair(a, b), 0)) << a << " " << b;
    }
  }
}

TEST(FrobeniusProperties, ExactBelowBoundAndSolvableAfter) {
  std::mt19937_64 rng(91);
  int checked = 0;
  while (checked < 40) {
    ColumnMatrix m = test::random_one_prime(rng, 3);
    std::int64_t y12 = m.minor(0, 1), y13 = m.minor(0, 2), y23 = m.minor(1, 2);
    if (std::gcd(y12, y13) != 1 || std::gcd(y12, y23) != 1 || std::gcd(y13, y23) != 1) continue;
    Vec2 n = test::random_cone_point(rng, m, 2);
    BigRational bound;
    try {
      bound = frobenius_bound(m, n);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::DegenerateDirection);
      continue;
    }
    FrobeniusResult r = frobenius_exact(m, n);
    if (r.witness) EXPECT_LT(BigRational(static_cast<long>(r.exact)), bound);
    std::int64_t ceiling = -floor(-bound).get_si();
    for (std::int64_t N = r.exact + 1; N <= ceiling + 5; ++N) EXPECT_GT(brute_count(m, N * n).count, 0u);
    ++checked;
  }
}

TEST(FrobeniusProperties, ScalingSanityBand) {
  std::mt19937_64 rng(92);
  int checked = 0;
  while (checked < 20) {
    ColumnMatrix m = test::random_one_prime(rng, 3);
    Vec2 n = test::random_cone_point(rng, m, 2);
    if (n == Vec2{}) continue;
    FrobeniusResult base = frobenius_exact(m, n);
    for (std::int64_t lambda : {2, 3}) {
      FrobeniusResult scaled = frobenius_exact(m, lambda * n);
      EXPECT_LE(scaled.exact * lambda, base.exact + lambda);
      // direct oracle statement behind the band: N*lambda*n is the (N*lambda)-th multiple of n
      if (scaled.witness) EXPECT_EQ(brute_count(m, (*scaled.witness * lambda) * n).count, 0u);
    }
    ++checked;
  }
}

}  // namespace
}  // namespace vpart
