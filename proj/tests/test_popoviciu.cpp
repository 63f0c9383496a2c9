#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vpart/error.hpp"
#include "vpart/oracle.hpp"
#include "vpart/quasipoly.hpp"

namespace vpart {
namespace {

std::uint64_t enumerate_pair(std::int64_t a, std::int64_t b, std::int64_t n) {
  std::uint64_t count = 0;
  for (std::int64_t x = 0; a * x <= n; ++x) {
    if ((n - a * x) % b == 0) ++count;
  }
  return count;
}

TEST(PopoviciuPair, Examples) {
  EXPECT_EQ(popoviciu_pair(3, 5, 10), 1);
  EXPECT_EQ(popoviciu_pair(3, 5, 7), 0);
  EXPECT_EQ(popoviciu_pair(4, 9, 0), 1);
  EXPECT_EQ(popoviciu_pair(1, 1, 6), 7);
  try {
    popoviciu_pair(4, 6, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCoprime);
  }
}

TEST(PopoviciuPair, RandomTriplesMatchEnumeration) {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 100) {
    std::int64_t a = test::uniform(rng, 1, 40), b = test::uniform(rng, 1, 40), n = test::uniform(rng, 0, 2000);
    if (std::gcd(a, b) != 1) continue;
    EXPECT_EQ(popoviciu_pair(a, b, n), enumerate_pair(a, b, n)) << a << " " << b << " " << n;
    ++checked;
  }
}

TEST(Popoviciu2x3, Examples) {
  EXPECT_EQ(popoviciu_2x3(test::matrix_m0(), {3, 1}), 1);
  EXPECT_EQ(popoviciu_2x3(test::matrix_m0p(), {1, 1}), 0);
  EXPECT_EQ(popoviciu_2x3(test::matrix_m0p(), {2, 2}), 1);
  EXPECT_EQ(popoviciu_2x3(test::matrix_m0p(), {-1, 2}), 0);
}

// Minors 2, 4, 1: 1-prime but not pairwise coprime, so the general (f, g) path runs.
TEST(Popoviciu2x3, GeneralCombinationPath) {
  ColumnMatrix m = build_matrix({{2, 0}, {0, 1}, {-1, 2}});
  ASSERT_TRUE(m.is_one_prime());
  for (std::int64_t x = -15; x <= 15; ++x) {
    for (std::int64_t y = -15; y <= 15; ++y) {
      EXPECT_EQ(popoviciu_2x3(m, {x, y}), brute_count(m, {x, y}).count) << x << "," << y;
    }
  }
}

TEST(Popoviciu2x3, MatchesPipelineOnRandomMatrices) {
  std::mt19937_64 rng(72);
  for (int it = 0; it < 30; ++it) {
    ColumnMatrix m = test::random_one_prime(rng, 3);
    QuasiPolynomial f = build_formula(m);
    for (int s = 0; s < 20; ++s) {
      Vec2 b = test::random_cone_point(rng, m, 5);
      EXPECT_EQ(popoviciu_2x3(m, b), evaluate_count(f, b));
    }
  }
}

TEST(PopoviciuParallel, Examples) {
  ColumnMatrix m = build_matrix({{2, 2}, {3, 3}, {1, 2}});
  EXPECT_EQ(popoviciu_parallel(m, {2, 3}), 0);
  EXPECT_EQ(popoviciu_parallel(m, {3, 4}), 1);
  EXPECT_EQ(popoviciu_parallel(m, {0, 0}), 1);
  EXPECT_EQ(popoviciu_parallel(m, {5, 4}), 0);  // outside the cone
}

TEST(PopoviciuParallel, BothLayoutsMatchOracle) {
  std::vector<std::vector<Vec2>> layouts{
      {{2, 2}, {3, 3}, {1, 2}},   // parallel pair first
      {{1, 0}, {3, 3}, {5, 5}},   // parallel pair last
      {{4, -4}, {3, -3}, {0, 1}}  // parallel pair first, other half-plane
  };
  for (const auto& cols : layouts) {
    ColumnMatrix m = build_matrix(cols);
    for (std::int64_t x = -20; x <= 20; ++x) {
      for (std::int64_t y = -20; y <= 20; ++y) {
        EXPECT_EQ(popoviciu_parallel(m, {x, y}), brute_count(m, {x, y}).count) << x << "," << y;
      }
    }
  }
}

TEST(PopoviciuParallel, Preconditions) {
  auto code = [](std::vector<Vec2> cols) {
    try {
      popoviciu_parallel(build_matrix(cols), {1, 1});
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidInput;
  };
  EXPECT_EQ(code({{2, 2}, {4, 4}, {1, 2}}), Errc::PreconditionFailed);  // gcd(k, l) = 2
  EXPECT_EQ(code({{1, 1}, {2, 2}, {1, 3}}), Errc::PreconditionFailed);  // det(d, e) = 2
  EXPECT_EQ(code({{1, 0}, {1, 1}, {0, 1}}), Errc::PreconditionFailed);  // no parallel pair
}

}  // namespace
}  // namespace vpart
