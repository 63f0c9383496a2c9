#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vpart/error.hpp"
#include "vpart/moments.hpp"

namespace vpart {
namespace {

using test::q;

BigInt binom(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// E[Z^v] for Z = sum_j U_j c_j with U_j uniform on [0, 1], by binomial
/// convolution over the independent summands. beta_v = (-1)^{|v|} E[Z^v].
BigRational convolution_moment(std::span<const Vec2> cols, Monomial v) {
  std::map<Monomial, BigRational> acc{{{0, 0}, 1}};
  for (Vec2 c : cols) {
    std::map<Monomial, BigRational> next;
    for (int a = 0; a <= v.x; ++a) {
      for (int b = 0; b <= v.y; ++b) {
        BigRational sum = 0;
        for (int i = 0; i <= a; ++i) {
          for (int j = 0; j <= b; ++j) {
            BigInt power = 1;
            for (int k = 0; k < i; ++k) power *= static_cast<long>(c.x);
            for (int k = 0; k < j; ++k) power *= static_cast<long>(c.y);
            BigRational single = BigRational(power) / (i + j + 1);  // E[(U x)^i (U y)^j]
            sum += BigRational(binom(a, i) * binom(b, j)) * single * acc[{a - i, b - j}];
          }
        }
        next[{a, b}] = sum;
      }
    }
    acc = std::move(next);
  }
  BigRational e = acc[v];
  return v.total() % 2 ? BigRational(-e) : e;
}

TEST(Moment, Examples) {
  ColumnMatrix a = test::matrix_a();
  EXPECT_EQ(moment(a, {0, 0}), 1);
  EXPECT_EQ(moment(a, {0, 1}), q(-3, 2));
  EXPECT_EQ(moment(a, {0, 2}), q(5, 2));
  EXPECT_EQ(moment(a, {1, 0}), q(-2));  // -(1 + 2 + 1 + 0)/2
}

TEST(Moment, TableMatchesDirectCalls) {
  ColumnMatrix a = test::matrix_a();
  MomentTable table(a, 2);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; i + j <= 2; ++j) EXPECT_EQ(table({i, j}), moment(a, {i, j}));
  }
  try {
    table({2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrderTooHigh);
  }
}

TEST(MomentProperties, AgreesWithConvolutionOracle) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    ColumnMatrix m = test::random_matrix(rng, static_cast<std::size_t>(test::uniform(rng, 2, 6)));
    Monomial v{static_cast<int>(test::uniform(rng, 0, 3)), static_cast<int>(test::uniform(rng, 0, 3))};
    EXPECT_EQ(moment(m, v), convolution_moment(m.columns(), v));
  }
}

TEST(MomentProperties, ZeroOrderIsOne) {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 100; ++it) {
    ColumnMatrix m = test::random_matrix(rng, static_cast<std::size_t>(test::uniform(rng, 2, 6)));
    EXPECT_EQ(moment(m, {0, 0}), 1);
  }
}

TEST(MomentProperties, PermutationInvariance) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 100; ++it) {
    ColumnMatrix m = test::random_matrix(rng, static_cast<std::size_t>(test::uniform(rng, 2, 6)));
    std::vector<Vec2> cols(m.columns().begin(), m.columns().end());
    std::shuffle(cols.begin(), cols.end(), rng);
    Monomial v{static_cast<int>(test::uniform(rng, 0, 3)), static_cast<int>(test::uniform(rng, 0, 3))};
    EXPECT_EQ(moment(cols, v), moment(m, v));
  }
}

}  // namespace
}  // namespace vpart
