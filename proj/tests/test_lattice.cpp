#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vpart/error.hpp"
#include "vpart/lattice.hpp"

namespace vpart {
namespace {

Errc build_error(std::vector<Vec2> cols) {
  try {
    build_matrix(cols);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidInput;
}

TEST(BuildMatrix, Examples) {
  ColumnMatrix a = test::matrix_a();
  std::vector<Vec2> expected{{1, 0}, {2, 1}, {1, 1}, {0, 1}};
  EXPECT_TRUE(std::equal(a.columns().begin(), a.columns().end(), expected.begin(), expected.end()));

  EXPECT_EQ(build_error({{1, 0}, {-1, 0}}), Errc::OriginInHull);
  EXPECT_EQ(build_error({{1, 0}, {0, 1}, {-1, -1}}), Errc::OriginInHull);
  EXPECT_EQ(build_error({{1, 0}, {0, 0}}), Errc::ZeroColumn);
  EXPECT_EQ(build_error({}), Errc::EmptyMatrix);
  EXPECT_EQ(build_error({{1, 0}}), Errc::TooFewColumns);

  ColumnMatrix swapped = build_matrix({{0, 1}, {1, 0}});
  EXPECT_EQ(swapped.column(0), (Vec2{1, 0}));
  EXPECT_EQ(swapped.column(1), (Vec2{0, 1}));
}

TEST(BuildMatrix, ParallelColumnsKeepInputOrder) {
  ColumnMatrix m = build_matrix({{3, 3}, {1, 2}, {2, 2}});
  EXPECT_TRUE(m.has_parallel_columns());
  EXPECT_EQ(m.column(0), (Vec2{3, 3}));
  EXPECT_EQ(m.column(1), (Vec2{2, 2}));
  EXPECT_EQ(m.column(2), (Vec2{1, 2}));
}

TEST(Minor, Examples) {
  ColumnMatrix a = test::matrix_a();
  EXPECT_EQ(a.minor(1, 3), 2);
  EXPECT_EQ(a.minor(0, 2), 1);
  EXPECT_EQ(a.minor(1, 2), 1);
  EXPECT_EQ(a.minor(3, 1), -2);
  EXPECT_THROW(a.minor(0, 4), Error);
}

TEST(OnePrime, Examples) {
  EXPECT_TRUE(test::matrix_a().is_one_prime());
  EXPECT_FALSE(build_matrix({{2, 0}, {0, 2}, {2, 2}}).is_one_prime());
  EXPECT_TRUE(build_matrix({{1, 0}, {0, 1}}).is_one_prime());
  EXPECT_FALSE(build_matrix({{2, 0}, {0, 1}}).is_one_prime());
  EXPECT_TRUE(test::matrix_m0p().is_one_prime());
}

TEST(Chambers, Examples) {
  EXPECT_EQ(chambers(test::matrix_a()).size(), 3u);
  EXPECT_EQ(chambers(build_matrix({{2, 1}, {1, 3}})).size(), 1u);
  auto m0 = chambers(test::matrix_m0());
  ASSERT_EQ(m0.size(), 2u);
  EXPECT_EQ(m0[1].lower_ray, (Vec2{1, 1}));
  EXPECT_EQ(m0[1].upper_ray, (Vec2{1, 2}));
  EXPECT_THROW(chambers(build_matrix({{1, 1}, {2, 2}, {0, 1}})), Error);
}

TEST(ChamberOf, Examples) {
  using Kind = ChamberLocation::Kind;
  ColumnMatrix a = test::matrix_a();
  EXPECT_EQ(chamber_of(a, {3, 1}), (ChamberLocation{Kind::Interior, 0}));
  EXPECT_EQ(chamber_of(a, {3, 2}), (ChamberLocation{Kind::Interior, 1}));
  EXPECT_EQ(chamber_of(a, {-1, 0}).kind, Kind::Outside);
  EXPECT_EQ(chamber_of(a, {4, 2}), (ChamberLocation{Kind::Boundary, 1}));
  EXPECT_EQ(chamber_of(a, {0, 5}), (ChamberLocation{Kind::Boundary, 3}));
  EXPECT_EQ(chamber_of(a, {0, 0}), (ChamberLocation{Kind::Boundary, 0}));
  EXPECT_EQ(chamber_of(a, {4, 2}).resolved_chamber(), 0u);
  EXPECT_EQ(chamber_of(a, {0, 5}).resolved_chamber(), 2u);
}

TEST(LatticeProperties, MinorsPositiveAfterSorting) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    ColumnMatrix m = test::random_plain_matrix(rng, static_cast<std::size_t>(test::uniform(rng, 2, 6)));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) EXPECT_GT(m.minor(i, j), 0);
    }
    Vec2 u = m.separating_direction();
    for (Vec2 c : m.columns()) EXPECT_GT(dot(u, c), 0);
  }
}

TEST(LatticeProperties, BoundaryPointsLieInBothClosures) {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 200; ++it) {
    ColumnMatrix m = test::random_plain_matrix(rng, static_cast<std::size_t>(test::uniform(rng, 3, 6)));
    std::size_t k = static_cast<std::size_t>(test::uniform(rng, 1, static_cast<std::int64_t>(m.size()) - 2));
    Vec2 b = test::uniform(rng, 1, 5) * m.column(k);
    ChamberLocation loc = chamber_of(m, b);
    ASSERT_EQ(loc.kind, ChamberLocation::Kind::Boundary);
    ASSERT_EQ(loc.index, k);
    for (std::size_t ch : {k - 1, k}) {
      EXPECT_GE(det(m.column(ch), b), 0);
      EXPECT_GE(det(b, m.column(ch + 1)), 0);
    }
  }
}

TEST(LatticeProperties, OnePrimeIsUnimodularInvariant) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    ColumnMatrix m = test::random_matrix(rng, static_cast<std::size_t>(test::uniform(rng, 2, 5)));
    ColumnMatrix um = test::transform(test::random_unimodular(rng), m);
    EXPECT_EQ(m.is_one_prime(), um.is_one_prime());
    EXPECT_EQ(m.has_parallel_columns(), um.has_parallel_columns());
  }
}

}  // namespace
}  // namespace vpart
