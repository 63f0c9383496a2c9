#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vpart {

/// Integer vector in Z^2; used for matrix columns and lattice points b.
struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(std::int64_t s, Vec2 a) { return {s * a.x, s * a.y}; }
};

using LatticePoint = Vec2;

/// det[a b] = a.x*b.y - a.y*b.x; positive when b is counterclockwise of a.
constexpr std::int64_t det(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
constexpr std::int64_t dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }

/// Columns sorted counterclockwise, or nullopt when they do not lie in a
/// common open half-plane (the origin is in their convex hull). Ties keep
/// input order. Zero columns are rejected by returning nullopt.
std::optional<std::vector<Vec2>> sort_by_angle(std::span<const Vec2> columns);

/// Integer u with u·c > 0 for all columns. Columns must already be angle-sorted
/// and lie in an open half-plane.
Vec2 separating_direction(std::span<const Vec2> sorted_columns);

/// A validated 2×n integer matrix: columns in an open half-plane, sorted
/// counterclockwise, with all pairwise determinants cached.
class ColumnMatrix {
 public:
  /// Throws EmptyMatrix, TooFewColumns, ZeroColumn or OriginInHull.
  static ColumnMatrix build(std::span<const Vec2> raw_columns);

  std::size_t size() const noexcept { return columns_.size(); }
  Vec2 column(std::size_t i) const;
  std::span<const Vec2> columns() const noexcept { return columns_; }

  /// Y_ij = det(c_i, c_j) for any pair of (0-based) indices; throws IndexOutOfRange.
  std::int64_t minor(std::size_t i, std::size_t j) const;

  bool has_parallel_columns() const noexcept { return has_parallel_; }
  bool is_one_prime() const noexcept { return one_prime_; }
  Vec2 separating_direction() const noexcept { return direction_; }

  /// b in the closed cone spanned by the columns.
  bool in_cone(Vec2 b) const noexcept;

  friend bool operator==(const ColumnMatrix& a, const ColumnMatrix& b) { return a.columns_ == b.columns_; }

 private:
  ColumnMatrix() = default;

  std::vector<Vec2> columns_;
  std::vector<std::int64_t> minors_;  // row-major n×n
  bool has_parallel_ = false;
  bool one_prime_ = false;
  Vec2 direction_;
};

inline ColumnMatrix build_matrix(std::span<const Vec2> raw_columns) { return ColumnMatrix::build(raw_columns); }
inline ColumnMatrix build_matrix(std::initializer_list<Vec2> raw_columns) {
  return ColumnMatrix::build(std::span<const Vec2>(raw_columns.begin(), raw_columns.size()));
}

/// For every 3 columns spanning R^2, the gcd of the absolute values of their
/// nonzero 2×2 minors is 1. With only two columns the matrix counts as 1-prime
/// exactly when it is unimodular (|det| = 1).
bool is_one_prime(std::span<const Vec2> columns);
inline bool is_one_prime(const ColumnMatrix& m) { return m.is_one_prime(); }

/// Fundamental cone between consecutive columns c_index and c_{index+1} (0-based).
struct Chamber {
  std::size_t index = 0;
  Vec2 lower_ray;
  Vec2 upper_ray;
};

/// n-1 chambers; throws ParallelColumns.
std::vector<Chamber> chambers(const ColumnMatrix& m);

struct ChamberLocation {
  enum class Kind { Interior, Boundary, Outside };

  Kind kind = Kind::Outside;
  /// Chamber index for Interior, column index for Boundary, unused for Outside.
  std::size_t index = 0;

  /// Chamber whose closure is used for evaluation: Interior(k) -> k,
  /// Boundary(k) -> max(k-1, 0). Throws PreconditionFailed for Outside.
  std::size_t resolved_chamber() const;

  friend bool operator==(const ChamberLocation&, const ChamberLocation&) = default;
};

/// Locates b by determinant signs. The origin reports Boundary(0).
/// Throws ParallelColumns.
ChamberLocation chamber_of(const ColumnMatrix& m, Vec2 b);

}  // namespace vpart
