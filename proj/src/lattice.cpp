#include "vpart/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vpart/error.hpp"

namespace vpart {

std::optional<std::vector<Vec2>> sort_by_angle(std::span<const Vec2> columns) {
  if (std::any_of(columns.begin(), columns.end(), [](Vec2 c) { return c == Vec2{}; })) {
    return std::nullopt;
  }
  // A lowest column exists iff every other column is strictly counterclockwise
  // of it (within a half turn) or points the same way.
  auto is_lowest = [&](Vec2 a) {
    return std::all_of(columns.begin(), columns.end(), [a](Vec2 c) {
      std::int64_t d = det(a, c);
      return d > 0 || (d == 0 && dot(a, c) > 0);
    });
  };
  if (std::none_of(columns.begin(), columns.end(), is_lowest)) return std::nullopt;

  std::vector<Vec2> sorted(columns.begin(), columns.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](Vec2 a, Vec2 b) { return det(a, b) > 0; });
  return sorted;
}

Vec2 separating_direction(std::span<const Vec2> sorted_columns) {
  Vec2 first = sorted_columns.front();
  Vec2 last = sorted_columns.back();
  if (det(first, last) == 0) return first;
  // Interior of the dual cone: u·first = u·last = det(first, last) > 0.
  return {last.y - first.y, first.x - last.x};
}

ColumnMatrix ColumnMatrix::build(std::span<const Vec2> raw_columns) {
  if (raw_columns.empty()) throw Error(Errc::EmptyMatrix, "matrix has no columns");
  if (raw_columns.size() < 2) throw Error(Errc::TooFewColumns, "need at least two columns");
  for (std::size_t i = 0; i < raw_columns.size(); ++i) {
    if (raw_columns[i] == Vec2{}) throw Error(Errc::ZeroColumn, "column " + std::to_string(i + 1) + " is zero");
  }
  auto sorted = sort_by_angle(raw_columns);
  if (!sorted) throw Error(Errc::OriginInHull, "columns do not lie in an open half-plane");

  ColumnMatrix m;
  m.columns_ = std::move(*sorted);
  const std::size_t n = m.columns_.size();
  m.minors_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t d = det(m.columns_[i], m.columns_[j]);
      m.minors_[i * n + j] = d;
      if (i < j && d == 0) m.has_parallel_ = true;
    }
  }
  m.one_prime_ = vpart::is_one_prime(m.columns_);
  m.direction_ = vpart::separating_direction(m.columns_);
  return m;
}

Vec2 ColumnMatrix::column(std::size_t i) const {
  if (i >= columns_.size()) throw Error(Errc::IndexOutOfRange, "column index " + std::to_string(i));
  return columns_[i];
}

std::int64_t ColumnMatrix::minor(std::size_t i, std::size_t j) const {
  const std::size_t n = columns_.size();
  if (i >= n || j >= n) {
    throw Error(Errc::IndexOutOfRange, "minor (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return minors_[i * n + j];
}

bool ColumnMatrix::in_cone(Vec2 b) const noexcept {
  Vec2 first = columns_.front();
  Vec2 last = columns_.back();
  if (det(first, last) == 0) return det(first, b) == 0 && dot(first, b) >= 0;
  return det(first, b) >= 0 && det(b, last) >= 0;
}

bool is_one_prime(std::span<const Vec2> columns) {
  const std::size_t n = columns.size();
  if (n == 2) {
    std::int64_t d = det(columns[0], columns[1]);
    return d == 1 || d == -1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::int64_t g = std::gcd(std::gcd(det(columns[a], columns[b]), det(columns[a], columns[c])),
                                  det(columns[b], columns[c]));
        if (g == 0) continue;  // all three parallel: does not span
        if (g != 1) return false;
      }
    }
  }
  return true;
}

std::vector<Chamber> chambers(const ColumnMatrix& m) {
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "chambers need pairwise non-parallel columns");
  std::vector<Chamber> out;
  out.reserve(m.size() - 1);
  for (std::size_t k = 0; k + 1 < m.size(); ++k) out.push_back({k, m.column(k), m.column(k + 1)});
  return out;
}

std::size_t ChamberLocation::resolved_chamber() const {
  switch (kind) {
    case Kind::Interior: return index;
    case Kind::Boundary: return index == 0 ? 0 : index - 1;
    case Kind::Outside: break;
  }
  throw Error(Errc::PreconditionFailed, "point lies outside the cone");
}

ChamberLocation chamber_of(const ColumnMatrix& m, Vec2 b) {
  using Kind = ChamberLocation::Kind;
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "chamber_of needs pairwise non-parallel columns");
  if (!m.in_cone(b)) return {Kind::Outside, 0};
  if (b == Vec2{}) return {Kind::Boundary, 0};
  const auto cols = m.columns();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (det(cols[k], b) == 0 && dot(cols[k], b) > 0) return {Kind::Boundary, k};
  }
  for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
    if (det(cols[k], b) > 0 && det(b, cols[k + 1]) > 0) return {Kind::Interior, k};
  }
  return {Kind::Outside, 0};  // unreachable for points in the cone
}

}  // namespace vpart
