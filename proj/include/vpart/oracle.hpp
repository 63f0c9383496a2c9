#pragma once

// Brute-force t(b|M) = #{x >= 0 : Mx = b}. Deliberately plain so it can be
// trusted as ground truth for every closed form.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpart/lattice.hpp"
#include "vpart/quasipoly.hpp"

namespace vpart {

struct CountResult {
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint64_t>> solutions;  // only when collected, capped
};

/// Columns are used in the given order (they need not be sorted). Throws
/// ZeroColumn / OriginInHull / TooFewColumns for invalid column sets.
CountResult brute_count(std::span<const Vec2> columns, Vec2 b, bool collect = false, std::size_t max_solutions = 1000);
inline CountResult brute_count(const ColumnMatrix& m, Vec2 b, bool collect = false, std::size_t max_solutions = 1000) {
  return brute_count(m.columns(), b, collect, max_solutions);
}

struct Mismatch {
  Vec2 point;
  std::string closed;  // count, or the error the closed form raised
  std::uint64_t oracle = 0;
};

/// Compares evaluate_count with brute_count on every b with u·b >= 0 and
/// |b|_inf <= radius, u the separating direction of M. Mismatches come back
/// in row-major point order regardless of jobs.
std::vector<Mismatch> grid_verify(const QuasiPolynomial& q, std::int64_t radius, unsigned jobs = 1);

}  // namespace vpart
