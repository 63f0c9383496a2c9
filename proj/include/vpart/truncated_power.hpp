#pragma once

// Multivariate truncated power T(x|M) for 2×n matrices.
//
// The explicit plus-function sum is the production path. The recurrence
// T(x|M) = 1/(n-2) * sum_j lambda_j T(x|M \ m_j) is kept as an independent
// cross-check; it picks lambda supported on the two columns enclosing x.

#include <span>

#include "vpart/exact.hpp"
#include "vpart/lattice.hpp"

namespace vpart {

struct RationalPoint {
  BigRational x;
  BigRational y;
};

/// T(p|M) = 1/(n-2)! * sum_i (y_i x - x_i y)_+^{n-2} / prod_{j!=i} (y_i x_j - y_j x_i),
/// and 0 outside cone(M). Throws TooFewColumns (n < 3) or ParallelColumns.
BigRational truncated_power_explicit(const ColumnMatrix& m, const RationalPoint& p);

/// T(p|M) by the recurrence down to 2×2 bases (1/|det| on the closed cone).
/// Columns may repeat directions. Throws DegenerateBase when a parallel 2×2
/// base is evaluated on its own ray, OriginInHull for invalid columns.
BigRational truncated_power_recurrence(std::span<const Vec2> columns, const RationalPoint& p);
inline BigRational truncated_power_recurrence(const ColumnMatrix& m, const RationalPoint& p) {
  return truncated_power_recurrence(m.columns(), p);
}

/// D^v T(·|M) as a polynomial on the closure of chamber k (0-based).
/// Throws OrderTooHigh when |v| > n-2, ParallelColumns, IndexOutOfRange.
BivarPoly truncated_power_derivative(const ColumnMatrix& m, Monomial v, std::size_t chamber);

/// The homogeneous degree n-2 polynomial agreeing with T on chamber k.
inline BivarPoly truncated_power_piece(const ColumnMatrix& m, std::size_t chamber) {
  return truncated_power_derivative(m, {0, 0}, chamber);
}

}  // namespace vpart
