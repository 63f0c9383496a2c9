#pragma once

#include <cstdint>
#include <optional>

#include "vpart/exact.hpp"
#include "vpart/lattice.hpp"

namespace vpart {

/// ab - a - b; -1 when a or b is 1. Throws NotCoprime, PreconditionFailed (a, b < 1).
std::int64_t frobenius_pair(std::int64_t a, std::int64_t b);

/// Strict upper bound for the largest N with M x = N n unsolvable, M a 2×3
/// matrix with pairwise coprime minors:
///   n in closure(chamber 1): (Y12 Y13 - Y12 - Y13 + 1) / det(c1, n)
///   n in closure(chamber 2): (Y23 Y13 - Y23 - Y13 + 1) / det(n, c3)
/// Throws NotPairwiseCoprime, ParallelColumns, PreconditionFailed (not 2×3),
/// DegenerateDirection when the chamber's linear form is <= 0 at n.
BigRational frobenius_bound(const ColumnMatrix& m, Vec2 n);

struct FrobeniusResult {
  std::optional<BigRational> bound;  // absent when no bound applies
  /// Largest N >= 1 with t(N n | M) = 0. 0 with no witness means every N >= 1 is solvable.
  std::int64_t exact = 0;
  std::optional<std::int64_t> witness;
  std::uint64_t checks = 0;  // number of N whose solvability was tested
};

/// Oracle search over N = 1, 2, ...: the solvable N are closed under addition,
/// so once s = the smallest solvable N is known, a run of s consecutive
/// solvable N proves every larger N solvable. With a bound available the
/// search also covers every N <= ceil(bound) + margin.
/// Throws PreconditionFailed (n zero or outside the cone), HorizonExceeded.
FrobeniusResult frobenius_exact(const ColumnMatrix& m, Vec2 n, std::int64_t horizon = 10000, std::int64_t margin = 5);

}  // namespace vpart
