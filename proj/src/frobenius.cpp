#include "vpart/frobenius.hpp"

#include <numeric>
#include <string>

#include "vpart/error.hpp"
#include "vpart/oracle.hpp"

namespace vpart {

std::int64_t frobenius_pair(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(Errc::PreconditionFailed, "a and b must be >= 1");
  if (std::gcd(a, b) != 1) throw Error(Errc::NotCoprime, "a and b must be coprime");
  return a * b - a - b;
}

BigRational frobenius_bound(const ColumnMatrix& m, Vec2 n) {
  if (m.size() != 3) throw Error(Errc::PreconditionFailed, "bound needs a 2x3 matrix");
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "bound needs non-parallel columns");
  const std::int64_t y12 = m.minor(0, 1), y13 = m.minor(0, 2), y23 = m.minor(1, 2);
  if (std::gcd(y12, y13) != 1 || std::gcd(y12, y23) != 1 || std::gcd(y13, y23) != 1) {
    throw Error(Errc::NotPairwiseCoprime, "minors " + std::to_string(y12) + ", " + std::to_string(y13) + ", " +
                                              std::to_string(y23) + " are not pairwise coprime");
  }
  if (!m.in_cone(n) || n == Vec2{}) throw Error(Errc::DegenerateDirection, "direction lies outside the cone");

  std::int64_t num = 0, form = 0;
  if (chamber_of(m, n).resolved_chamber() == 0) {
    num = y12 * y13 - y12 - y13 + 1;
    form = det(m.column(0), n);
  } else {
    num = y23 * y13 - y23 - y13 + 1;
    form = det(n, m.column(2));
  }
  if (form <= 0) throw Error(Errc::DegenerateDirection, "chamber linear form vanishes at the direction");
  return make_rational(static_cast<long>(num), static_cast<long>(form));
}

FrobeniusResult frobenius_exact(const ColumnMatrix& m, Vec2 n, std::int64_t horizon, std::int64_t margin) {
  if (n == Vec2{} || !m.in_cone(n)) throw Error(Errc::PreconditionFailed, "direction must be a nonzero point of the cone");

  FrobeniusResult res;
  if (m.size() == 3) {
    try {
      res.bound = frobenius_bound(m, n);
    } catch (const Error&) {
      // no bound for this input; fall back to the run criterion alone
    }
  }
  std::int64_t must_reach = 0;
  if (res.bound) must_reach = -floor(-*res.bound).get_si() + margin;  // ceil(bound) + margin

  std::int64_t smallest = 0;  // smallest solvable N
  std::int64_t run = 0;
  for (std::int64_t N = 1;; ++N) {
    if (N > horizon) {
      throw Error(Errc::HorizonExceeded, "no conclusion after " + std::to_string(horizon) + " multiples");
    }
    ++res.checks;
    if (brute_count(m, N * n).count > 0) {
      if (smallest == 0) smallest = N;
      ++run;
    } else {
      res.witness = N;
      run = 0;
    }
    if (smallest != 0 && run >= smallest && N >= must_reach) break;
  }
  res.exact = res.witness.value_or(0);
  return res;
}

}  // namespace vpart
