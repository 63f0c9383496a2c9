#pragma once

// Closed-form vector partition function of a 1-prime 2×n matrix:
//   t(b|M) = p_k(b) + sum_{i <= k < j} sigma_{t_ij(b)}(C_ij; |Y_ij|)   for b in the closure of chamber k,
// plus the specialised closed forms for one-row and 2×3 inputs.

#include <vector>

#include "vpart/dedekind.hpp"
#include "vpart/exact.hpp"
#include "vpart/lattice.hpp"

namespace vpart {

struct PeriodicTerm {
  PairReduction reduction;
  ResidueTable table;

  const BigRational& value(Vec2 b) const { return table.at(reduction.linear_residue(b)); }
};

struct ChamberFormula {
  Chamber chamber;
  BivarPoly polynomial;  // degree n-2, not homogeneous
  std::vector<PeriodicTerm> periodic;

  /// Rational value of this chamber's quasi-polynomial at b (no cone check).
  BigRational evaluate(Vec2 b) const;
};

class QuasiPolynomial {
 public:
  QuasiPolynomial(ColumnMatrix matrix, std::vector<ChamberFormula> chambers);

  const ColumnMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<ChamberFormula>& chambers() const noexcept { return chambers_; }
  const ChamberFormula& chamber(std::size_t k) const { return chambers_.at(k); }

 private:
  ColumnMatrix matrix_;
  std::vector<ChamberFormula> chambers_;
};

/// p_0 .. p_{n-2} on chamber k; p_kappa is homogeneous of degree n-2-kappa.
/// p_0 is the truncated power piece, and
///   p_kappa = - sum_{j < kappa} sum_{|v| = kappa - j} D^v p_j * beta_v / v!.
std::vector<BivarPoly> polynomial_part_pieces(const ColumnMatrix& m, std::size_t chamber);

/// Sum of the pieces. Throws ParallelColumns, IndexOutOfRange.
BivarPoly polynomial_part(const ColumnMatrix& m, std::size_t chamber);

/// Throws NotOnePrime or ParallelColumns.
QuasiPolynomial build_formula(const ColumnMatrix& m);

/// t(b|M); 0 outside the cone. Throws NonIntegerResult if the closed form
/// does not produce a nonnegative integer.
BigInt evaluate_count(const QuasiPolynomial& q, Vec2 b);

// ---------------------------------------------------------------------------

/// #{(x, y) >= 0 : a x + b y = n} = n/(ab) - {b^-1 n / a} - {a^-1 n / b} + 1.
/// Throws NotCoprime, PreconditionFailed (a, b < 1 or n < 0).
BigInt popoviciu_pair(std::int64_t a, std::int64_t b, std::int64_t n);

/// Fractional-part closed form for a 1-prime 2×3 matrix with pairwise
/// non-parallel columns; 0 outside the cone. Throws NotOnePrime,
/// ParallelColumns, PreconditionFailed (not three columns).
BigInt popoviciu_2x3(const ColumnMatrix& m, Vec2 b);

/// 2×3 matrix with columns k*d, l*d, e where gcd(k, l) = 1 and |det(d, e)| = 1.
/// Either side may carry the parallel pair. 0 outside the cone.
/// Throws PreconditionFailed when the shape or gcd/determinant checks fail.
BigInt popoviciu_parallel(const ColumnMatrix& m, Vec2 b);

}  // namespace vpart
