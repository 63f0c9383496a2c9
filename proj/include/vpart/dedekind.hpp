#pragma once

// Fourier-Dedekind sums
//   sigma_t(C; n) = 1/n * sum_{lambda^n = 1, lambda != 1} lambda^t / prod_{c in C} (lambda^c - 1)
// and the reduction of the two-dimensional character sums attached to a pair
// of columns (i, j) to one of them.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vpart/exact.hpp"
#include "vpart/lattice.hpp"

namespace vpart {

struct DedekindSumSpec {
  std::int64_t t = 0;
  std::vector<std::int64_t> residues;  // the multiset C
  std::int64_t modulus = 1;            // n >= 1
};

/// Exact value computed in Q[x]/(1 + x + ... + x^{n-1}). Throws NotCoprime
/// when some c shares a factor with n, PreconditionFailed when n < 1.
BigRational fourier_dedekind_exact(const DedekindSumSpec& spec);

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Direct summation over lambda = exp(2 pi i k / n) at 50 significant digits.
HighPrecision fourier_dedekind_float(const DedekindSumSpec& spec);

/// Reduction data for one column pair (i, j) of a 1-prime matrix (0-based indices):
/// sum over nontrivial characters theta with theta^{c_i} = theta^{c_j} = 1 of
/// theta^b / (|Y_ij| prod_{h != i,j} (1 - theta^{-c_h})) equals
/// sigma_{L(b) + shift}(residues; modulus) with L(b) = a1*b.x + a2*b.y.
struct PairReduction {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t m = 0;  // auxiliary column index, m != i, j
  std::int64_t f = 0;
  std::int64_t g = 0;
  std::int64_t modulus = 1;            // |Y_ij|
  std::vector<std::int64_t> residues;  // C_ij in [0, modulus), one per h != i, j in index order
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t shift = 0;  // sum of residues mod modulus

  /// L(b) mod modulus, in [0, modulus).
  std::int64_t linear_residue(Vec2 b) const;
  /// The Fourier-Dedekind argument t_ij(b) for b.
  DedekindSumSpec spec_at(Vec2 b) const;
};

/// Throws NotOnePrime, IndexOutOfRange, or PreconditionFailed (i >= j, |Y_ij| < 2,
/// fewer than three columns, or an invalid explicit m).
PairReduction reduce_pair(const ColumnMatrix& m, std::size_t i, std::size_t j,
                          std::optional<std::size_t> aux = std::nullopt);

/// values[r] = sigma_{r + shift}(residues; modulus), r in [0, modulus).
struct ResidueTable {
  std::int64_t modulus = 1;
  std::vector<BigRational> values;

  const BigRational& at(std::int64_t residue) const { return values.at(static_cast<std::size_t>(residue)); }
};

ResidueTable residue_table(const PairReduction& red);

}  // namespace vpart
