#include "vpart/quasipoly.hpp"

#include <map>
#include <string>
#include <utility>

#include "vpart/error.hpp"
#include "vpart/moments.hpp"
#include "vpart/truncated_power.hpp"

namespace vpart {
namespace {

std::vector<BivarPoly> pieces_with(const ColumnMatrix& m, std::size_t chamber, const MomentTable& beta) {
  const int top = static_cast<int>(m.size()) - 2;
  std::vector<BivarPoly> pieces;
  pieces.reserve(static_cast<std::size_t>(top) + 1);
  pieces.push_back(truncated_power_piece(m, chamber));
  for (int kappa = 1; kappa <= top; ++kappa) {
    BivarPoly acc;
    for (int j = 0; j < kappa; ++j) {
      const int order = kappa - j;
      for (int vx = 0; vx <= order; ++vx) {
        Monomial v{vx, order - vx};
        const BigRational& b = beta(v);
        if (b == 0) continue;
        BigRational scale = b / BigRational(factorial(static_cast<unsigned>(v.x)) * factorial(static_cast<unsigned>(v.y)));
        acc += bivar_diff(pieces[static_cast<std::size_t>(j)], v) * scale;
      }
    }
    pieces.push_back(-acc);
  }
  return pieces;
}

}  // namespace

BigRational ChamberFormula::evaluate(Vec2 b) const {
  BigRational value = polynomial.evaluate(b.x, b.y);
  for (const auto& term : periodic) value += term.value(b);
  return value;
}

QuasiPolynomial::QuasiPolynomial(ColumnMatrix matrix, std::vector<ChamberFormula> chambers)
    : matrix_(std::move(matrix)), chambers_(std::move(chambers)) {
  if (chambers_.size() + 1 != matrix_.size()) {
    throw Error(Errc::PreconditionFailed, "need one formula per chamber");
  }
}

std::vector<BivarPoly> polynomial_part_pieces(const ColumnMatrix& m, std::size_t chamber) {
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "polynomial part needs non-parallel columns");
  if (chamber + 1 >= m.size()) throw Error(Errc::IndexOutOfRange, "chamber " + std::to_string(chamber));
  MomentTable beta(m, static_cast<int>(m.size()) - 2);
  return pieces_with(m, chamber, beta);
}

BivarPoly polynomial_part(const ColumnMatrix& m, std::size_t chamber) {
  BivarPoly sum;
  for (const auto& piece : polynomial_part_pieces(m, chamber)) sum += piece;
  return sum;
}

QuasiPolynomial build_formula(const ColumnMatrix& m) {
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "closed form needs pairwise non-parallel columns");
  if (!m.is_one_prime()) throw Error(Errc::NotOnePrime, "closed form needs a 1-prime matrix");
  const std::size_t n = m.size();
  MomentTable beta(m, static_cast<int>(n) - 2);

  // Each pair is reduced once and shared by every chamber it covers.
  std::map<std::pair<std::size_t, std::size_t>, PeriodicTerm> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t y = m.minor(i, j);
      if (y >= -1 && y <= 1) continue;
      PairReduction red = reduce_pair(m, i, j);
      ResidueTable table = residue_table(red);
      pairs.emplace(std::pair{i, j}, PeriodicTerm{std::move(red), std::move(table)});
    }
  }

  std::vector<ChamberFormula> formulas;
  for (const Chamber& ch : chambers(m)) {
    ChamberFormula f{ch, {}, {}};
    for (const auto& piece : pieces_with(m, ch.index, beta)) f.polynomial += piece;
    for (const auto& [key, term] : pairs) {
      if (key.first <= ch.index && ch.index < key.second) f.periodic.push_back(term);
    }
    formulas.push_back(std::move(f));
  }
  return QuasiPolynomial(m, std::move(formulas));
}

BigInt evaluate_count(const QuasiPolynomial& q, Vec2 b) {
  const ColumnMatrix& m = q.matrix();
  if (!m.in_cone(b)) return 0;
  std::size_t k = chamber_of(m, b).resolved_chamber();
  BigRational value = q.chamber(k).evaluate(b);
  if (value.get_den() != 1 || value < 0) {
    throw Error(Errc::NonIntegerResult,
                "closed form gave " + to_string(value) + " at (" + std::to_string(b.x) + "," + std::to_string(b.y) + ")");
  }
  return value.get_num();
}

}  // namespace vpart
