#include "vpart/truncated_power.hpp"

#include <string>
#include <vector>

#include "vpart/error.hpp"

namespace vpart {
namespace {

BigRational as_rational(std::int64_t v) { return BigRational(static_cast<long>(v)); }

/// det(c, p) for an integer column and a rational point.
BigRational det(Vec2 c, const RationalPoint& p) { return as_rational(c.x) * p.y - as_rational(c.y) * p.x; }
BigRational det(const RationalPoint& p, Vec2 c) { return -det(c, p); }

bool in_closed_cone(std::span<const Vec2> sorted, const RationalPoint& p) {
  Vec2 first = sorted.front();
  Vec2 last = sorted.back();
  if (vpart::det(first, last) == 0) {
    return det(first, p) == 0 && as_rational(first.x) * p.x + as_rational(first.y) * p.y >= 0;
  }
  return det(first, p) >= 0 && det(p, last) >= 0;
}

bool on_ray(Vec2 c, const RationalPoint& p) {
  return det(c, p) == 0 && as_rational(c.x) * p.x + as_rational(c.y) * p.y > 0;
}

/// prod_{j != i} (y_i x_j - y_j x_i) = prod_{j != i} det(c_j, c_i)
BigRational denominator(std::span<const Vec2> cols, std::size_t i) {
  BigInt prod = 1;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j != i) prod *= static_cast<long>(vpart::det(cols[j], cols[i]));
  }
  return BigRational(prod);
}

std::vector<Vec2> without(std::span<const Vec2> cols, std::size_t skip) {
  std::vector<Vec2> out;
  out.reserve(cols.size() - 1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j != skip) out.push_back(cols[j]);
  }
  return out;
}

BigRational recurse(std::span<const Vec2> cols, const RationalPoint& p) {
  const std::size_t n = cols.size();
  if (n == 2) {
    std::int64_t d = vpart::det(cols[0], cols[1]);
    if (d == 0) {
      if (p.x == 0 && p.y == 0) throw Error(Errc::DegenerateBase, "parallel base evaluated at the origin");
      if (det(cols[0], p) == 0 && as_rational(cols[0].x) * p.x + as_rational(cols[0].y) * p.y > 0) {
        throw Error(Errc::DegenerateBase, "parallel base evaluated on its ray");
      }
      return 0;
    }
    if (!in_closed_cone(cols, p)) return 0;
    return BigRational(1, static_cast<unsigned long>(d < 0 ? -d : d));
  }
  if (p.x == 0 && p.y == 0) return 0;
  if (!in_closed_cone(cols, p)) return 0;

  const BigRational scale(1, static_cast<unsigned long>(n - 2));

  // On a column ray: x = lambda * c_j.
  for (std::size_t j = 0; j < n; ++j) {
    if (on_ray(cols[j], p)) {
      BigRational lambda = cols[j].x != 0 ? p.x / as_rational(cols[j].x) : p.y / as_rational(cols[j].y);
      auto rest = without(cols, j);
      return scale * lambda * recurse(rest, p);
    }
  }

  // Strictly between consecutive columns lo = hi - 1.
  std::size_t hi = 0;
  while (hi < n && det(cols[hi], p) > 0) ++hi;
  if (hi == 0 || hi == n) return 0;
  std::size_t lo = hi - 1;
  BigRational base = as_rational(vpart::det(cols[lo], cols[hi]));
  BigRational lambda_lo = det(p, cols[hi]) / base;
  BigRational lambda_hi = det(cols[lo], p) / base;
  auto without_lo = without(cols, lo);
  auto without_hi = without(cols, hi);
  return scale * (lambda_lo * recurse(without_lo, p) + lambda_hi * recurse(without_hi, p));
}

void require_plain(const ColumnMatrix& m) {
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "explicit truncated power needs distinct directions");
}

}  // namespace

BigRational truncated_power_explicit(const ColumnMatrix& m, const RationalPoint& p) {
  const std::size_t n = m.size();
  if (n < 3) throw Error(Errc::TooFewColumns, "explicit formula needs n >= 3");
  require_plain(m);
  const auto cols = m.columns();
  if (!in_closed_cone(cols, p)) return 0;

  const auto power = static_cast<unsigned long>(n - 2);
  BigRational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigRational value = det(p, cols[i]);  // y_i x - x_i y
    if (value <= 0) continue;
    BigRational num;
    mpz_pow_ui(num.get_num_mpz_t(), value.get_num_mpz_t(), power);
    mpz_pow_ui(num.get_den_mpz_t(), value.get_den_mpz_t(), power);
    sum += num / denominator(cols, i);
  }
  return sum / BigRational(factorial(static_cast<unsigned>(power)));
}

BigRational truncated_power_recurrence(std::span<const Vec2> columns, const RationalPoint& p) {
  if (columns.size() < 2) throw Error(Errc::TooFewColumns, "recurrence needs n >= 2");
  auto sorted = sort_by_angle(columns);
  if (!sorted) throw Error(Errc::OriginInHull, "columns do not lie in an open half-plane");
  return recurse(*sorted, p);
}

BivarPoly truncated_power_derivative(const ColumnMatrix& m, Monomial v, std::size_t chamber) {
  const std::size_t n = m.size();
  require_plain(m);
  if (chamber + 1 >= n) throw Error(Errc::IndexOutOfRange, "chamber " + std::to_string(chamber));
  if (v.x < 0 || v.y < 0 || static_cast<std::size_t>(v.total()) > n - 2) {
    throw Error(Errc::OrderTooHigh, "derivative order exceeds n-2");
  }
  const auto degree = static_cast<unsigned>(n - 2 - static_cast<std::size_t>(v.total()));
  const auto cols = m.columns();

  BivarPoly sum;
  // Columns counterclockwise of the chamber have y_i x - x_i y > 0 on it.
  for (std::size_t i = chamber + 1; i < n; ++i) {
    BigInt factor = 1;
    for (int k = 0; k < v.x; ++k) factor *= static_cast<long>(cols[i].y);
    for (int k = 0; k < v.y; ++k) factor *= static_cast<long>(-cols[i].x);
    BivarPoly form = BivarPoly::linear(as_rational(cols[i].y), as_rational(-cols[i].x));
    sum += pow(form, degree) * (BigRational(factor) / denominator(cols, i));
  }
  return sum * make_rational(1, factorial(degree));
}

}  // namespace vpart
