#include "vpart/quasipoly.hpp"

#include <numeric>
#include <string>

#include "vpart/error.hpp"

namespace vpart {
namespace {

/// {r/n} for an integer r; 0 when n = 1.
BigRational frac(std::int64_t r, std::int64_t n) {
  return make_rational(static_cast<long>(floor_mod(r, n)), static_cast<long>(n));
}

BigInt as_count(const BigRational& value, const char* what) {
  if (value.get_den() != 1 || value < 0) {
    throw Error(Errc::NonIntegerResult, std::string(what) + " gave " + to_string(value));
  }
  return value.get_num();
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

/// -{L_ij(b)/|Y_ij|} for the pair (i, j) of a 2×3 matrix whose third column is m:
/// L = (f Y_im + g Y_jm)^{-1} * det(f c_i + g c_j, b), smallest |f| + |g| that makes it a unit.
BigRational pair_fraction(const ColumnMatrix& mat, std::size_t i, std::size_t j, std::size_t m, Vec2 b) {
  const std::int64_t y = abs64(mat.minor(i, j));
  if (y == 1) return 0;
  const std::int64_t y_im = mat.minor(i, m), y_jm = mat.minor(j, m);
  for (std::int64_t s = 1; s <= 2 * y; ++s) {
    for (std::int64_t f = s; f >= -s; --f) {
      std::int64_t rest = s - abs64(f);
      for (std::int64_t g : {rest, -rest}) {
        std::int64_t unit = f * y_im + g * y_jm;
        if (std::gcd(unit, y) == 1) {
          Vec2 w = f * mat.column(i) + g * mat.column(j);
          return -frac(mul_mod(mod_inverse(unit, y), det(w, b), y), y);
        }
      }
    }
  }
  throw Error(Errc::NotOnePrime, "no unit combination for pair");
}

}  // namespace

BigInt popoviciu_pair(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a < 1 || b < 1) throw Error(Errc::PreconditionFailed, "a and b must be >= 1");
  if (n < 0) throw Error(Errc::PreconditionFailed, "n must be >= 0");
  if (std::gcd(a, b) != 1) throw Error(Errc::NotCoprime, "a and b must be coprime");
  BigRational t = make_rational(static_cast<long>(n), BigInt(static_cast<long>(a)) * static_cast<long>(b));
  t -= frac(mul_mod(mod_inverse(b, a), n, a), a);
  t -= frac(mul_mod(mod_inverse(a, b), n, b), b);
  t += 1;
  return as_count(t, "popoviciu_pair");
}

BigInt popoviciu_2x3(const ColumnMatrix& m, Vec2 b) {
  if (m.size() != 3) throw Error(Errc::PreconditionFailed, "need exactly three columns");
  if (m.has_parallel_columns()) throw Error(Errc::ParallelColumns, "use popoviciu_parallel");
  if (!m.is_one_prime()) throw Error(Errc::NotOnePrime, "matrix is not 1-prime");
  if (!m.in_cone(b)) return 0;

  const Vec2 c1 = m.column(0), c3 = m.column(2);
  const std::int64_t y12 = m.minor(0, 1), y13 = m.minor(0, 2), y23 = m.minor(1, 2);
  const bool coprime = std::gcd(y12, y13) == 1 && std::gcd(y12, y23) == 1 && std::gcd(y13, y23) == 1;
  const std::size_t k = chamber_of(m, b).resolved_chamber();

  BigRational t = 1;
  if (k == 0) {
    const std::int64_t form = det(c1, b);
    t += make_rational(static_cast<long>(form), BigInt(static_cast<long>(y12)) * static_cast<long>(y13));
    if (coprime) {
      if (y12 > 1) t -= frac(mul_mod(mod_inverse(y13, y12), form, y12), y12);
      if (y13 > 1) t -= frac(mul_mod(mod_inverse(y12, y13), form, y13), y13);
    } else {
      t += pair_fraction(m, 0, 1, 2, b);
      t += pair_fraction(m, 0, 2, 1, b);
    }
  } else {
    const std::int64_t form = det(b, c3);
    t += make_rational(static_cast<long>(form), BigInt(static_cast<long>(y23)) * static_cast<long>(y13));
    if (coprime) {
      if (y23 > 1) t -= frac(mul_mod(mod_inverse(y13, y23), form, y23), y23);
      if (y13 > 1) t -= frac(mul_mod(mod_inverse(y23, y13), form, y13), y13);
    } else {
      t += pair_fraction(m, 1, 2, 0, b);
      t += pair_fraction(m, 0, 2, 1, b);
    }
  }
  return as_count(t, "popoviciu_2x3");
}

BigInt popoviciu_parallel(const ColumnMatrix& m, Vec2 b) {
  if (m.size() != 3) throw Error(Errc::PreconditionFailed, "need exactly three columns");
  // Sorted columns put the parallel pair either first or last.
  std::size_t p = 0, e = 2;
  if (m.minor(0, 1) == 0 && m.minor(1, 2) != 0) {
    p = 0;
    e = 2;
  } else if (m.minor(1, 2) == 0 && m.minor(0, 1) != 0) {
    p = 1;
    e = 0;
  } else {
    throw Error(Errc::PreconditionFailed, "need exactly one parallel pair of columns");
  }
  const Vec2 cp = m.column(p), cq = m.column(p + 1), ce = m.column(e);
  const std::int64_t k = std::gcd(cp.x, cp.y), l = std::gcd(cq.x, cq.y);
  const Vec2 d{cp.x / k, cp.y / k};
  if (std::gcd(k, l) != 1) throw Error(Errc::PreconditionFailed, "multiples of the shared direction must be coprime");
  const std::int64_t s = det(d, ce);
  if (s != 1 && s != -1) throw Error(Errc::PreconditionFailed, "|det(d, e)| must be 1");
  if (!m.in_cone(b)) return 0;

  // b = u d + v e with u, v >= 0 in the cone; the count is that of k x + l y = u.
  const std::int64_t u = det(b, ce) * s;
  BigRational t = make_rational(static_cast<long>(u), BigInt(static_cast<long>(k)) * static_cast<long>(l));
  t -= frac(mul_mod(mod_inverse(l, k), u, k), k);
  t -= frac(mul_mod(mod_inverse(k, l), u, l), l);
  t += 1;
  return as_count(t, "popoviciu_parallel");
}

}  // namespace vpart
