#include "vpart/dedekind.hpp"

#include <numeric>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "vpart/error.hpp"

namespace vpart {
namespace {

void validate(const DedekindSumSpec& spec) {
  if (spec.modulus < 1) throw Error(Errc::PreconditionFailed, "modulus must be >= 1");
  if (spec.modulus == 1) return;
  for (std::int64_t c : spec.residues) {
    if (std::gcd(c, spec.modulus) != 1) {
      throw Error(Errc::NotCoprime, std::to_string(c) + " shares a factor with " + std::to_string(spec.modulus));
    }
  }
}

/// 1 + x + ... + x^{n-1}; x^n ≡ 1 in the quotient.
UniPoly all_ones(std::int64_t n) {
  return UniPoly(std::vector<BigRational>(static_cast<std::size_t>(n), BigRational(1)));
}

/// prod_c (x^c - 1)^{-1} mod all_ones(n), degree <= n-2.
UniPoly inverse_product(const std::vector<std::int64_t>& residues, std::int64_t n, const UniPoly& modulus) {
  UniPoly product = UniPoly::constant(1);
  for (std::int64_t c : residues) {
    UniPoly denom = UniPoly::monomial(static_cast<std::size_t>(floor_mod(c, n))) - UniPoly::constant(1);
    product = (product * poly_invert_mod(denom, modulus)) % modulus;
  }
  return product;
}

}  // namespace

BigRational fourier_dedekind_exact(const DedekindSumSpec& spec) {
  validate(spec);
  const std::int64_t n = spec.modulus;
  if (n == 1) return 0;
  const UniPoly modulus = all_ones(n);
  UniPoly p = UniPoly::monomial(static_cast<std::size_t>(floor_mod(spec.t, n))) % modulus;
  p = (p * inverse_product(spec.residues, n, modulus)) % modulus;
  // Summing a degree <= n-2 polynomial over all n-th roots of unity gives n*p_0;
  // drop the lambda = 1 term.
  return p.coefficient(0) - p.evaluate(1) / BigRational(static_cast<long>(n));
}

HighPrecision fourier_dedekind_float(const DedekindSumSpec& spec) {
  validate(spec);
  const std::int64_t n = spec.modulus;
  if (n == 1) return 0;
  const HighPrecision two_pi = 2 * boost::math::constants::pi<HighPrecision>();
  HighPrecision re_sum = 0, im_sum = 0;
  for (std::int64_t k = 1; k < n; ++k) {
    HighPrecision angle = two_pi * floor_mod(mul_mod(k, spec.t, n), n) / n;
    HighPrecision re = cos(angle), im = sin(angle);
    for (std::int64_t c : spec.residues) {
      HighPrecision a = two_pi * mul_mod(k, c, n) / n;
      HighPrecision dr = cos(a) - 1, di = sin(a);
      HighPrecision norm = dr * dr + di * di;
      HighPrecision nr = (re * dr + im * di) / norm;
      HighPrecision ni = (im * dr - re * di) / norm;
      re = nr;
      im = ni;
    }
    re_sum += re;
    im_sum += im;
  }
  return re_sum / n;
}

std::int64_t PairReduction::linear_residue(Vec2 b) const {
  return floor_mod(mul_mod(a1, b.x, modulus) + mul_mod(a2, b.y, modulus), modulus);
}

DedekindSumSpec PairReduction::spec_at(Vec2 b) const {
  return {floor_mod(linear_residue(b) + shift, modulus), residues, modulus};
}

PairReduction reduce_pair(const ColumnMatrix& mat, std::size_t i, std::size_t j, std::optional<std::size_t> aux) {
  const std::size_t n = mat.size();
  if (i >= n || j >= n) throw Error(Errc::IndexOutOfRange, "pair index out of range");
  if (i >= j) throw Error(Errc::PreconditionFailed, "pair needs i < j");
  if (n < 3) throw Error(Errc::PreconditionFailed, "pair reduction needs a third column");
  if (!mat.is_one_prime()) throw Error(Errc::NotOnePrime, "matrix is not 1-prime");
  const std::int64_t y_ij = mat.minor(i, j);
  const std::int64_t modulus = y_ij < 0 ? -y_ij : y_ij;
  if (modulus < 2) throw Error(Errc::PreconditionFailed, "pair has |Y_ij| < 2; its sum is empty");

  std::size_t m = 0;
  if (aux) {
    m = *aux;
    if (m >= n || m == i || m == j) throw Error(Errc::PreconditionFailed, "auxiliary column must differ from i, j");
  } else {
    while (m == i || m == j) ++m;
  }

  // Smallest |f| + |g| with gcd(f*Y_im + g*Y_jm, Y_ij) = 1.
  const std::int64_t y_im = mat.minor(i, m);
  const std::int64_t y_jm = mat.minor(j, m);
  std::optional<std::pair<std::int64_t, std::int64_t>> fg;
  for (std::int64_t s = 1; s <= 2 * modulus && !fg; ++s) {
    for (std::int64_t f = s; f >= -s && !fg; --f) {
      std::int64_t rest = s - (f < 0 ? -f : f);
      for (std::int64_t g : {rest, -rest}) {
        if (std::gcd(f * y_im + g * y_jm, modulus) == 1) {
          fg.emplace(f, g);
          break;
        }
        if (rest == 0) break;
      }
    }
  }
  if (!fg) throw Error(Errc::NotOnePrime, "no (f, g) makes f*Y_im + g*Y_jm a unit");

  PairReduction red;
  red.i = i;
  red.j = j;
  red.m = m;
  red.f = fg->first;
  red.g = fg->second;
  red.modulus = modulus;

  const Vec2 ci = mat.column(i), cj = mat.column(j);
  const std::int64_t inv = mod_inverse(red.f * y_im + red.g * y_jm, modulus);
  const std::int64_t ys = red.f * ci.y + red.g * cj.y;  // f y_i + g y_j
  const std::int64_t xs = red.f * ci.x + red.g * cj.x;  // f x_i + g x_j
  std::int64_t shift = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (h == i || h == j) continue;
    const Vec2 ch = mat.column(h);
    std::int64_t c = mul_mod(inv, -ys * ch.x + xs * ch.y, modulus);
    if (std::gcd(c, modulus) != 1) {
      throw Error(Errc::NotOnePrime, "residue " + std::to_string(c) + " is not a unit mod " + std::to_string(modulus));
    }
    red.residues.push_back(c);
    shift = (shift + c) % modulus;
  }
  red.a1 = mul_mod(inv, -ys, modulus);
  red.a2 = mul_mod(inv, xs, modulus);
  red.shift = shift;
  return red;
}

ResidueTable residue_table(const PairReduction& red) {
  const std::int64_t n = red.modulus;
  ResidueTable table{n, {}};
  if (n == 1) return table;
  // sigma_s = q_{(-s) mod n} - Q(1)/n where Q = prod (x^c - 1)^{-1} has degree <= n-2:
  // multiplying by x^s rotates the coefficients mod x^n - 1, and reducing
  // mod 1 + ... + x^{n-1} subtracts the x^{n-1} coefficient from the rest.
  const UniPoly q = inverse_product(red.residues, n, all_ones(n));
  const BigRational mean = q.evaluate(1) / BigRational(static_cast<long>(n));
  table.values.reserve(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    std::int64_t s = floor_mod(r + red.shift, n);
    table.values.push_back(q.coefficient(static_cast<std::size_t>(floor_mod(-s, n))) - mean);
  }
  return table;
}

}  // namespace vpart
