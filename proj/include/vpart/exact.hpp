#pragma once

// Exact integer/rational arithmetic and polynomial algebra over Q.
//
// BigInt and BigRational are GMP values. mpq_class arithmetic keeps results
// canonical (lowest terms, positive denominator); values built from a raw
// numerator/denominator pair must go through make_rational().

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vpart {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// num/den in lowest terms. Throws PreconditionFailed when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Inverse of to_string. Accepts "p", "-p", "p/q". Throws InvalidInput.
BigRational parse_rational(std::string_view text);

BigInt floor(const BigRational& q);

/// {q} = q - floor(q), always in [0, 1).
BigRational fractional_part(const BigRational& q);

BigInt factorial(unsigned k);

struct ExtGcd {
  std::int64_t g;
  std::int64_t u;
  std::int64_t v;
};

/// g = gcd(a, b) >= 0 with u*a + v*b = g. gcd(0, 0) = 0 with u = v = 0.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// Representative of a mod n in [0, n). n > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t n);

/// Inverse of a modulo n, in [1, n-1]. a is reduced mod n first.
/// n = 1 returns 0 (the only residue). Throws NotCoprime if gcd(a, n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

/// (a * b) mod n in [0, n) without intermediate overflow.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);

// ---------------------------------------------------------------------------

/// Dense univariate polynomial with rational coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coefficients);

  static UniPoly constant(const BigRational& c);
  /// c * x^degree
  static UniPoly monomial(std::size_t degree, const BigRational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^i; zero beyond the degree.
  BigRational coefficient(std::size_t i) const;
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  const BigRational& leading() const;

  BigRational evaluate(const BigRational& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const BigRational& s);
  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const BigRational& s) { return lhs *= s; }

  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws PreconditionFailed for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

/// r with r*p ≡ 1 (mod m) and deg r < deg m. Throws NotInvertible when gcd(p, m) != 1.
UniPoly poly_invert_mod(const UniPoly& p, const UniPoly& m);

// ---------------------------------------------------------------------------

/// Exponent pair (i, j) of x^i y^j. Also used as a derivative order.
struct Monomial {
  int x = 0;
  int y = 0;

  int total() const noexcept { return x + y; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in (x, y) with rational coefficients; no zero terms stored.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, BigRational>;

  BivarPoly() = default;

  static BivarPoly constant(const BigRational& c);
  static BivarPoly term(Monomial m, const BigRational& c);
  /// a*x + b*y
  static BivarPoly linear(const BigRational& a, const BigRational& b);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigRational coefficient(Monomial m) const;

  /// max(i + j) over the terms; -1 for the zero polynomial.
  int total_degree() const noexcept;
  /// True when every term has total degree d (the zero polynomial qualifies).
  bool is_homogeneous(int d) const noexcept;

  BigRational evaluate(const BigRational& x, const BigRational& y) const;
  BigRational evaluate(std::int64_t x, std::int64_t y) const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BigRational& s);
  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend BivarPoly operator*(BivarPoly lhs, const BigRational& s) { return lhs *= s; }

  friend bool operator==(const BivarPoly& lhs, const BivarPoly& rhs) = default;

 private:
  void add_term(Monomial m, const BigRational& c);

  Terms terms_;
};

BivarPoly pow(const BivarPoly& p, unsigned k);

/// Partial derivative d^{v.x}/dx d^{v.y}/dy of p.
BivarPoly bivar_diff(const BivarPoly& p, Monomial v);

}  // namespace vpart
