#include "vpart/exact.hpp"

#include <algorithm>
#include <cctype>

#include "vpart/error.hpp"

namespace vpart {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::PreconditionFailed, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  BigInt num;
  BigInt den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok || den == 0) {
    throw Error(Errc::InvalidInput, "not a rational: '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

BigInt floor(const BigRational& q) {
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

BigRational fractional_part(const BigRational& q) { return q - BigRational(floor(q)); }

BigInt factorial(unsigned k) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  if (old_r == 0) return {0, 0, 0};
  return {old_r, old_s, old_t};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n < 1) throw Error(Errc::PreconditionFailed, "modulus must be positive");
  if (n == 1) return 0;
  std::int64_t reduced = floor_mod(a, n);
  ExtGcd e = ext_gcd(reduced, n);
  if (e.g != 1) {
    throw Error(Errc::NotCoprime,
                std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  return floor_mod(e.u, n);
}

__extension__ using Wide = __int128;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  Wide p = static_cast<Wide>(floor_mod(a, n)) * floor_mod(b, n);
  return static_cast<std::int64_t>(p % n);
}

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(std::size_t degree, const BigRational& c) {
  std::vector<BigRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

BigRational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

const BigRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::PreconditionFailed, "zero polynomial has no leading term");
  return coeffs_.back();
}

BigRational UniPoly::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::PreconditionFailed, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<BigRational> rem = a.coefficients();
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  const BigRational& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top] == 0) continue;
    BigRational factor = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= factor * bc[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_invert_mod(const UniPoly& p, const UniPoly& m) {
  if (m.is_zero()) throw Error(Errc::PreconditionFailed, "zero modulus polynomial");
  if (m.degree() == 0) return {};

  // Extended Euclid tracking only the cofactor of p.
  UniPoly r0 = m, r1 = p % m;
  UniPoly s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    UniPoly next = s0 - q * s1;
    s0 = std::exchange(s1, std::move(next));
  }
  if (r0.degree() != 0) throw Error(Errc::NotInvertible, "polynomial shares a factor with the modulus");
  return (s0 * (BigRational(1) / r0.leading())) % m;
}

// --- BivarPoly -------------------------------------------------------------

BivarPoly BivarPoly::constant(const BigRational& c) { return term({0, 0}, c); }

BivarPoly BivarPoly::term(Monomial m, const BigRational& c) {
  BivarPoly p;
  p.add_term(m, c);
  return p;
}

BivarPoly BivarPoly::linear(const BigRational& a, const BigRational& b) {
  BivarPoly p;
  p.add_term({1, 0}, a);
  p.add_term({0, 1}, b);
  return p;
}

void BivarPoly::add_term(Monomial m, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational BivarPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int BivarPoly::total_degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

bool BivarPoly::is_homogeneous(int d) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.total() == d; });
}

BigRational BivarPoly::evaluate(const BigRational& x, const BigRational& y) const {
  int deg = std::max(total_degree(), 0);
  std::vector<BigRational> xp(static_cast<std::size_t>(deg) + 1), yp(static_cast<std::size_t>(deg) + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (std::size_t k = 1; k < xp.size(); ++k) {
    xp[k] = xp[k - 1] * x;
    yp[k] = yp[k - 1] * y;
  }
  BigRational acc = 0;
  for (const auto& [m, c] : terms_) {
    acc += c * xp[static_cast<std::size_t>(m.x)] * yp[static_cast<std::size_t>(m.y)];
  }
  return acc;
}

BigRational BivarPoly::evaluate(std::int64_t x, std::int64_t y) const {
  return evaluate(BigRational(static_cast<long>(x)), BigRational(static_cast<long>(y)));
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BigRational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
  }
  return out;
}

BivarPoly pow(const BivarPoly& p, unsigned k) {
  BivarPoly result = BivarPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

BivarPoly bivar_diff(const BivarPoly& p, Monomial v) {
  BivarPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.x < v.x || m.y < v.y) continue;
    // falling factorials i!/(i-vx)! and j!/(j-vy)!
    BigInt scale = 1;
    for (int k = 0; k < v.x; ++k) scale *= m.x - k;
    for (int k = 0; k < v.y; ++k) scale *= m.y - k;
    out += BivarPoly::term({m.x - v.x, m.y - v.y}, c * BigRational(scale));
  }
  return out;
}

}  // namespace vpart
