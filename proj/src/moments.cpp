#include "vpart/moments.hpp"

#include <functional>
#include <vector>

#include "vpart/error.hpp"

namespace vpart {
namespace {

/// Visits every composition of total into parts.size() nonnegative parts.
void for_each_composition(int total, std::vector<int>& parts, std::size_t pos,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (pos + 1 == parts.size()) {
    parts[pos] = total;
    visit(parts);
    return;
  }
  for (int k = 0; k <= total; ++k) {
    parts[pos] = k;
    for_each_composition(total - k, parts, pos + 1, visit);
  }
}

BigInt ipow(std::int64_t base, int e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

BigRational moment(std::span<const Vec2> columns, Monomial v) {
  if (v.x < 0 || v.y < 0) throw Error(Errc::PreconditionFailed, "negative derivative order");
  const std::size_t n = columns.size();
  if (n == 0) return v.total() == 0 ? BigRational(1) : BigRational(0);

  const BigInt vx_fact = factorial(static_cast<unsigned>(v.x));
  const BigInt vy_fact = factorial(static_cast<unsigned>(v.y));
  BigRational sum = 0;
  std::vector<int> ks(n), ls(n);
  for_each_composition(v.x, ks, 0, [&](const std::vector<int>& k) {
    for_each_composition(v.y, ls, 0, [&](const std::vector<int>& l) {
      BigInt num = vx_fact * vy_fact;
      BigInt den = 1;
      for (std::size_t j = 0; j < n; ++j) {
        num *= ipow(columns[j].x, k[j]) * ipow(columns[j].y, l[j]);
        den *= factorial(static_cast<unsigned>(k[j])) * factorial(static_cast<unsigned>(l[j])) * (k[j] + l[j] + 1);
      }
      sum += make_rational(num, den);
    });
  });
  return v.total() % 2 == 0 ? sum : BigRational(-sum);
}

MomentTable::MomentTable(const ColumnMatrix& m, int max_order) : max_order_(max_order) {
  for (int total = 0; total <= max_order; ++total) {
    for (int vx = 0; vx <= total; ++vx) {
      Monomial v{vx, total - vx};
      values_.emplace(v, moment(m, v));
    }
  }
}

const BigRational& MomentTable::operator()(Monomial v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw Error(Errc::OrderTooHigh, "moment order beyond table");
  return it->second;
}

}  // namespace vpart
