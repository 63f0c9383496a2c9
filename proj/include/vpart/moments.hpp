#pragma once

#include <map>
#include <span>

#include "vpart/exact.hpp"
#include "vpart/lattice.hpp"

namespace vpart {

/// beta_v = (-i)^{|v|} D^v B^(0|M) as an exact rational.
///
/// With S_v = sum over compositions k of v.x and l of v.y of
///   (v.x!/prod k_j!) (v.y!/prod l_j!) prod_j x_j^{k_j} y_j^{l_j} / (k_j + l_j + 1),
/// D^v B^(0|M) = (-i)^{|v|} S_v, so beta_v = (-1)^{|v|} S_v.
BigRational moment(std::span<const Vec2> columns, Monomial v);
inline BigRational moment(const ColumnMatrix& m, Monomial v) { return moment(m.columns(), v); }

/// All beta_v with |v| <= max_order for one matrix, computed once.
class MomentTable {
 public:
  MomentTable(const ColumnMatrix& m, int max_order);

  int max_order() const noexcept { return max_order_; }
  /// Throws OrderTooHigh beyond max_order.
  const BigRational& operator()(Monomial v) const;

 private:
  int max_order_;
  std::map<Monomial, BigRational> values_;
};

}  // namespace vpart
