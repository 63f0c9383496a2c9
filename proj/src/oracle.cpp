#include "vpart/oracle.hpp"

#include <algorithm>
#include <thread>

#include "vpart/error.hpp"

namespace vpart {
namespace {

/// Closed cone of a set of columns in an open half-plane, kept as its two extreme rays.
struct Cone {
  Vec2 first;
  Vec2 last;

  bool contains(Vec2 r) const {
    if (det(first, last) == 0) return det(first, r) == 0 && dot(first, r) >= 0;
    return det(first, r) >= 0 && det(r, last) >= 0;
  }
};

class Enumerator {
 public:
  Enumerator(std::span<const Vec2> cols, Vec2 u, bool collect, std::size_t cap)
      : cols_(cols), u_(u), collect_(collect), cap_(cap), x_(cols.size(), 0) {
    // suffix_[i] spans columns i..n-1
    for (std::size_t i = 0; i < cols.size(); ++i) {
      auto sorted = *sort_by_angle(cols.subspan(i));
      suffix_.push_back({sorted.front(), sorted.back()});
    }
  }

  void run(Vec2 b) {
    if (suffix_[0].contains(b)) descend(0, b);
  }

  CountResult result;

 private:
  void record() {
    ++result.count;
    if (collect_ && result.solutions.size() < cap_) {
      result.solutions.emplace_back(x_.begin(), x_.end());
    }
  }

  // Invariant: r lies in the cone of columns idx..n-1.
  void descend(std::size_t idx, Vec2 r) {
    const std::size_t n = cols_.size();
    if (idx + 2 == n) {
      solve_last_two(r);
      return;
    }
    const Vec2 c = cols_[idx];
    const std::int64_t reach = dot(u_, r) / dot(u_, c);
    for (std::int64_t k = 0; k <= reach; ++k) {
      Vec2 rest = r - k * c;
      if (!suffix_[idx + 1].contains(rest)) continue;
      x_[idx] = static_cast<std::uint64_t>(k);
      descend(idx + 1, rest);
    }
    x_[idx] = 0;
  }

  void solve_last_two(Vec2 r) {
    const std::size_t n = cols_.size();
    const Vec2 a = cols_[n - 2], b = cols_[n - 1];
    const std::int64_t d = det(a, b);
    if (d != 0) {
      // Cramer's rule: r = s a + t b.
      const std::int64_t s_num = det(r, b), t_num = det(a, r);
      if (s_num % d != 0 || t_num % d != 0) return;
      const std::int64_t s = s_num / d, t = t_num / d;
      if (s < 0 || t < 0) return;
      x_[n - 2] = static_cast<std::uint64_t>(s);
      x_[n - 1] = static_cast<std::uint64_t>(t);
      record();
      x_[n - 2] = x_[n - 1] = 0;
      return;
    }
    const std::int64_t reach = dot(u_, r) / dot(u_, a);
    for (std::int64_t k = 0; k <= reach; ++k) {
      Vec2 rest = r - k * a;
      if (det(b, rest) != 0 || dot(b, rest) < 0) continue;
      // rest = t b with t >= 0 integral
      const std::int64_t t = b.x != 0 ? rest.x / b.x : rest.y / b.y;
      if (t * b.x != rest.x || t * b.y != rest.y) continue;
      x_[n - 2] = static_cast<std::uint64_t>(k);
      x_[n - 1] = static_cast<std::uint64_t>(t);
      record();
    }
    x_[n - 2] = x_[n - 1] = 0;
  }

  std::span<const Vec2> cols_;
  Vec2 u_;
  bool collect_;
  std::size_t cap_;
  std::vector<std::uint64_t> x_;
  std::vector<Cone> suffix_;
};

}  // namespace

CountResult brute_count(std::span<const Vec2> columns, Vec2 b, bool collect, std::size_t max_solutions) {
  if (columns.size() < 2) throw Error(Errc::TooFewColumns, "need at least two columns");
  if (std::any_of(columns.begin(), columns.end(), [](Vec2 c) { return c == Vec2{}; })) {
    throw Error(Errc::ZeroColumn, "zero column");
  }
  auto sorted = sort_by_angle(columns);
  if (!sorted) throw Error(Errc::OriginInHull, "columns do not lie in an open half-plane");
  const Vec2 u = separating_direction(*sorted);
  Enumerator e(columns, u, collect, max_solutions);
  e.run(b);
  return std::move(e.result);
}

std::vector<Mismatch> grid_verify(const QuasiPolynomial& q, std::int64_t radius, unsigned jobs) {
  const ColumnMatrix& m = q.matrix();
  const Vec2 u = m.separating_direction();
  std::vector<Vec2> points;
  for (std::int64_t x = -radius; x <= radius; ++x) {
    for (std::int64_t y = -radius; y <= radius; ++y) {
      if (dot(u, {x, y}) >= 0) points.push_back({x, y});
    }
  }

  auto check = [&](Vec2 b) -> std::optional<Mismatch> {
    const std::uint64_t oracle = brute_count(m, b).count;
    std::string closed;
    try {
      BigInt value = evaluate_count(q, b);
      if (value == static_cast<unsigned long>(oracle)) return std::nullopt;
      closed = value.get_str();
    } catch (const Error& e) {
      closed = e.what();
    }
    return Mismatch{b, closed, oracle};
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  std::vector<std::optional<Mismatch>> slots(points.size());
  if (jobs == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) slots[i] = check(points[i]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += jobs) slots[i] = check(points[i]);
      });
    }
    for (auto& t : workers) t.join();
  }

  std::vector<Mismatch> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace vpart
