#include "bargain/afp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace bargain {

namespace {

IndexSet boundary_of(const Collection& a, const Point& x) {
  return quadrant(a, x, Rel::kLe, Rel::kLe) - quadrant(a, x, Rel::kLt, Rel::kLt);
}

IndexSet outside_closed(const Collection& a, const Point& x) {
  return quadrant(a, x, Rel::kLe, Rel::kLe).complement();
}

constexpr std::int64_t kDpTargetBudget = 1 << 22;
constexpr int kEnumFallbackCap = 25;

// Subset of positive values summing exactly to target (>= 0). Scaled-integer
// reachability DP with parent reconstruction; enumeration fallback when the
// scaled target is out of DP range.
std::optional<std::vector<int>> subset_with_sum(const std::vector<Rational>& values,
                                                const Rational& target) {
  if (target.sign() < 0) return std::nullopt;
  if (target.sign() == 0) return std::vector<int>{};

  mpz_class common = target.den();
  for (const auto& v : values) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.den().get_mpz_t());
  }

  mpz_class scaled_target_z = target.num() * (common / target.den());
  bool dp_ok = mpz_fits_slong_p(scaled_target_z.get_mpz_t()) &&
               scaled_target_z.get_si() <= kDpTargetBudget;

  if (dp_ok) {
    std::int64_t t = scaled_target_z.get_si();
    std::vector<std::int64_t> item(values.size());
    std::vector<int> kept;
    for (size_t i = 0; i < values.size(); ++i) {
      mpz_class s = values[i].num() * (common / values[i].den());
      if (!mpz_fits_slong_p(s.get_mpz_t()) || s.get_si() > t) continue;
      item[kept.size()] = s.get_si();
      kept.push_back(static_cast<int>(i));
    }
    std::vector<std::int32_t> parent(t + 1, -1);
    std::vector<bool> reach(t + 1, false);
    reach[0] = true;
    for (size_t k = 0; k < kept.size() && !reach[t]; ++k) {
      std::int64_t v = item[k];
      for (std::int64_t s = t; s >= v; --s) {
        if (!reach[s] && reach[s - v]) {
          reach[s] = true;
          parent[s] = static_cast<std::int32_t>(k);
        }
      }
    }
    if (!reach[t]) return std::nullopt;
    std::vector<int> out;
    for (std::int64_t s = t; s > 0;) {
      std::int32_t k = parent[s];
      out.push_back(kept[k]);
      s -= item[k];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  if (values.size() > kEnumFallbackCap) {
    throw std::runtime_error("boundary subset search infeasible");
  }
  // Gray-code walk keeping an exact running sum.
  int m = static_cast<int>(values.size());
  Rational sum = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t(1) << m); ++k) {
    std::uint64_t gray = k ^ (k >> 1);
    int bit = std::countr_zero(prev ^ gray);
    if (gray & (std::uint64_t(1) << bit)) {
      sum += values[bit];
    } else {
      sum -= values[bit];
    }
    prev = gray;
    if (sum == target) {
      std::vector<int> out;
      for (int i = 0; i < m; ++i) {
        if (gray & (std::uint64_t(1) << i)) out.push_back(i);
      }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

bool validate_witness(const Collection& a, const AveragingWitness& w) {
  if (w.s.universe() != a.size() || w.s.empty()) return false;
  if (weighted_avg(a, w.s) != w.x) return false;
  IndexSet outside = outside_closed(a, w.x);
  IndexSet allowed = quadrant(a, w.x, Rel::kLt, Rel::kLt).complement();
  if (!w.s.contains(outside)) return false;
  if (!allowed.contains(w.s)) return false;
  if (w.boundary_included != (w.s & boundary_of(a, w.x))) return false;
  return true;
}

IterationResult iterate_boundaries_included(const Collection& a) {
  std::vector<Point> trace;
  IndexSet s = IndexSet::full(a.size());
  Point x = weighted_avg(a, s);
  trace.push_back(x);
  for (int step = 0; step <= a.size() + 1; ++step) {
    IndexSet next_s = quadrant(a, x, Rel::kLt, Rel::kLt).complement();
    Point next = weighted_avg(a, next_s);
    if (next == x) {
      AveragingWitness w{x, next_s, next_s & boundary_of(a, x)};
      return {std::move(w), std::move(trace)};
    }
    x = next;
    trace.push_back(x);
    if (static_cast<int>(trace.size()) > a.size() + 1) break;
  }
  throw std::logic_error("averaging iteration failed to stabilize within n+1 steps");
}

namespace {

struct OracleInt64 {
  // Coordinates scaled by d, weights scaled so all sums stay below 2^62;
  // x = (s1/(d*w), s2/(d*w)) and comparisons reduce to c_j * w vs s.
  std::vector<std::int64_t> c1, c2, wt;
  std::int64_t d = 1;

  static std::optional<OracleInt64> build(const Collection& a) {
    mpz_class dz = 1, dwz = 1;
    for (int i = 0; i < a.size(); ++i) {
      mpz_lcm(dz.get_mpz_t(), dz.get_mpz_t(), a.at(i).u1.den().get_mpz_t());
      mpz_lcm(dz.get_mpz_t(), dz.get_mpz_t(), a.at(i).u2.den().get_mpz_t());
      mpz_lcm(dwz.get_mpz_t(), dwz.get_mpz_t(), a.weights()[i].den().get_mpz_t());
    }
    mpz_class peak = 0;
    for (int i = 0; i < a.size(); ++i) {
      mpz_class w = a.weights()[i].num() * (dwz / a.weights()[i].den());
      if (w > peak) peak = w;
    }
    // All products compared are bounded by n * max_weight * d.
    mpz_class bound = peak * dz * a.size();
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) >= 62) return std::nullopt;
    OracleInt64 t;
    t.d = dz.get_si();
    t.c1.resize(a.size());
    t.c2.resize(a.size());
    t.wt.resize(a.size());
    for (int i = 0; i < a.size(); ++i) {
      mpz_class v1 = a.at(i).u1.num() * (dz / a.at(i).u1.den());
      mpz_class v2 = a.at(i).u2.num() * (dz / a.at(i).u2.den());
      mpz_class w = a.weights()[i].num() * (dwz / a.weights()[i].den());
      t.c1[i] = v1.get_si();
      t.c2[i] = v2.get_si();
      t.wt[i] = w.get_si();
    }
    return t;
  }
};

}  // namespace

AfpEnumeration enumerate_afps_oracle(const Collection& a, int cap) {
  int n = a.size();
  if (n > cap) {
    throw std::invalid_argument("oracle enumeration over " + std::to_string(n) +
                                " alternatives exceeds cap " + std::to_string(cap));
  }
  AfpEnumeration result;
  std::map<Point, bool> distinct;
  auto fast = OracleInt64::build(a);

  auto accept = [&](std::uint64_t mask, const Point& x) {
    IndexSet s = IndexSet::from_mask(n, mask);
    AveragingWitness w{x, s, s & boundary_of(a, x)};
    result.witnesses.push_back(std::move(w));
    distinct.emplace(x, true);
  };

  if (fast) {
    std::int64_t s1 = 0, s2 = 0, w = 0;
    std::uint64_t prev = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t(1) << n); ++k) {
      std::uint64_t gray = k ^ (k >> 1);
      int bit = std::countr_zero(prev ^ gray);
      if (gray & (std::uint64_t(1) << bit)) {
        s1 += fast->wt[bit] * fast->c1[bit];
        s2 += fast->wt[bit] * fast->c2[bit];
        w += fast->wt[bit];
      } else {
        s1 -= fast->wt[bit] * fast->c1[bit];
        s2 -= fast->wt[bit] * fast->c2[bit];
        w -= fast->wt[bit];
      }
      prev = gray;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        std::int64_t p1 = fast->c1[j] * w, p2 = fast->c2[j] * w;
        if (gray & (std::uint64_t(1) << j)) {
          ok = !(p1 < s1 && p2 < s2);  // members must not be strictly below x
        } else {
          ok = p1 <= s1 && p2 <= s2;  // non-members must be weakly below x
        }
      }
      if (ok) {
        Rational denom(fast->d, 1);
        Point x{Rational(s1, 1) / (denom * Rational(w, 1)),
                Rational(s2, 1) / (denom * Rational(w, 1))};
        accept(gray, x);
      }
    }
  } else {
    Rational s1 = 0, s2 = 0, w = 0;
    std::uint64_t prev = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t(1) << n); ++k) {
      std::uint64_t gray = k ^ (k >> 1);
      int bit = std::countr_zero(prev ^ gray);
      const auto& pt = a.at(bit);
      const auto& wt = a.weights()[bit];
      if (gray & (std::uint64_t(1) << bit)) {
        s1 += wt * pt.u1;
        s2 += wt * pt.u2;
        w += wt;
      } else {
        s1 -= wt * pt.u1;
        s2 -= wt * pt.u2;
        w -= wt;
      }
      prev = gray;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        Rational p1 = a.at(j).u1 * w, p2 = a.at(j).u2 * w;
        if (gray & (std::uint64_t(1) << j)) {
          ok = !(p1 < s1 && p2 < s2);
        } else {
          ok = p1 <= s1 && p2 <= s2;
        }
      }
      if (ok) accept(gray, {s1 / w, s2 / w});
    }
  }

  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const AveragingWitness& l, const AveragingWitness& r) {
              if (l.x != r.x) return l.x < r.x;
              return l.s < r.s;
            });
  for (const auto& [x, unused] : distinct) result.distinct.push_back(x);
  return result;
}

std::optional<AveragingWitness> is_afp(const Collection& a, const Point& x) {
  IndexSet m = outside_closed(a, x);
  IndexSet boundary = boundary_of(a, x);

  // Split the boundary: vertical points (u1 == x1, u2 < x2) only shift the
  // second coordinate sum, horizontal points only the first, and corner
  // duplicates (== x) shift nothing. The two completions are independent
  // subset-sum problems.
  std::vector<int> vertical, horizontal, corner;
  for (int i : boundary.to_indices()) {
    const Point& p = a.at(i);
    if (p == x) {
      corner.push_back(i);
    } else if (p.u1 == x.u1) {
      vertical.push_back(i);
    } else {
      horizontal.push_back(i);
    }
  }

  Rational e1 = 0, e2 = 0;
  for (int i : m.to_indices()) {
    e1 += a.weights()[i] * (a.at(i).u1 - x.u1);
    e2 += a.weights()[i] * (a.at(i).u2 - x.u2);
  }

  std::vector<Rational> hvals, vvals;
  hvals.reserve(horizontal.size());
  for (int i : horizontal) hvals.push_back(a.weights()[i] * (x.u1 - a.at(i).u1));
  vvals.reserve(vertical.size());
  for (int i : vertical) vvals.push_back(a.weights()[i] * (x.u2 - a.at(i).u2));

  auto hpick = subset_with_sum(hvals, e1);
  if (!hpick) return std::nullopt;
  auto vpick = subset_with_sum(vvals, e2);
  if (!vpick) return std::nullopt;

  IndexSet s = m;
  for (int k : *hpick) s.set(horizontal[k]);
  for (int k : *vpick) s.set(vertical[k]);
  for (int i : corner) s.set(i);
  if (s.empty()) return std::nullopt;

  AveragingWitness w{x, s, s & boundary};
  return w;
}

std::vector<AveragingWitness> enumerate_diagonal_afps(const Collection& a, long grid_cap) {
  if (!a.symmetric()) {
    throw std::invalid_argument("diagonal scan needs a symmetric collection");
  }
  mpz_class grid = 1;
  for (const auto& p : a.alternatives()) {
    mpz_lcm(grid.get_mpz_t(), grid.get_mpz_t(), p.u1.den().get_mpz_t());
    mpz_lcm(grid.get_mpz_t(), grid.get_mpz_t(), p.u2.den().get_mpz_t());
  }
  if (!mpz_fits_slong_p(grid.get_mpz_t()) || grid.get_si() > grid_cap) {
    throw std::invalid_argument("no common coordinate grid within cap");
  }

  std::vector<Rational> values;
  for (const auto& p : a.alternatives()) {
    values.push_back(p.u1);
    values.push_back(p.u2);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<AveragingWitness> out;

  // One candidate per open cell between consecutive coordinate values (the
  // boundary is empty there, so the averaging set is forced), plus one
  // feasibility check per value.
  auto try_cell = [&](const Rational& lo, bool lo_open, const Rational& hi) {
    Point probe{lo, lo};
    IndexSet mset = outside_closed(a, probe);
    if (mset.empty()) return;
    Point y = weighted_avg(a, mset);
    if (y.u1 != y.u2) return;
    bool above = lo_open ? (y.u1 > lo) : (y.u1 >= lo);
    if (above && y.u1 < hi) {
      out.push_back({y, mset, IndexSet(a.size())});
    }
  };

  if (values.front() > 0) {
    Point below{-1, -1};
    IndexSet all = outside_closed(a, below);
    Point y = weighted_avg(a, all);
    if (y.u1 == y.u2 && y.u1 >= 0 && y.u1 < values.front()) {
      out.push_back({y, all, IndexSet(a.size())});
    }
  }
  for (size_t i = 0; i < values.size(); ++i) {
    Point x{values[i], values[i]};
    if (auto w = is_afp(a, x)) out.push_back(std::move(*w));
    if (i + 1 < values.size()) {
      try_cell(values[i], /*lo_open=*/true, values[i + 1]);
    }
  }

  std::sort(out.begin(), out.end(), [](const AveragingWitness& l, const AveragingWitness& r) {
    return l.x < r.x;
  });
  return out;
}

bool verify_chain(const std::vector<Point>& points) {
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (!dominates(points[i], points[j], Dominance::kWeak) &&
          !dominates(points[j], points[i], Dominance::kWeak)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace bargain
