#include "bargain/characterize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bargain {

MaxMinStats max_min_stats(const Collection& a) {
  MaxMinStats s;
  auto coord = [&](int i, int c) { return c == 0 ? a.at(i).u1 : a.at(i).u2; };
  for (int c = 0; c < 2; ++c) {
    s.m_max[c] = coord(0, c);
    s.m_min[c] = coord(0, c);
    for (int i = 1; i < a.size(); ++i) {
      s.m_max[c] = max(s.m_max[c], coord(i, c));
      s.m_min[c] = min(s.m_min[c], coord(i, c));
    }
    s.argmax[c] = IndexSet(a.size());
    for (int i = 0; i < a.size(); ++i) {
      if (coord(i, c) == s.m_max[c]) s.argmax[c].set(i);
    }
  }
  return s;
}

IndexSet pe_set(const Collection& a) {
  IndexSet pe(a.size());
  for (int i = 0; i < a.size(); ++i) {
    bool dominated = false;
    for (int j = 0; j < a.size() && !dominated; ++j) {
      dominated = dominates(a.at(j), a.at(i), Dominance::kStrict);
    }
    if (!dominated) pe.set(i);
  }
  return pe;
}

namespace {

std::vector<Point> sorted_unique(std::set<Point>&& s) {
  return std::vector<Point>(s.begin(), s.end());
}

NeoSets assemble(std::set<Point>&& ag, std::set<Point>&& dis) {
  NeoSets out;
  std::set<Point> all = ag;
  all.insert(dis.begin(), dis.end());
  out.ag = sorted_unique(std::move(ag));
  out.dis = sorted_unique(std::move(dis));
  out.neo = sorted_unique(std::move(all));
  return out;
}

std::vector<Point> afp_points(const Collection& a, int afp_cap) {
  if (a.size() <= afp_cap) return enumerate_afps_oracle(a, afp_cap).distinct;
  if (a.symmetric()) {
    std::vector<Point> pts;
    for (const auto& w : enumerate_diagonal_afps(a)) pts.push_back(w.x);
    return pts;
  }
  throw std::runtime_error(
      "fixed-point enumeration infeasible: collection exceeds the oracle cap and is not "
      "symmetric");
}

}  // namespace

NeoSets sa_delta_neo(const Collection& a, const Rational& delta, int afp_cap) {
  if (delta <= Rational(0) || delta > Rational(1)) {
    throw std::invalid_argument("agreement weight must lie in (0, 1]");
  }
  std::vector<Point> afps = afp_points(a, afp_cap);
  IndexSet pe = pe_set(a);

  std::set<Point> ag, dis;
  Rational keep = Rational(1) - delta;
  for (int i : pe.to_indices()) {
    const Point& pa = a.at(i);
    for (const Point& x : afps) {
      if (!dominates(pa, x, Dominance::kWeak)) continue;
      ag.insert({keep * pa.u1 + delta * x.u1, keep * pa.u2 + delta * x.u2});
    }
  }
  for (const Point& x : afps) {
    bool dominated = false;
    for (int i = 0; i < a.size() && !dominated; ++i) {
      dominated = dominates(a.at(i), x, Dominance::kStrict);
    }
    if (!dominated) dis.insert(x);
  }
  return assemble(std::move(ag), std::move(dis));
}

NeoSets cudd_neo(const Collection& a) {
  MaxMinStats s = max_min_stats(a);
  Rational half(1, 2);
  Point threshold{(s.m_max[0] + s.m_min[0]) * half, (s.m_max[1] + s.m_min[1]) * half};

  std::set<Point> ag, dis;
  for (int i = 0; i < a.size(); ++i) {
    if (dominates(a.at(i), threshold, Dominance::kWeak)) ag.insert(a.at(i));
  }
  for (int b : s.argmax[0].to_indices()) {
    for (int c : s.argmax[1].to_indices()) {
      dis.insert({(a.at(b).u1 + a.at(c).u1) * half, (a.at(b).u2 + a.at(c).u2) * half});
    }
  }
  return assemble(std::move(ag), std::move(dis));
}

bool is_eps_pareto_efficient(const Collection& a, const Point& x, const Rational& eps) {
  if (eps < Rational(0)) throw std::invalid_argument("tolerance must be nonnegative");
  Point z{x.u1 + eps, x.u2 + eps};
  for (const Point& p : a.alternatives()) {
    if (dominates(p, z, Dominance::kStrict)) return false;
  }
  return true;
}

bool is_eps_close_to_frontier(const Collection& a, const Point& x, const Rational& eps) {
  if (eps < Rational(0)) throw std::invalid_argument("tolerance must be nonnegative");
  Point z{x.u1 + eps, x.u2 + eps};
  int n = a.size();
  for (int i = 0; i < n; ++i) {
    if (dominates(a.at(i), z, Dominance::kStrict)) return false;
  }
  // On the segment from p to q the slack f(t) = min(f1, f2) with
  // fi(t) = p_i - z_i + t (q_i - p_i) peaks at an endpoint (covered above)
  // or where f1 = f2.
  for (int i = 0; i < n; ++i) {
    const Point& p = a.at(i);
    Rational f1p = p.u1 - z.u1, f2p = p.u2 - z.u2;
    for (int j = i + 1; j < n; ++j) {
      const Point& q = a.at(j);
      Rational d1 = q.u1 - p.u1, d2 = q.u2 - p.u2;
      if (d1 == d2) continue;
      Rational t = (f2p - f1p) / (d1 - d2);
      if (t <= Rational(0) || t >= Rational(1)) continue;
      if (f1p + t * d1 > Rational(0) && f2p + t * d2 > Rational(0)) return false;
    }
  }
  return true;
}

Collection pie_collection(int k) {
  if (k < 1) throw std::invalid_argument("grid resolution must be positive");
  std::vector<Point> pts;
  for (int c = 0; c <= k; ++c) {
    for (int d = 0; c + d <= k; ++d) {
      pts.push_back({Rational(c, k), Rational(d, k)});
    }
  }
  return Collection(pts);
}

std::pair<Rational, Rational> pie_reference_x(const Rational& precision) {
  if (precision <= Rational(0)) throw std::invalid_argument("precision must be positive");
  auto f = [](const Rational& v) { return v * v * v - v + Rational(1, 3); };
  Rational lo(0), hi(1, 2);
  if (f(lo).sign() <= 0 || f(hi).sign() >= 0) throw std::logic_error("missing sign change");
  Rational half(1, 2);
  while (hi - lo > precision) {
    Rational mid = (lo + hi) * half;
    int s = f(mid).sign();
    if (s == 0) return {mid, mid};
    (s > 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

Rational segment_distance(const Point& x, const Rational& x_lo) {
  if (x_lo < Rational(0) || x_lo > Rational(1, 2)) {
    throw std::invalid_argument("segment parameter must lie in [0, 1/2]");
  }
  Rational t = (x.u1 + Rational(1) - x.u2) * Rational(1, 2);
  t = min(max(t, x_lo), Rational(1) - x_lo);
  return max(abs(x.u1 - t), abs(x.u2 - (Rational(1) - t)));
}

}  // namespace bargain
