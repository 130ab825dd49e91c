#include "bargain/equilibria.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace bargain {

namespace {

// Exact fraction with positive denominator; not kept reduced. The table
// builder guarantees every numerator and denominator stays below 2^62, so
// cross-multiplied comparisons fit in __int128.
struct Frac {
  std::int64_t num, den;
};

int frac_cmp(const Frac& a, const Frac& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  if (l < r) return -1;
  if (l > r) return 1;
  return 0;
}

Frac frac_reduce(Frac f) {
  std::int64_t g = std::gcd(f.num < 0 ? -f.num : f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

// Subset-sum tables for the list game: weighted coordinate sums and weight
// sums per index mask, with coordinates scaled to integers. Any profile's
// payoff is O(1) integer arithmetic on its intersection and union masks.
class SaTables {
 public:
  static std::optional<SaTables> build(const Collection& eff, const Rational& delta) {
    int n = eff.size();
    if (n > 25 || !delta.fits_int64()) return std::nullopt;

    mpz_class dz = 1, dwz = 1;
    for (int i = 0; i < n; ++i) {
      mpz_lcm(dz.get_mpz_t(), dz.get_mpz_t(), eff.at(i).u1.den().get_mpz_t());
      mpz_lcm(dz.get_mpz_t(), dz.get_mpz_t(), eff.at(i).u2.den().get_mpz_t());
      mpz_lcm(dwz.get_mpz_t(), dwz.get_mpz_t(), eff.weights()[i].den().get_mpz_t());
    }
    mpz_class wmax = 0;
    for (int i = 0; i < n; ++i) {
      mpz_class w = eff.weights()[i].num() * (dwz / eff.weights()[i].den());
      if (w > wmax) wmax = w;
    }
    // num <= 2 q n^2 wmax^2 d and den <= q d n^2 wmax^2; require < 2^62.
    mpz_class bound = 2 * delta.den() * dz * n * n * wmax * wmax;
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) >= 62) return std::nullopt;

    SaTables t;
    t.bits_ = n;
    t.d_ = dz.get_si();
    t.p_ = delta.num_i64();
    t.q_ = delta.den_i64();
    std::vector<std::int64_t> i1(n), i2(n), iw(n);
    for (int i = 0; i < n; ++i) {
      mpz_class c1 = eff.at(i).u1.num() * (dz / eff.at(i).u1.den());
      mpz_class c2 = eff.at(i).u2.num() * (dz / eff.at(i).u2.den());
      mpz_class w = eff.weights()[i].num() * (dwz / eff.weights()[i].den());
      iw[i] = w.get_si();
      i1[i] = iw[i] * c1.get_si();
      i2[i] = iw[i] * c2.get_si();
    }
    std::size_t total = std::size_t(1) << n;
    t.s1_.assign(total, 0);
    t.s2_.assign(total, 0);
    t.w_.assign(total, 0);
    for (std::size_t m = 1; m < total; ++m) {
      int b = std::countr_zero(m);
      std::size_t rest = m & (m - 1);
      t.s1_[m] = t.s1_[rest] + i1[b];
      t.s2_[m] = t.s2_[rest] + i2[b];
      t.w_[m] = t.w_[rest] + iw[b];
    }
    return t;
  }

  int bits() const { return bits_; }

  Frac pay(int coord, std::uint64_t inter, std::uint64_t uni) const {
    const auto& s = coord == 1 ? s1_ : s2_;
    if (uni == 0) return {s.back(), d_ * w_.back()};
    if (inter == 0) return {s[uni], d_ * w_[uni]};
    std::int64_t num = (q_ - p_) * s[inter] * w_[uni] + p_ * s[uni] * w_[inter];
    std::int64_t den = q_ * d_ * w_[inter] * w_[uni];
    return {num, den};
  }

  Point pay_point(std::uint64_t m1, std::uint64_t m2) const {
    Frac f1 = pay(1, m1 & m2, m1 | m2);
    Frac f2 = pay(2, m1 & m2, m1 | m2);
    return {Rational(f1.num, f1.den), Rational(f2.num, f2.den)};
  }

 private:
  std::vector<std::int64_t> s1_, s2_, w_;
  std::int64_t d_ = 1, p_ = 0, q_ = 1;
  int bits_ = 0;
};

std::optional<SaTables> tables_for(const MechanismInstance& mech, const Collection& a) {
  auto view = mech.sa_game_view(a);
  if (!view) return std::nullopt;
  return SaTables::build(view->effective, view->delta);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> chunk_ranges(std::uint64_t total,
                                                                  int threads) {
  int t = std::max(1, threads);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (int i = 0; i < t; ++i) {
    std::uint64_t lo = total / t * i + std::min<std::uint64_t>(i, total % t);
    std::uint64_t hi = lo + total / t + (static_cast<std::uint64_t>(i) < total % t ? 1 : 0);
    if (lo < hi) out.emplace_back(lo, hi);
  }
  return out;
}

void run_chunks(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ranges,
                const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (ranges.size() == 1) {
    fn(0, ranges[0].first, ranges[0].second);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    pool.emplace_back(fn, static_cast<int>(i), ranges[i].first, ranges[i].second);
  }
  for (auto& th : pool) th.join();
}

std::optional<Deviation> scan_deviation_fast(const SaTables& t, std::uint64_t m1,
                                             std::uint64_t m2) {
  std::uint64_t total = std::uint64_t(1) << t.bits();
  Frac e1 = t.pay(1, m1 & m2, m1 | m2);
  for (std::uint64_t d = 0; d < total; ++d) {
    if (d == m1) continue;
    if (frac_cmp(t.pay(1, d & m2, d | m2), e1) > 0) return Deviation{1, d};
  }
  Frac e2 = t.pay(2, m1 & m2, m1 | m2);
  for (std::uint64_t d = 0; d < total; ++d) {
    if (d == m2) continue;
    if (frac_cmp(t.pay(2, m1 & d, m1 | d), e2) > 0) return Deviation{2, d};
  }
  return std::nullopt;
}

std::optional<Deviation> scan_deviation_generic(const MechanismInstance& mech,
                                                const Collection& a, Profile p) {
  Point base = mech.payoff(a, p.s1, p.s2);
  for (std::uint64_t d = 0; d < mech.signal_count(1); ++d) {
    if (d == p.s1) continue;
    if (mech.payoff(a, d, p.s2).u1 > base.u1) return Deviation{1, d};
  }
  for (std::uint64_t d = 0; d < mech.signal_count(2); ++d) {
    if (d == p.s2) continue;
    if (mech.payoff(a, p.s1, d).u2 > base.u2) return Deviation{2, d};
  }
  return std::nullopt;
}

struct OutcomeKey {
  Frac f1, f2;
  friend bool operator<(const OutcomeKey& a, const OutcomeKey& b) {
    auto tup = [](const OutcomeKey& k) {
      return std::tuple(k.f1.num, k.f1.den, k.f2.num, k.f2.den);
    };
    return tup(a) < tup(b);
  }
};

EquilibriumReport enumerate_fast(const SaTables& t, const NeOptions& opt) {
  std::uint64_t total = std::uint64_t(1) << t.bits();
  auto ranges = chunk_ranges(total, opt.threads);

  std::vector<Frac> colmax1(total, Frac{-1, 1});
  std::vector<std::vector<Frac>> rowmax_local(ranges.size(),
                                              std::vector<Frac>(total, Frac{-1, 1}));
  run_chunks(ranges, [&](int id, std::uint64_t lo, std::uint64_t hi) {
    auto& rm = rowmax_local[id];
    for (std::uint64_t m2 = lo; m2 < hi; ++m2) {
      Frac cmax{-1, 1};
      for (std::uint64_t m1 = 0; m1 < total; ++m1) {
        std::uint64_t inter = m1 & m2, uni = m1 | m2;
        Frac e1 = t.pay(1, inter, uni);
        if (frac_cmp(e1, cmax) > 0) cmax = e1;
        Frac e2 = t.pay(2, inter, uni);
        if (frac_cmp(e2, rm[m1]) > 0) rm[m1] = e2;
      }
      colmax1[m2] = cmax;
    }
  });
  std::vector<Frac> rowmax2(total, Frac{-1, 1});
  for (const auto& rm : rowmax_local) {
    for (std::uint64_t m1 = 0; m1 < total; ++m1) {
      if (frac_cmp(rm[m1], rowmax2[m1]) > 0) rowmax2[m1] = rm[m1];
    }
  }
  rowmax_local.clear();
  rowmax_local.shrink_to_fit();

  std::vector<std::vector<Profile>> found(ranges.size());
  std::vector<std::set<OutcomeKey>> outcomes(ranges.size());
  run_chunks(ranges, [&](int id, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t m2 = lo; m2 < hi; ++m2) {
      for (std::uint64_t m1 = 0; m1 < total; ++m1) {
        std::uint64_t inter = m1 & m2, uni = m1 | m2;
        Frac e1 = t.pay(1, inter, uni);
        if (frac_cmp(e1, colmax1[m2]) != 0) continue;
        Frac e2 = t.pay(2, inter, uni);
        if (frac_cmp(e2, rowmax2[m1]) != 0) continue;
        if (opt.collect_profiles) found[id].push_back({m1, m2});
        outcomes[id].insert({frac_reduce(e1), frac_reduce(e2)});
      }
    }
  });

  EquilibriumReport report;
  report.profiles_collected = opt.collect_profiles;
  std::set<OutcomeKey> merged;
  for (auto& o : outcomes) merged.merge(o);
  std::set<Point> neo;
  for (const auto& key : merged) {
    neo.insert({Rational(key.f1.num, key.f1.den), Rational(key.f2.num, key.f2.den)});
  }
  report.neo.assign(neo.begin(), neo.end());
  if (opt.collect_profiles) {
    for (auto& chunk : found) {
      for (const auto& p : chunk) {
        report.equilibria.push_back({p, t.pay_point(p.s1, p.s2)});
      }
    }
    std::sort(report.equilibria.begin(), report.equilibria.end(),
              [](const Equilibrium& a, const Equilibrium& b) { return a.profile < b.profile; });
  }
  return report;
}

EquilibriumReport enumerate_generic(const MechanismInstance& mech, const Collection& a,
                                    const NeOptions& opt) {
  std::uint64_t c1 = mech.signal_count(1), c2 = mech.signal_count(2);
  auto ranges = chunk_ranges(c2, opt.threads);

  std::vector<Rational> colmax1(c2, Rational(-1));
  std::vector<std::vector<Rational>> rowmax_local(ranges.size(),
                                                  std::vector<Rational>(c1, Rational(-1)));
  run_chunks(ranges, [&](int id, std::uint64_t lo, std::uint64_t hi) {
    auto& rm = rowmax_local[id];
    for (std::uint64_t s2 = lo; s2 < hi; ++s2) {
      Rational cmax(-1);
      for (std::uint64_t s1 = 0; s1 < c1; ++s1) {
        Point e = mech.payoff(a, s1, s2);
        if (e.u1 > cmax) cmax = e.u1;
        if (e.u2 > rm[s1]) rm[s1] = e.u2;
      }
      colmax1[s2] = cmax;
    }
  });
  std::vector<Rational> rowmax2(c1, Rational(-1));
  for (const auto& rm : rowmax_local) {
    for (std::uint64_t s1 = 0; s1 < c1; ++s1) {
      if (rm[s1] > rowmax2[s1]) rowmax2[s1] = rm[s1];
    }
  }

  std::vector<std::vector<Equilibrium>> found(ranges.size());
  run_chunks(ranges, [&](int id, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t s2 = lo; s2 < hi; ++s2) {
      for (std::uint64_t s1 = 0; s1 < c1; ++s1) {
        Point e = mech.payoff(a, s1, s2);
        if (e.u1 == colmax1[s2] && e.u2 == rowmax2[s1]) {
          found[id].push_back({{s1, s2}, e});
        }
      }
    }
  });

  EquilibriumReport report;
  report.profiles_collected = opt.collect_profiles;
  std::set<Point> neo;
  for (auto& chunk : found) {
    for (auto& eq : chunk) {
      neo.insert(eq.outcome);
      if (opt.collect_profiles) report.equilibria.push_back(std::move(eq));
    }
  }
  report.neo.assign(neo.begin(), neo.end());
  std::sort(report.equilibria.begin(), report.equilibria.end(),
            [](const Equilibrium& a, const Equilibrium& b) { return a.profile < b.profile; });
  return report;
}

}  // namespace

Point payoffs(const MechanismInstance& mech, const Collection& a, Profile p) {
  return mech.payoff(a, p.s1, p.s2);
}

std::optional<Deviation> improving_deviation(const MechanismInstance& mech,
                                             const Collection& a, Profile p) {
  if (auto t = tables_for(mech, a)) return scan_deviation_fast(*t, p.s1, p.s2);
  return scan_deviation_generic(mech, a, p);
}

bool is_pure_ne(const MechanismInstance& mech, const Collection& a, Profile p) {
  return !improving_deviation(mech, a, p).has_value();
}

EquilibriumReport enumerate_pure_ne(const MechanismInstance& mech, const Collection& a,
                                    const NeOptions& opt) {
  std::uint64_t c1 = mech.signal_count(1), c2 = mech.signal_count(2);
  unsigned __int128 product = static_cast<unsigned __int128>(c1) * c2;
  if (c1 == UINT64_MAX || c2 == UINT64_MAX || product > opt.budget) {
    throw std::length_error(
        "profile space exceeds enumeration budget; use the closed-form characterization");
  }

  EquilibriumReport report;
  std::optional<SaTables> tables;
  if (!opt.force_generic) tables = tables_for(mech, a);
  if (tables) {
    report = enumerate_fast(*tables, opt);
    if (opt.collect_profiles) {
      for (const auto& eq : report.equilibria) {
        if (scan_deviation_fast(*tables, eq.profile.s1, eq.profile.s2)) {
          throw std::logic_error("enumerated profile failed re-validation");
        }
      }
    }
    return report;
  }
  report = enumerate_generic(mech, a, opt);
  if (opt.collect_profiles) {
    for (const auto& eq : report.equilibria) {
      if (improving_deviation(mech, a, eq.profile)) {
        throw std::logic_error("enumerated profile failed re-validation");
      }
    }
  }
  return report;
}

namespace {

// Boundary points with u1 == x1 (corner duplicates included) belong to
// player 1's side; the rest (u2 == x2, u1 < x1) to player 2's.
std::pair<IndexSet, IndexSet> split_boundary(const Collection& a, const AveragingWitness& w) {
  IndexSet b1(a.size()), b2(a.size());
  for (int i : w.boundary_included.to_indices()) {
    if (a.at(i).u1 == w.x.u1) {
      b1.set(i);
    } else {
      b2.set(i);
    }
  }
  return {b1, b2};
}

bool has_strict_dominator(const Collection& a, const Point& x) {
  for (const auto& p : a.alternatives()) {
    if (dominates(p, x, Dominance::kStrict)) return true;
  }
  return false;
}

}  // namespace

SaProfile construct_disagreement_profile(const Collection& a, const AveragingWitness& w) {
  if (!validate_witness(a, w)) throw std::invalid_argument("invalid averaging witness");
  if (has_strict_dominator(a, w.x)) {
    throw std::invalid_argument("fixed point is strictly dominated; not a disagreement outcome");
  }
  auto [b1, b2] = split_boundary(a, w);
  IndexSet d1(a.size()), d2(a.size());
  for (int i = 0; i < a.size(); ++i) {
    if (a.at(i).u1 > w.x.u1) d1.set(i);
    if (a.at(i).u2 > w.x.u2) d2.set(i);
  }
  return {b1 | d1, b2 | d2};
}

SaProfile construct_agreement_profile(const Collection& a, int a_index,
                                      const AveragingWitness& w) {
  if (!validate_witness(a, w)) throw std::invalid_argument("invalid averaging witness");
  if (a_index < 0 || a_index >= a.size()) throw std::out_of_range("agreement index");
  const Point& pa = a.at(a_index);
  if (has_strict_dominator(a, pa)) {
    throw std::invalid_argument("agreement point must be Pareto efficient");
  }
  if (!dominates(pa, w.x, Dominance::kWeak)) {
    throw std::invalid_argument("agreement point must weakly dominate the fixed point");
  }

  auto [b1, b2] = split_boundary(a, w);
  IndexSet r = quadrant(a, w.x, Rel::kGe, Rel::kGe) & quadrant(a, pa, Rel::kLe, Rel::kLe);
  IndexSet c1 = quadrant(a, Point{w.x.u1, pa.u2}, Rel::kGt, Rel::kLe) - r;
  IndexSet c2 = quadrant(a, Point{pa.u1, w.x.u2}, Rel::kLe, Rel::kGt) - r;

  SaProfile p{b1 | c1 | r, b2 | c2};
  p.l1.set(a_index);
  p.l2.set(a_index);
  return p;
}

std::vector<Profile> construct_cudd_profiles(const Collection& a) {
  int n = a.size();
  Rational max1 = a.at(0).u1, max2 = a.at(0).u2;
  Rational min1 = a.at(0).u1, min2 = a.at(0).u2;
  for (int i = 1; i < n; ++i) {
    max1 = max(max1, a.at(i).u1);
    max2 = max(max2, a.at(i).u2);
    min1 = min(min1, a.at(i).u1);
    min2 = min(min2, a.at(i).u2);
  }
  std::vector<int> argmax1, argmax2;
  int punish1 = 0, punish2 = 0;  // punish1 minimizes the opponent's utility
  for (int i = 0; i < n; ++i) {
    if (a.at(i).u1 == max1) argmax1.push_back(i);
    if (a.at(i).u2 == max2) argmax2.push_back(i);
    if (a.at(i).u2 < a.at(punish1).u2) punish1 = i;
    if (a.at(i).u1 < a.at(punish2).u1) punish2 = i;
  }

  auto encode = [n](int g, int d) {
    return static_cast<std::uint64_t>(g) * n + static_cast<std::uint64_t>(d);
  };

  std::vector<Profile> out;
  for (int j : argmax1) {
    for (int k : argmax2) {
      out.push_back({encode(j, j), encode(k, k)});
    }
  }
  Rational half(1, 2);
  Point threshold{(max1 + min1) * half, (max2 + min2) * half};
  for (int i = 0; i < n; ++i) {
    if (dominates(a.at(i), threshold, Dominance::kWeak)) {
      out.push_back({encode(i, punish1), encode(i, punish2)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bargain
