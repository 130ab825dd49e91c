#include <stdexcept>

#include "bargain/characterize.hpp"
#include "bargain/equilibria.hpp"
#include "bargain/fixtures.hpp"
#include "bargain/mechanisms.hpp"
#include "bargain/rng.hpp"
#include "doctest.h"

using bargain::Collection;
using bargain::IndexSet;
using bargain::MechanismKind;
using bargain::NeoSets;
using bargain::Point;
using bargain::Rational;

namespace {

Collection make(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [a, b] : pts) v.push_back({a, b});
  return Collection(std::move(v));
}

Rational cubic(const Rational& x) { return x * x * x - x + Rational(1, 3); }

}  // namespace

TEST_CASE("per-coordinate extrema") {
  {
    auto st = max_min_stats(bargain::example1());
    CHECK(st.m_max[0] == Rational(1));
    CHECK(st.m_max[1] == Rational(1));
    CHECK(st.m_min[0] == Rational(0));
    CHECK(st.m_min[1] == Rational(0));
    CHECK(st.argmax[0] == IndexSet::of(4, {0}));
    CHECK(st.argmax[1] == IndexSet::of(4, {1}));
  }
  {
    auto st = max_min_stats(make({{1, 0}, {1, Rational(1, 2)}}));
    CHECK(st.m_max[0] == Rational(1));
    CHECK(st.argmax[0] == IndexSet::of(2, {0, 1}));
    CHECK(st.m_max[1] == Rational(1, 2));
    CHECK(st.argmax[1] == IndexSet::of(2, {1}));
    CHECK(st.m_min[0] == Rational(1));
    CHECK(st.m_min[1] == Rational(0));
  }
}

TEST_CASE("undominated alternatives") {
  CHECK(pe_set(bargain::example1()) == IndexSet::of(4, {0, 1, 2}));
  CHECK(pe_set(make({{0, 1}, {1, 1}})) == IndexSet::of(2, {0, 1}));
  CHECK(pe_set(make({{1, 1}})) == IndexSet::of(1, {0}));
  CHECK(pe_set(make({{1, 1}, {1, 1}, {Rational(1, 2), Rational(1, 2)}})) ==
        IndexSet::of(3, {0, 1}));
}

TEST_CASE("list mechanism outcome characterization") {
  {
    NeoSets s = sa_delta_neo(make({{1, 0}, {0, 1}}), Rational(1, 2));
    CHECK(s.ag.empty());
    CHECK(s.dis == std::vector<Point>{{Rational(1, 2), Rational(1, 2)}});
    CHECK(s.neo == s.dis);
  }
  {
    NeoSets s = sa_delta_neo(make({{0, 1}, {1, 1}}), Rational(1, 10));
    CHECK(s.ag == std::vector<Point>{{Rational(19, 20), 1}, {1, 1}});
    CHECK(s.dis == std::vector<Point>{{Rational(1, 2), 1}, {1, 1}});
    CHECK(s.neo == std::vector<Point>{{Rational(1, 2), 1}, {Rational(19, 20), 1}, {1, 1}});
  }
  {
    Collection ex2 = bargain::example2();
    NeoSets s = sa_delta_neo(ex2, Rational(1));
    CHECK(s.ag == std::vector<Point>{{Rational(33, 50), Rational(33, 50)}, {1, 1}});
    CHECK(s.dis == std::vector<Point>{{1, 1}});
    CHECK(s.neo == std::vector<Point>{{Rational(33, 50), Rational(33, 50)}, {1, 1}});

    bargain::MechanismParams params;
    params.delta = Rational(1);
    auto mech = bargain::build_mechanism_for(MechanismKind::kSaDelta, params, ex2);
    CHECK(enumerate_pure_ne(*mech, ex2).neo == s.neo);
  }
  {
    Collection a = make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}});
    NeoSets s = sa_delta_neo(a, Rational(1, 4));
    CHECK(s.ag == std::vector<Point>{{Rational(17, 24), Rational(17, 24)}});
    CHECK(s.dis.empty());
    CHECK(s.neo == s.ag);

    bargain::MechanismParams params;
    params.delta = Rational(1, 4);
    auto mech = bargain::build_mechanism_for(MechanismKind::kSaDelta, params, a);
    CHECK(enumerate_pure_ne(*mech, a).neo == s.neo);
  }
}

TEST_CASE("list mechanism characterization rejects bad weights") {
  Collection two = make({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(sa_delta_neo(two, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(sa_delta_neo(two, Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("list mechanism characterization needs a fixed-point route") {
  // over the cap and not symmetric: neither enumeration route applies
  Collection skew = make({{1, 0}, {1, 1}, {Rational(1, 2), Rational(1, 4)}});
  CHECK_THROWS_AS(sa_delta_neo(skew, Rational(1, 2), /*afp_cap=*/2), std::runtime_error);
  // symmetric collections fall back to the diagonal scan and stay exact
  Collection grid = bargain::pie_collection(2);
  NeoSets via_scan = sa_delta_neo(grid, Rational(1, 2), /*afp_cap=*/3);
  NeoSets via_oracle = sa_delta_neo(grid, Rational(1, 2));
  CHECK(via_scan.ag == via_oracle.ag);
  CHECK(via_scan.dis == via_oracle.dis);
  CHECK(via_scan.neo == via_oracle.neo);
}

TEST_CASE("compromise rule outcome characterization") {
  {
    NeoSets s = cudd_neo(make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}}));
    CHECK(s.ag == std::vector<Point>{{Rational(3, 4), Rational(3, 4)}});
    CHECK(s.dis == std::vector<Point>{{Rational(1, 2), Rational(1, 2)}});
    CHECK(s.neo == std::vector<Point>{{Rational(1, 2), Rational(1, 2)},
                                      {Rational(3, 4), Rational(3, 4)}});
  }
  {
    NeoSets s = cudd_neo(make({{1, 1}}));
    CHECK(s.ag == std::vector<Point>{{1, 1}});
    CHECK(s.dis == std::vector<Point>{{1, 1}});
    CHECK(s.neo == std::vector<Point>{{1, 1}});
  }
  {
    NeoSets s = cudd_neo(make({{1, 0}, {0, 1}}));
    CHECK(s.ag.empty());
    CHECK(s.dis == std::vector<Point>{{Rational(1, 2), Rational(1, 2)}});
  }
}

TEST_CASE("eps Pareto efficiency") {
  Collection ex1 = bargain::example1();
  Point inefficient{Rational(2, 3), Rational(2, 3)};
  CHECK_FALSE(is_eps_pareto_efficient(ex1, inefficient, Rational(0)));
  CHECK(is_eps_pareto_efficient(ex1, inefficient, Rational(1, 3)));
  CHECK(is_eps_pareto_efficient(make({{1, 1}}), {1, 1}, Rational(0)));
}

TEST_CASE("eps closeness to the hull frontier") {
  Collection two = make({{1, 0}, {0, 1}});
  CHECK(is_eps_close_to_frontier(two, {Rational(1, 2), Rational(1, 2)}, Rational(0)));
  Point inner{Rational(3, 10), Rational(3, 10)};
  CHECK_FALSE(is_eps_close_to_frontier(two, inner, Rational(1, 10)));
  CHECK(is_eps_close_to_frontier(two, inner, Rational(1, 5)));

  // a hull vertex is 0-close; points under a strictly dominating vertex are not
  Collection three = make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}});
  CHECK(is_eps_close_to_frontier(three, {Rational(3, 4), Rational(3, 4)}, Rational(0)));
  CHECK_FALSE(is_eps_close_to_frontier(three, {Rational(1, 2), Rational(1, 2)}, Rational(0)));

  // hull closeness is weaker than vertex-set efficiency and monotone in eps
  bargain::TrialRng rng(11, 0);
  for (int t = 0; t < 20; ++t) {
    Collection a = random_collection(rng, 2 + static_cast<int>(rng.below(4)), 8);
    Point x{Rational(static_cast<long>(rng.below(9)), 8),
            Rational(static_cast<long>(rng.below(9)), 8)};
    Rational eps(static_cast<long>(rng.below(4)), 8);
    if (!is_eps_pareto_efficient(a, x, eps)) {
      CHECK_FALSE(is_eps_close_to_frontier(a, x, eps));
    }
    if (is_eps_close_to_frontier(a, x, eps)) {
      CHECK(is_eps_close_to_frontier(a, x, eps + Rational(1, 8)));
      CHECK(is_eps_pareto_efficient(a, x, eps));
    }
  }
}

TEST_CASE("triangle grid collection") {
  Collection k1 = bargain::pie_collection(1);
  CHECK(k1.alternatives() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(k1.unweighted());

  Collection k2 = bargain::pie_collection(2);
  CHECK(k2.size() == 6);
  CHECK(k2.alternatives() ==
        std::vector<Point>{{0, 0},
                           {0, Rational(1, 2)},
                           {0, 1},
                           {Rational(1, 2), 0},
                           {Rational(1, 2), Rational(1, 2)},
                           {1, 0}});
  CHECK(k2.symmetric());

  CHECK(bargain::pie_collection(20).size() == 231);
  CHECK(bargain::pie_collection(20).symmetric());
  CHECK_THROWS_AS(bargain::pie_collection(0), std::invalid_argument);
}

TEST_CASE("reference root bracket") {
  CHECK(cubic(Rational(0)) == Rational(1, 3));
  CHECK(cubic(Rational(1, 2)) == Rational(-1, 24));

  auto [lo, hi] = bargain::pie_reference_x(Rational(1, 100));
  CHECK(lo == Rational(25, 64));
  CHECK(hi == Rational(51, 128));
  CHECK(hi - lo <= Rational(1, 100));
  CHECK(cubic(lo).sign() >= 0);
  CHECK(cubic(hi).sign() <= 0);
  Rational mid = (lo + hi) * Rational(1, 2);
  CHECK(abs(mid - Rational(39, 100)) < Rational(1, 100));

  auto [flo, fhi] = bargain::pie_reference_x(Rational(1, 1000000));
  CHECK(fhi - flo <= Rational(1, 1000000));
  CHECK(flo > Rational(3949, 10000));
  CHECK(fhi < Rational(3950, 10000));
  CHECK(cubic(flo).sign() >= 0);
  CHECK(cubic(fhi).sign() <= 0);

  CHECK_THROWS_AS(bargain::pie_reference_x(Rational(0)), std::invalid_argument);
}

TEST_CASE("distance to the efficient segment") {
  using bargain::segment_distance;
  CHECK(segment_distance({Rational(1, 2), Rational(1, 2)}, Rational(1, 4)) == Rational(0));
  CHECK(segment_distance({Rational(1, 2), Rational(2, 5)}, Rational(2, 5)) == Rational(1, 20));
  CHECK(segment_distance({1, 1}, Rational(1, 2)) == Rational(1, 2));

  // every point of the segment itself is at distance zero
  for (long i = 0; i <= 8; ++i) {
    Rational t = Rational(1, 4) + Rational(i, 16);
    CHECK(segment_distance({t, Rational(1) - t}, Rational(1, 4)) == Rational(0));
  }

  CHECK_THROWS_AS(segment_distance({0, 0}, Rational(-1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(segment_distance({0, 0}, Rational(3, 5)), std::invalid_argument);
}
