#include <algorithm>
#include <stdexcept>

#include "bargain/afp.hpp"
#include "bargain/characterize.hpp"
#include "bargain/fixtures.hpp"
#include "bargain/rng.hpp"
#include "doctest.h"

using bargain::AveragingWitness;
using bargain::Collection;
using bargain::Dominance;
using bargain::IndexSet;
using bargain::Point;
using bargain::Rational;

namespace {

Collection make(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [a, b] : pts) v.push_back({a, b});
  return Collection(std::move(v));
}

std::vector<Point> diagonal_points(const Collection& a) {
  std::vector<Point> pts;
  for (const auto& w : enumerate_diagonal_afps(a)) pts.push_back(w.x);
  return pts;
}

}  // namespace

TEST_CASE("iteration stabilizes on worked collections") {
  {
    auto r = iterate_boundaries_included(bargain::example2());
    CHECK(r.witness.x == Point{Rational(33, 50), Rational(33, 50)});
    CHECK(r.trace.size() == 1);  // the overall average is already fixed
    CHECK(validate_witness(bargain::example2(), r.witness));
  }
  {
    auto r = iterate_boundaries_included(make({{1, 1}, {0, 0}}));
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0] == Point{Rational(1, 2), Rational(1, 2)});
    CHECK(r.trace[1] == Point{1, 1});
    CHECK(r.witness.x == Point{1, 1});
    CHECK(r.witness.s == IndexSet::of(2, {0}));
  }
  {
    auto r = iterate_boundaries_included(make({{1, 0}, {0, 1}, {0, 1}}));
    CHECK(r.witness.x == Point{Rational(1, 3), Rational(2, 3)});
    CHECK(r.trace.size() == 1);
  }
}

TEST_CASE("iteration trace strictly increases and stays short") {
  bargain::TrialRng rng(3, 0);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng.below(5));
    Collection a = random_collection(rng, n, 8);
    auto r = iterate_boundaries_included(a);
    CHECK(static_cast<int>(r.trace.size()) <= n + 1);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      CHECK(bargain::dominates(r.trace[i], r.trace[i - 1], Dominance::kStrict));
    }
    CHECK(validate_witness(a, r.witness));
  }
}

TEST_CASE("oracle enumerates exactly the fixed points") {
  {
    auto e = enumerate_afps_oracle(make({{1, 0}, {0, 1}}));
    CHECK(e.distinct == std::vector<Point>{{Rational(1, 2), Rational(1, 2)}});
  }
  {
    auto e = enumerate_afps_oracle(bargain::example2());
    CHECK(e.distinct == std::vector<Point>{{Rational(33, 50), Rational(33, 50)}, {1, 1}});
  }
  {
    auto e = enumerate_afps_oracle(make({{0, 1}, {1, 1}}));
    CHECK(e.distinct == std::vector<Point>{{Rational(1, 2), 1}, {1, 1}});
  }
}

TEST_CASE("oracle witnesses validate and respect the sandwich") {
  bargain::TrialRng rng(4, 1);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng.below(5));
    Collection a = t % 2 ? random_symmetric_collection(rng, n, 8)
                         : random_collection(rng, n, 8);
    auto e = enumerate_afps_oracle(a);
    CHECK(!e.distinct.empty());
    CHECK(std::is_sorted(e.distinct.begin(), e.distinct.end()));
    for (const auto& w : e.witnesses) CHECK(validate_witness(a, w));
    // the iterative finder lands on an enumerated point
    auto it = iterate_boundaries_included(a);
    CHECK(std::binary_search(e.distinct.begin(), e.distinct.end(), it.witness.x));
    // chain property
    CHECK(verify_chain(e.distinct));
    if (a.symmetric()) {
      for (const Point& x : e.distinct) CHECK(x.u1 == x.u2);
    }
  }
}

TEST_CASE("oracle cap is enforced") {
  std::vector<Point> many(23, Point{Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(enumerate_afps_oracle(Collection(std::move(many))),
                  std::invalid_argument);
}

TEST_CASE("is_afp") {
  {
    auto w = is_afp(bargain::example2(), Point{1, 1});
    REQUIRE(w.has_value());
    CHECK(w->s == IndexSet::of(3, {0}));
    CHECK(validate_witness(bargain::example2(), *w));
  }
  CHECK_FALSE(is_afp(make({{1, 0}, {0, 1}}), Point{1, 0}).has_value());
  {
    auto w = is_afp(make({{1, 1}}), Point{1, 1});
    REQUIRE(w.has_value());
    CHECK(w->s == IndexSet::of(1, {0}));
  }
  // agrees with the oracle on random probes
  bargain::TrialRng rng(5, 2);
  for (int t = 0; t < 20; ++t) {
    Collection a = random_collection(rng, 2 + static_cast<int>(rng.below(4)), 6);
    auto e = enumerate_afps_oracle(a);
    for (const Point& x : e.distinct) {
      auto w = is_afp(a, x);
      REQUIRE(w.has_value());
      CHECK(validate_witness(a, *w));
    }
    std::uint64_t m = 1 + rng.below((std::uint64_t(1) << a.size()) - 1);
    Point probe = weighted_avg(a, IndexSet::from_mask(a.size(), m));
    bool oracle_says = std::binary_search(e.distinct.begin(), e.distinct.end(), probe);
    CHECK(is_afp(a, probe).has_value() == oracle_says);
  }
}

TEST_CASE("diagonal scan on symmetric grids") {
  CHECK(diagonal_points(make({{1, 0}, {0, 1}})) ==
        std::vector<Point>{{Rational(1, 2), Rational(1, 2)}});

  // matches the oracle's diagonal subset on the pie grid
  Collection pie4 = bargain::pie_collection(4);
  auto oracle = enumerate_afps_oracle(pie4);
  std::vector<Point> expect;
  for (const Point& x : oracle.distinct) {
    if (x.u1 == x.u2) expect.push_back(x);
  }
  CHECK(expect == oracle.distinct);  // Corollary of symmetry: all are diagonal
  CHECK(diagonal_points(pie4) == expect);

  // worked y_j values on the doubling-and-tripling family
  Collection ex3 = bargain::example3(2);
  REQUIRE(ex3.size() == 26);
  std::vector<Point> pts = diagonal_points(ex3);
  auto has = [&pts](const Point& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
  };
  CHECK(has(Point{Rational(5, 16), Rational(5, 16)}));
  CHECK(has(Point{Rational(19, 104), Rational(19, 104)}));
  for (const auto& w : enumerate_diagonal_afps(ex3)) CHECK(validate_witness(ex3, w));
}

TEST_CASE("diagonal scan agrees with the oracle on random symmetric grids") {
  bargain::TrialRng rng(6, 3);
  for (int t = 0; t < 25; ++t) {
    Collection a = random_symmetric_collection(rng, 2 + static_cast<int>(rng.below(6)), 8);
    CHECK(diagonal_points(a) == enumerate_afps_oracle(a).distinct);
  }
}

TEST_CASE("diagonal scan input validation") {
  CHECK_THROWS_AS(enumerate_diagonal_afps(make({{1, 0}, {1, 1}})), std::invalid_argument);
  Collection fine_grid = make({{Rational(1, 1048577), Rational(1, 1048577)}});
  CHECK_THROWS_AS(enumerate_diagonal_afps(fine_grid), std::invalid_argument);
}

TEST_CASE("verify_chain") {
  CHECK(bargain::verify_chain({Point{Rational(1, 2), 1}, Point{1, 1}}));
  CHECK_FALSE(bargain::verify_chain({Point{1, 0}, Point{0, 1}}));
  CHECK(bargain::verify_chain({Point{Rational(1, 3), Rational(1, 3)}}));
  CHECK(bargain::verify_chain({}));
}
