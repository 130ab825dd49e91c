#include <stdexcept>

#include "bargain/equilibria.hpp"
#include "bargain/fixtures.hpp"
#include "bargain/mechanisms.hpp"
#include "bargain/rng.hpp"
#include "doctest.h"

using bargain::Allocation;
using bargain::Collection;
using bargain::CuddSignal;
using bargain::IndexSet;
using bargain::MechanismKind;
using bargain::MechanismParams;
using bargain::Point;
using bargain::Rational;

namespace {

std::vector<Rational> units(int n) { return std::vector<Rational>(n, Rational(1)); }

Collection make(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [a, b] : pts) v.push_back({a, b});
  return Collection(std::move(v));
}

}  // namespace

TEST_CASE("list allocation three cases") {
  // intersection hit with full probability at delta = 0
  Allocation pt = sa_delta_allocate(Rational(0), units(4), IndexSet::of(4, {0, 3}),
                                    IndexSet::of(4, {1, 3}));
  CHECK(pt.p == std::vector<Rational>{0, 0, 0, 1});

  // delta mixes union mass in
  Allocation mix = sa_delta_allocate(Rational(1, 10), units(4), IndexSet::of(4, {0, 3}),
                                     IndexSet::of(4, {1, 3}));
  CHECK(mix.p == std::vector<Rational>{Rational(1, 30), Rational(1, 30), 0, Rational(28, 30)});

  // both lists empty: uniform over everything, delta irrelevant
  for (const Rational& d : {Rational(0), Rational(1, 3), Rational(1)}) {
    Allocation u = sa_delta_allocate(d, units(3), IndexSet(3), IndexSet(3));
    CHECK(u.p == std::vector<Rational>(3, Rational(1, 3)));
  }

  // disjoint nonempty lists: uniform over the union
  Allocation dis = sa_delta_allocate(Rational(1, 2), units(3), IndexSet::of(3, {0}),
                                     IndexSet::of(3, {2}));
  CHECK(dis.p == std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2)});

  // weights drive the lottery
  Allocation w = sa_delta_allocate(Rational(0), {Rational(3), Rational(1)}, IndexSet(2),
                                   IndexSet(2));
  CHECK(w.p == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
}

TEST_CASE("cudd allocation") {
  Allocation agree = cudd_allocate(CuddSignal{1, 0}, CuddSignal{1, 2}, 3);
  CHECK(agree.p == std::vector<Rational>{0, 1, 0});

  Allocation split = cudd_allocate(CuddSignal{0, 0}, CuddSignal{1, 1}, 2);
  CHECK(split.p == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  Allocation same_d = cudd_allocate(CuddSignal{0, 2}, CuddSignal{1, 2}, 3);
  CHECK(same_d.p == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("dictator allocation") {
  CHECK(bargain::dictator_allocate(0, 2).p == std::vector<Rational>{1, 0});
  CHECK(bargain::dictator_allocate(1, 2).p == std::vector<Rational>{0, 1});
  CHECK(bargain::dictator_allocate(2, 3).p == std::vector<Rational>{0, 0, 1});
  CHECK_THROWS_AS(bargain::dictator_allocate(3, 3), std::invalid_argument);
}

TEST_CASE("k_multisets order") {
  auto ms = bargain::k_multisets(2, 2);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == std::vector<int>{0, 0});
  CHECK(ms[1] == std::vector<int>{0, 1});
  CHECK(ms[2] == std::vector<int>{1, 1});
}

TEST_CASE("k-uniform lift") {
  Collection l1 = lift_k_uniform(make({{0, 0}, {1, 1}}), 2);
  REQUIRE(l1.size() == 3);
  CHECK(l1.at(0) == Point{0, 0});
  CHECK(l1.at(1) == Point{Rational(1, 2), Rational(1, 2)});
  CHECK(l1.at(2) == Point{1, 1});

  Collection l2 = lift_k_uniform(make({{1, 0}, {0, 1}}), 2);
  REQUIRE(l2.size() == 3);
  CHECK(l2.at(1) == Point{Rational(1, 2), Rational(1, 2)});

  CHECK(lift_k_uniform(make({{1, 0}, {0, 1}, {1, 1}}), 3).size() == 10);

  // k = 1 is the identity
  Collection base = bargain::example1();
  Collection id = lift_k_uniform(base, 1);
  REQUIRE(id.size() == base.size());
  for (int i = 0; i < base.size(); ++i) CHECK(id.at(i) == base.at(i));

  CHECK_THROWS_AS(lift_k_uniform(make({{1, 0}, {0, 1}}), 40, 10), std::invalid_argument);
}

TEST_CASE("build_mechanism signal spaces") {
  MechanismParams half;
  half.delta = Rational(1, 2);
  auto sa = bargain::build_mechanism(MechanismKind::kSaDelta, half, 3);
  CHECK(sa->signal_count(1) == 8);
  CHECK(sa->signal_count(2) == 8);

  auto cudd = bargain::build_mechanism(MechanismKind::kCudd, {}, 3);
  CHECK(cudd->signal_count(1) == 9);
  CHECK(cudd->signal_count(2) == 9);

  auto dict = bargain::build_mechanism(MechanismKind::kDictator, {}, 5);
  CHECK(dict->signal_count(1) == 5);
  CHECK(dict->signal_count(2) == 1);
}

TEST_CASE("build_mechanism validates parameters") {
  MechanismParams bad;
  bad.delta = Rational(3, 2);
  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSaDelta, bad, 2),
                  std::invalid_argument);
  bad.delta = Rational(-1, 2);
  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSaDelta, bad, 2),
                  std::invalid_argument);

  MechanismParams plain_delta;
  plain_delta.delta = Rational(1, 2);
  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSa, plain_delta, 2),
                  std::invalid_argument);

  MechanismParams zero_k;
  zero_k.k = 0;
  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSaKDelta, zero_k, 2),
                  std::invalid_argument);

  MechanismParams badw;
  badw.weights = {Rational(1), Rational(0)};
  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSaDeltaWeighted, badw, 2),
                  std::invalid_argument);
  badw.weights = {Rational(1)};
  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSaDeltaWeighted, badw, 2),
                  std::invalid_argument);

  CHECK_THROWS_AS(bargain::build_mechanism(MechanismKind::kSaDelta, {}, 0),
                  std::invalid_argument);
}

TEST_CASE("allocations are valid distributions for every signal pair") {
  Collection a = make({{1, 0}, {0, 1}, {Rational(1, 2), Rational(3, 4)}});
  MechanismParams tenth;
  tenth.delta = Rational(1, 10);
  MechanismParams lifted = tenth;
  lifted.k = 2;

  std::vector<std::unique_ptr<bargain::MechanismInstance>> mechs;
  mechs.push_back(bargain::build_mechanism_for(MechanismKind::kSa, {}, a));
  mechs.push_back(bargain::build_mechanism_for(MechanismKind::kSaDelta, tenth, a));
  mechs.push_back(bargain::build_mechanism_for(MechanismKind::kSaKDelta, lifted, a));
  mechs.push_back(bargain::build_mechanism_for(MechanismKind::kDictator, {}, a));
  mechs.push_back(bargain::build_mechanism_for(MechanismKind::kCudd, {}, a));

  for (const auto& m : mechs) {
    for (std::uint64_t s1 = 0; s1 < m->signal_count(1); ++s1) {
      for (std::uint64_t s2 = 0; s2 < m->signal_count(2); ++s2) {
        Allocation alloc = m->allocate(s1, s2);
        alloc.validate();
        // the closed-form payoff matches the materialized allocation
        CHECK(m->payoff(a, s1, s2) == expected_outcome(a, alloc));
      }
    }
  }
}

TEST_CASE("delta zero equals plain rule and unit weights equal unweighted") {
  Collection a = make({{1, 0}, {0, 1}, {Rational(1, 4), Rational(3, 4)}});
  auto sa = bargain::build_mechanism_for(MechanismKind::kSa, {}, a);
  MechanismParams zero;
  auto sa0 = bargain::build_mechanism_for(MechanismKind::kSaDelta, zero, a);
  MechanismParams tenth;
  tenth.delta = Rational(1, 10);
  tenth.weights = units(3);
  auto saw = bargain::build_mechanism_for(MechanismKind::kSaDeltaWeighted, tenth, a);
  MechanismParams plain_tenth;
  plain_tenth.delta = Rational(1, 10);
  auto sad = bargain::build_mechanism_for(MechanismKind::kSaDelta, plain_tenth, a);

  for (std::uint64_t s1 = 0; s1 < 8; ++s1) {
    for (std::uint64_t s2 = 0; s2 < 8; ++s2) {
      CHECK(sa->allocate(s1, s2).p == sa0->allocate(s1, s2).p);
      CHECK(saw->allocate(s1, s2).p == sad->allocate(s1, s2).p);
    }
  }
}

TEST_CASE("list family and unanimity rule are anonymous in signals") {
  Collection a = make({{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}});
  MechanismParams tenth;
  tenth.delta = Rational(1, 10);
  for (MechanismKind kind : {MechanismKind::kSaDelta, MechanismKind::kCudd}) {
    auto m = bargain::build_mechanism_for(kind, kind == MechanismKind::kSaDelta
                                                    ? tenth
                                                    : MechanismParams{},
                                          a);
    for (std::uint64_t s1 = 0; s1 < m->signal_count(1); ++s1) {
      for (std::uint64_t s2 = 0; s2 < m->signal_count(2); ++s2) {
        CHECK(m->allocate(s1, s2).p == m->allocate(s2, s1).p);
      }
    }
  }
}

TEST_CASE("sa_game_view exposes the equivalent plain list game") {
  Collection a = make({{1, 0}, {0, 1}});
  MechanismParams lifted;
  lifted.delta = Rational(1, 4);
  lifted.k = 2;
  auto sak = bargain::build_mechanism_for(MechanismKind::kSaKDelta, lifted, a);
  auto view = sak->sa_game_view(a);
  REQUIRE(view.has_value());
  CHECK(view->delta == Rational(1, 4));
  REQUIRE(view->effective.size() == 3);
  CHECK(view->effective.at(1) == Point{Rational(1, 2), Rational(1, 2)});

  MechanismParams half;
  half.delta = Rational(1, 2);
  auto sad = bargain::build_mechanism_for(MechanismKind::kSaDelta, half, a);
  auto plain_view = sad->sa_game_view(a);
  REQUIRE(plain_view.has_value());
  CHECK(plain_view->effective.size() == 2);
  CHECK(plain_view->delta == Rational(1, 2));

  CHECK_FALSE(bargain::build_mechanism_for(MechanismKind::kDictator, {}, a)
                  ->sa_game_view(a)
                  .has_value());
  CHECK_FALSE(bargain::build_mechanism_for(MechanismKind::kCudd, {}, a)
                  ->sa_game_view(a)
                  .has_value());
}

TEST_CASE("lifted mechanism equals plain rule over the lifted collection") {
  Collection a = make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(1, 2)}});
  MechanismParams p;
  p.delta = Rational(1, 3);
  p.k = 2;
  auto sak = bargain::build_mechanism_for(MechanismKind::kSaKDelta, p, a);
  Collection lift = lift_k_uniform(a, 2);
  MechanismParams q;
  q.delta = Rational(1, 3);
  auto sad = bargain::build_mechanism_for(MechanismKind::kSaDelta, q, lift);

  REQUIRE(sak->signal_count(1) == sad->signal_count(1));
  for (std::uint64_t s1 = 0; s1 < sak->signal_count(1); ++s1) {
    for (std::uint64_t s2 = 0; s2 < sak->signal_count(2); ++s2) {
      CHECK(sak->payoff(a, s1, s2) == sad->payoff(lift, s1, s2));
    }
  }
}

TEST_CASE("signal_json shapes") {
  Collection a = make({{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}});
  MechanismParams tenth;
  tenth.delta = Rational(1, 10);
  auto sad = bargain::build_mechanism_for(MechanismKind::kSaDelta, tenth, a);
  CHECK(sad->signal_json(1, 0b101) == nlohmann::json::array({1, 3}));

  auto cudd = bargain::build_mechanism_for(MechanismKind::kCudd, {}, a);
  nlohmann::json cj = cudd->signal_json(1, 2 * 3 + 1);
  CHECK(cj["g"] == 3);
  CHECK(cj["d"] == 2);
}
