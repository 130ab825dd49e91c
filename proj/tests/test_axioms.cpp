#include <algorithm>
#include <stdexcept>

#include "bargain/axioms.hpp"
#include "bargain/characterize.hpp"
#include "bargain/fixtures.hpp"
#include "doctest.h"

using bargain::AffineMap;
using bargain::AxiomVerdict;
using bargain::Collection;
using bargain::EffMode;
using bargain::EffNotion;
using bargain::MechanismKind;
using bargain::MechanismSpec;
using bargain::NeOptions;
using bargain::Point;
using bargain::Rational;

namespace {

Collection make(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [a, b] : pts) v.push_back({a, b});
  return Collection(std::move(v));
}

MechanismSpec sa_delta(long p, long q) {
  MechanismSpec spec;
  spec.kind = MechanismKind::kSaDelta;
  spec.params.delta = Rational(p, q);
  return spec;
}

MechanismSpec plain(MechanismKind kind) {
  MechanismSpec spec;
  spec.kind = kind;
  return spec;
}

Point witness_point(const AxiomVerdict& v, const char* key) {
  REQUIRE(v.witness.has_value());
  const auto& arr = (*v.witness)[key];
  return {Rational::from_string(arr[0].get<std::string>()),
          Rational::from_string(arr[1].get<std::string>())};
}

}  // namespace

TEST_CASE("outcome set routing") {
  NeOptions tiny;
  tiny.budget = 1;  // force the characterization route

  {
    Collection ex2 = bargain::example2();
    MechanismSpec spec = sa_delta(1, 2);
    CHECK(mechanism_neo(spec, ex2) == mechanism_neo(spec, ex2, tiny));
  }
  {
    Collection ex1 = bargain::example1();
    MechanismSpec spec = plain(MechanismKind::kCudd);
    CHECK(mechanism_neo(spec, ex1) == mechanism_neo(spec, ex1, tiny));
  }
  {
    Collection two = make({{1, 0}, {0, 1}});
    MechanismSpec spec;
    spec.kind = MechanismKind::kSaKDelta;
    spec.params.delta = Rational(1, 2);
    spec.params.k = 2;
    auto brute = mechanism_neo(spec, two);
    CHECK(brute == mechanism_neo(spec, two, tiny));
    CHECK(brute == std::vector<Point>{{Rational(1, 2), Rational(1, 2)}});
  }
  {
    Collection two = make({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(mechanism_neo(plain(MechanismKind::kDictator), two, tiny),
                    std::runtime_error);
    CHECK_THROWS_AS(mechanism_neo(plain(MechanismKind::kSa), two, tiny), std::runtime_error);
  }
}

TEST_CASE("anonymity") {
  CHECK(check_anonymity(sa_delta(1, 2), 3).holds);
  CHECK(check_anonymity(plain(MechanismKind::kCudd), 3).holds);

  AxiomVerdict dict = check_anonymity(plain(MechanismKind::kDictator), 3);
  CHECK_FALSE(dict.holds);
  REQUIRE(dict.witness.has_value());
  CHECK((*dict.witness)["reason"] == "signal spaces differ");
  CHECK((*dict.witness)["sigma1"] == 3);
  CHECK((*dict.witness)["sigma2"] == 1);

  CHECK_THROWS_AS(check_anonymity(sa_delta(1, 2), 9, /*budget=*/1 << 16), std::length_error);
}

TEST_CASE("outcome-set symmetry") {
  Collection two = make({{1, 0}, {0, 1}});
  CHECK(check_symmetry(sa_delta(1, 2), two).holds);
  CHECK(check_symmetry(plain(MechanismKind::kCudd),
                       make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}}))
            .holds);

  AxiomVerdict dict = check_symmetry(plain(MechanismKind::kDictator), two);
  CHECK_FALSE(dict.holds);
  CHECK(witness_point(dict, "outcome") == Point{1, 0});
  CHECK(witness_point(dict, "missing_swap") == Point{0, 1});

  CHECK_THROWS_AS(check_symmetry(sa_delta(1, 2), make({{1, 0}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("invariance under repetition") {
  Collection three = make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}});
  CHECK(check_ira(plain(MechanismKind::kCudd), three, 1).holds);

  Collection two = make({{1, 0}, {0, 1}});
  CHECK(check_ira(plain(MechanismKind::kDictator), two, 0).holds);
  CHECK(check_ira(plain(MechanismKind::kDictator), two, 1).holds);

  AxiomVerdict sa = check_ira(sa_delta(1, 2), two, 1);
  CHECK_FALSE(sa.holds);
  REQUIRE(sa.witness.has_value());
  CHECK((*sa.witness)["repeated_index"] == 2);
  CHECK((*sa.witness)["neo_original"] ==
        nlohmann::json::array({nlohmann::json::array({"1/2", "1/2"})}));
  CHECK((*sa.witness)["neo_repeated"] ==
        nlohmann::json::array({nlohmann::json::array({"1/3", "2/3"})}));
}

TEST_CASE("invariance under affine transformations") {
  Collection two = make({{1, 0}, {0, 1}});
  AffineMap identity;
  CHECK(check_iat(sa_delta(1, 2), two, identity, identity).holds);
  CHECK(check_iat(plain(MechanismKind::kDictator), two, identity, identity).holds);

  AffineMap halve{Rational(1, 2), Rational(0)};
  CHECK(check_iat(sa_delta(1, 2), two, halve, halve).holds);

  AffineMap shrink{Rational(1, 2), Rational(1, 4)};
  Collection three = make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}});
  CHECK(check_iat(plain(MechanismKind::kCudd), three, shrink, shrink).holds);

  AffineMap flat{Rational(0), Rational(1, 2)};
  CHECK_THROWS_AS(check_iat(sa_delta(1, 2), two, flat, flat), std::invalid_argument);
  AffineMap shift{Rational(1), Rational(1, 2)};
  CHECK_THROWS_AS(check_iat(sa_delta(1, 2), two, shift, shift), std::invalid_argument);

  AffineMap scale{Rational(2), Rational(-1, 2)};
  CHECK(scale(Rational(1, 2)) == Rational(1, 2));
  CHECK(scale(Rational(3, 4)) == Rational(1));
}

TEST_CASE("outcome uniqueness") {
  AxiomVerdict multi = check_uniqueness(sa_delta(1, 10), make({{0, 1}, {1, 1}}));
  CHECK_FALSE(multi.holds);
  REQUIRE(multi.witness.has_value());
  CHECK((*multi.witness)["reason"] == "multiple outcomes");
  CHECK((*multi.witness)["neo"].size() == 3);

  CHECK(check_uniqueness(sa_delta(1, 2), make({{1, 0}, {0, 1}})).holds);
  CHECK(check_uniqueness(plain(MechanismKind::kDictator), make({{1, 0}, {0, 1}})).holds);
}

TEST_CASE("equilibrium efficiency") {
  Collection ex1 = bargain::example1();
  AxiomVerdict sa = check_efficiency(plain(MechanismKind::kSa), ex1, Rational(0),
                                     EffMode::kAll, EffNotion::kAlternatives);
  CHECK_FALSE(sa.holds);
  Point bad = witness_point(sa, "outcome");
  CHECK_FALSE(is_eps_pareto_efficient(ex1, bad, Rational(0)));
  auto neo = mechanism_neo(plain(MechanismKind::kSa), ex1);
  Point inefficient{Rational(2, 3), Rational(2, 3)};
  CHECK(std::find(neo.begin(), neo.end(), inefficient) != neo.end());
  CHECK_FALSE(is_eps_pareto_efficient(ex1, inefficient, Rational(0)));

  AxiomVerdict frontier = check_efficiency(plain(MechanismKind::kSa), ex1, Rational(0),
                                           EffMode::kAll, EffNotion::kFrontier);
  CHECK_FALSE(frontier.holds);

  CHECK(check_efficiency(plain(MechanismKind::kCudd),
                         make({{1, 0}, {0, 1}, {Rational(3, 4), Rational(3, 4)}}), Rational(0),
                         EffMode::kExists, EffNotion::kAlternatives)
            .holds);

  CHECK(check_efficiency(sa_delta(1, 4), bargain::example2(), Rational(1, 4), EffMode::kAll,
                         EffNotion::kAlternatives)
            .holds);
  CHECK(check_efficiency(sa_delta(1, 2), make({{1, 0}, {0, 1}}), Rational(0), EffMode::kAll,
                         EffNotion::kFrontier)
            .holds);

  // every outcome dominated: with full agreement weight the only fixed point
  // sits strictly under the compromise alternative
  Collection pinched = make({{Rational(9, 10), 0}, {0, Rational(9, 10)},
                             {Rational(1, 2), Rational(1, 2)}});
  AxiomVerdict none = check_efficiency(sa_delta(1, 1), pinched, Rational(0), EffMode::kExists,
                                       EffNotion::kAlternatives);
  CHECK_FALSE(none.holds);
  REQUIRE(none.witness.has_value());
  CHECK((*none.witness)["reason"] == "no outcome qualifies");
  CHECK(mechanism_neo(sa_delta(1, 1), pinched) ==
        std::vector<Point>{{Rational(7, 15), Rational(7, 15)}});
}
