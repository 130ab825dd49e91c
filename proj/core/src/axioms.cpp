#include "bargain/axioms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bargain/characterize.hpp"

namespace bargain {

namespace {

nlohmann::json point_json(const Point& p) {
  return nlohmann::json::array({p.u1.str(), p.u2.str()});
}

nlohmann::json points_json(const std::vector<Point>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Point& p : pts) arr.push_back(point_json(p));
  return arr;
}

AxiomVerdict pass(std::string axiom) { return {std::move(axiom), true, std::nullopt}; }

AxiomVerdict fail(std::string axiom, nlohmann::json witness) {
  return {std::move(axiom), false, std::move(witness)};
}

}  // namespace

std::vector<Point> mechanism_neo(const MechanismSpec& mech, const Collection& a,
                                 const NeOptions& opt) {
  auto inst = build_mechanism_for(mech.kind, mech.params, a);
  std::uint64_t c1 = inst->signal_count(1), c2 = inst->signal_count(2);
  unsigned __int128 product = static_cast<unsigned __int128>(c1) * c2;
  if (c1 != UINT64_MAX && c2 != UINT64_MAX && product <= opt.budget) {
    NeOptions fast = opt;
    fast.collect_profiles = false;
    return enumerate_pure_ne(*inst, a, fast).neo;
  }
  if (mech.kind == MechanismKind::kCudd) return cudd_neo(a).neo;
  if (auto view = inst->sa_game_view(a); view && view->delta > Rational(0)) {
    return sa_delta_neo(view->effective, view->delta).neo;
  }
  throw std::runtime_error("outcome set not computable: over budget and no characterization");
}

AxiomVerdict check_anonymity(const MechanismSpec& mech, int n, std::uint64_t budget) {
  auto inst = build_mechanism(mech.kind, mech.params, n);
  std::uint64_t c1 = inst->signal_count(1), c2 = inst->signal_count(2);
  if (c1 != c2) {
    return fail("anonymity",
                {{"reason", "signal spaces differ"}, {"sigma1", c1}, {"sigma2", c2}});
  }
  if (static_cast<unsigned __int128>(c1) * c2 > budget) {
    throw std::length_error("signal space exceeds anonymity budget");
  }
  for (std::uint64_t s1 = 0; s1 < c1; ++s1) {
    for (std::uint64_t s2 = s1 + 1; s2 < c2; ++s2) {
      if (inst->allocate(s1, s2).p != inst->allocate(s2, s1).p) {
        return fail("anonymity",
                    {{"s1", inst->signal_json(1, s1)}, {"s2", inst->signal_json(2, s2)}});
      }
    }
  }
  return pass("anonymity");
}

AxiomVerdict check_symmetry(const MechanismSpec& mech, const Collection& a,
                            const NeOptions& opt) {
  if (!a.symmetric()) throw std::invalid_argument("symmetry check needs a symmetric collection");
  std::vector<Point> neo = mechanism_neo(mech, a, opt);
  std::set<Point> outcomes(neo.begin(), neo.end());
  for (const Point& p : neo) {
    Point swapped{p.u2, p.u1};
    if (!outcomes.count(swapped)) {
      return fail("symmetry", {{"outcome", point_json(p)},
                               {"missing_swap", point_json(swapped)},
                               {"neo", points_json(neo)}});
    }
  }
  return pass("symmetry");
}

AxiomVerdict check_ira(const MechanismSpec& mech, const Collection& a, int j,
                       const NeOptions& opt) {
  std::vector<Point> base = mechanism_neo(mech, a, opt);
  std::vector<Point> repeated = mechanism_neo(mech, a.duplicated(j), opt);
  if (base == repeated) return pass("ira");
  return fail("ira", {{"repeated_index", j + 1},
                      {"neo_original", points_json(base)},
                      {"neo_repeated", points_json(repeated)}});
}

AxiomVerdict check_iat(const MechanismSpec& mech, const Collection& a, const AffineMap& t1,
                       const AffineMap& t2, const NeOptions& opt) {
  if (t1.alpha <= Rational(0) || t2.alpha <= Rational(0)) {
    throw std::invalid_argument("affine maps must have positive scale");
  }
  std::vector<Point> mapped;
  for (const Point& p : a.alternatives()) {
    Point q{t1(p.u1), t2(p.u2)};
    if (q.u1 < Rational(0) || q.u1 > Rational(1) || q.u2 < Rational(0) || q.u2 > Rational(1)) {
      throw std::invalid_argument("transformed collection leaves the unit square");
    }
    mapped.push_back(q);
  }
  Collection ta = a.unweighted() ? Collection(mapped) : Collection(mapped, a.weights());

  NeOptions with_profiles = opt;
  with_profiles.collect_profiles = true;
  auto inst = build_mechanism_for(mech.kind, mech.params, a);
  auto inst_t = build_mechanism_for(mech.kind, mech.params, ta);
  EquilibriumReport before = enumerate_pure_ne(*inst, a, with_profiles);
  EquilibriumReport after = enumerate_pure_ne(*inst_t, ta, with_profiles);

  auto profiles = [](const EquilibriumReport& r) {
    std::vector<Profile> out;
    out.reserve(r.equilibria.size());
    for (const auto& eq : r.equilibria) out.push_back(eq.profile);
    return out;
  };
  if (profiles(before) != profiles(after)) {
    return fail("iat", {{"reason", "profile sets differ"},
                        {"profiles_original", before.equilibria.size()},
                        {"profiles_transformed", after.equilibria.size()}});
  }
  std::set<Point> expected;
  for (const Point& p : before.neo) expected.insert({t1(p.u1), t2(p.u2)});
  std::set<Point> got(after.neo.begin(), after.neo.end());
  if (expected != got) {
    return fail("iat",
                {{"reason", "outcome sets do not correspond"},
                 {"expected", points_json({expected.begin(), expected.end()})},
                 {"got", points_json(after.neo)}});
  }
  return pass("iat");
}

AxiomVerdict check_uniqueness(const MechanismSpec& mech, const Collection& a,
                              const NeOptions& opt) {
  std::vector<Point> neo = mechanism_neo(mech, a, opt);
  if (neo.empty()) return fail("uniqueness", {{"reason", "no pure equilibrium"}});
  if (neo.size() == 1) return pass("uniqueness");
  return fail("uniqueness", {{"reason", "multiple outcomes"}, {"neo", points_json(neo)}});
}

AxiomVerdict check_efficiency(const MechanismSpec& mech, const Collection& a,
                              const Rational& eps, EffMode mode, EffNotion notion,
                              const NeOptions& opt) {
  std::string name = notion == EffNotion::kAlternatives ? "eps-pareto-efficiency"
                                                        : "eps-frontier-closeness";
  name += mode == EffMode::kAll ? " (all)" : " (exists)";
  std::vector<Point> neo = mechanism_neo(mech, a, opt);
  if (neo.empty()) return fail(name, {{"reason", "no pure equilibrium"}});

  auto ok = [&](const Point& x) {
    return notion == EffNotion::kAlternatives ? is_eps_pareto_efficient(a, x, eps)
                                              : is_eps_close_to_frontier(a, x, eps);
  };
  if (mode == EffMode::kAll) {
    for (const Point& x : neo) {
      if (!ok(x)) return fail(name, {{"outcome", point_json(x)}, {"eps", eps.str()}});
    }
    return pass(name);
  }
  for (const Point& x : neo) {
    if (ok(x)) return pass(name);
  }
  return fail(name, {{"reason", "no outcome qualifies"}, {"neo", points_json(neo)}});
}

}  // namespace bargain
