#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bargain/collection.hpp"
#include "bargain/equilibria.hpp"
#include "bargain/mechanisms.hpp"
#include "json.hpp"

namespace bargain {

// Mechanism identity that survives a change of collection size, which the
// repetition axiom needs (the instance for A and for (A, j) differ in n).
struct MechanismSpec {
  MechanismKind kind = MechanismKind::kSaDelta;
  MechanismParams params;
};

struct AffineMap {
  Rational alpha = 1;  // must be positive
  Rational beta = 0;

  Rational operator()(const Rational& x) const { return alpha * x + beta; }
};

// A failed check carries a witness that re-checks independently: the signal
// pair, outcome, or collection that breaks the property.
struct AxiomVerdict {
  std::string axiom;
  bool holds = false;
  std::optional<nlohmann::json> witness;
};

// Outcome set of the mechanism on a: brute-force enumeration when the
// profile space fits the budget, otherwise the closed-form characterization
// (list mechanisms and constrained unanimity only).
std::vector<Point> mechanism_neo(const MechanismSpec& mech, const Collection& a,
                                 const NeOptions& opt = {});

// Allocation symmetry f(s1, s2) = f(s2, s1) over all signal pairs. Fails
// structurally when the two signal spaces differ.
AxiomVerdict check_anonymity(const MechanismSpec& mech, int n, std::uint64_t budget = 1 << 24);

// For symmetric a, the outcome set must be closed under coordinate swap.
// Throws std::invalid_argument when a is not symmetric.
AxiomVerdict check_symmetry(const MechanismSpec& mech, const Collection& a,
                            const NeOptions& opt = {});

// Invariance under repetition: outcome sets of a and of a with alternative j
// duplicated must agree exactly.
AxiomVerdict check_ira(const MechanismSpec& mech, const Collection& a, int j,
                       const NeOptions& opt = {});

// Invariance under per-player affine transformations: the pure-equilibrium
// profile sets of the original and transformed games are identical and the
// outcome sets correspond under (t1, t2). Brute force only.
AxiomVerdict check_iat(const MechanismSpec& mech, const Collection& a, const AffineMap& t1,
                       const AffineMap& t2, const NeOptions& opt = {});

// Exactly one distinct outcome point. An empty outcome set fails with a
// witness naming the reason.
AxiomVerdict check_uniqueness(const MechanismSpec& mech, const Collection& a,
                              const NeOptions& opt = {});

enum class EffMode { kAll, kExists };
enum class EffNotion { kAlternatives, kFrontier };

// Every outcome (or at least one) is eps-efficient against the alternatives
// or eps-close to the convex frontier.
AxiomVerdict check_efficiency(const MechanismSpec& mech, const Collection& a,
                              const Rational& eps, EffMode mode, EffNotion notion,
                              const NeOptions& opt = {});

}  // namespace bargain
