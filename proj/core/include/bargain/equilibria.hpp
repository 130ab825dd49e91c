#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bargain/afp.hpp"
#include "bargain/mechanisms.hpp"

namespace bargain {

struct Profile {
  std::uint64_t s1, s2;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.s1 == b.s1 && a.s2 == b.s2;
  }
  friend bool operator<(const Profile& a, const Profile& b) {
    if (a.s1 != b.s1) return a.s1 < b.s1;
    return a.s2 < b.s2;
  }
};

struct Equilibrium {
  Profile profile;
  Point outcome;
};

struct EquilibriumReport {
  std::vector<Equilibrium> equilibria;  // ascending (s1, s2)
  std::vector<Point> neo;               // distinct outcomes, ascending (u1, u2)
  bool profiles_collected = true;
};

// Exact expected utility pair of a profile.
Point payoffs(const MechanismInstance& mech, const Collection& a, Profile p);

struct Deviation {
  int player;            // 1 or 2
  std::uint64_t signal;  // the deviating signal
};

// First strictly improving unilateral deviation in scan order (player 1's
// signals ascending, then player 2's), or nullopt when the profile is a pure
// Nash equilibrium.
std::optional<Deviation> improving_deviation(const MechanismInstance& mech,
                                             const Collection& a, Profile p);
bool is_pure_ne(const MechanismInstance& mech, const Collection& a, Profile p);

struct NeOptions {
  std::uint64_t budget = std::uint64_t(1) << 24;  // max profile pairs scanned
  int threads = 1;
  bool collect_profiles = true;   // false: outcomes only (large scans)
  bool force_generic = false;     // disable the integer fast path (tests)
};

// Full profile-space scan. Deterministic: identical reports for any thread
// count. When profiles are collected each candidate is re-validated through
// improving_deviation. Throws std::length_error when the profile space
// exceeds the budget.
EquilibriumReport enumerate_pure_ne(const MechanismInstance& mech, const Collection& a,
                                    const NeOptions& opt = {});

// Constructive equilibrium profiles for the list-signal family, built from
// an averaging witness per the disagreement / agreement recipes. Boundary
// splitting rule: boundary points with u1 == x1 (including duplicates of x
// itself) go to player 1's side, the rest to player 2's.
struct SaProfile {
  IndexSet l1, l2;
};

// Requires witness.x to have no strict dominator in the collection.
SaProfile construct_disagreement_profile(const Collection& a, const AveragingWitness& w);

// Requires alternative a_index to be Pareto efficient and to weakly dominate
// witness.x. The returned lists intersect exactly in {a_index}.
SaProfile construct_agreement_profile(const Collection& a, int a_index,
                                      const AveragingWitness& w);

// Equilibrium profiles of the compromise rule: one disagreement profile per
// pair of per-coordinate maximizers and one agreement profile per alternative
// weakly above the midpoint threshold, with punishment components minimizing
// the opponent's utility (lowest index on ties).
std::vector<Profile> construct_cudd_profiles(const Collection& a);

}  // namespace bargain
