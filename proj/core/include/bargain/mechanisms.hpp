#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bargain/collection.hpp"
#include "json.hpp"

namespace bargain {

// List-pair allocation rule. Cases by the submitted lists L1, L2:
//   both empty            -> weighted-uniform over all indices
//   disjoint, union != {} -> weighted-uniform over the union
//   intersecting          -> (1-delta) * weighted-uniform(intersection)
//                            + delta * weighted-uniform(union)
// Unit weights give the unweighted rule; delta = 0 gives the plain
// satisfactory-alternatives rule.
Allocation sa_delta_allocate(const Rational& delta, const std::vector<Rational>& weights,
                             const IndexSet& l1, const IndexSet& l2);

struct CuddSignal {
  int agreement;     // 0-based index
  int disagreement;  // 0-based index
};

// Compromise-upon-disagreement rule: player 1's agreement index when both
// agreement components coincide, otherwise the uniform lottery over the two
// disagreement components.
Allocation cudd_allocate(CuddSignal s1, CuddSignal s2, int n);

// Point mass on player 1's chosen index; player 2 has a single null signal.
Allocation dictator_allocate(int sigma1, int n);

// All size-k index multisets over [n] in lexicographic order of their
// nondecreasing index tuples. Shared by the lift and the lifted mechanism so
// signal bits and lifted alternatives line up.
std::vector<std::vector<int>> k_multisets(int n, int k);

// Lifted collection: one alternative (1/k) * sum of a size-k multiset per
// multiset, duplicates kept. The result has exactly C(n+k-1, k) members;
// throws when that exceeds cap.
Collection lift_k_uniform(const Collection& a, int k, std::int64_t cap = 1 << 16);

enum class MechanismKind {
  kSa,               // sa_delta with delta = 0
  kSaDelta,
  kSaDeltaWeighted,
  kSaKDelta,
  kDictator,
  kCudd,
};

std::string kind_name(MechanismKind kind);

struct MechanismParams {
  Rational delta = 0;
  int k = 1;
  std::vector<Rational> weights;  // empty means unit weights
};

// A mechanism instantiated for a fixed number of alternatives n. Signals are
// identified with integers in [0, signal_count(player)) under a stable,
// documented ordering (list mechanisms: subsets as bitmasks; compromise rule:
// agreement-major (g, d) pairs; dictator: indices, with one null signal for
// player 2).
class MechanismInstance {
 public:
  virtual ~MechanismInstance() = default;

  MechanismKind kind() const { return kind_; }
  const MechanismParams& params() const { return params_; }
  int n() const { return n_; }

  // Saturates at UINT64_MAX when the true count does not fit.
  virtual std::uint64_t signal_count(int player) const = 0;
  virtual Allocation allocate(std::uint64_t s1, std::uint64_t s2) const = 0;
  // Exact expected utility pair; overridden where a closed form avoids
  // materializing the allocation.
  virtual Point payoff(const Collection& a, std::uint64_t s1, std::uint64_t s2) const;
  virtual nlohmann::json signal_json(int player, std::uint64_t sig) const = 0;

  // Present for the list-signal family: the pair (delta, collection) whose
  // plain list game has identical payoffs. For lifted mechanisms the
  // collection is the k-uniform lift.
  struct SaGameView {
    Rational delta;
    Collection effective;
  };
  virtual std::optional<SaGameView> sa_game_view(const Collection& a) const;

 protected:
  MechanismInstance(MechanismKind kind, MechanismParams params, int n)
      : kind_(kind), params_(std::move(params)), n_(n) {}
  MechanismKind kind_;
  MechanismParams params_;
  int n_;
};

// Validates parameters (delta in [0,1], k >= 1, weights positive and of
// length n when given) and builds the instance.
std::unique_ptr<MechanismInstance> build_mechanism(MechanismKind kind,
                                                   const MechanismParams& params, int n);

// Instance wired to a collection: list mechanisms take their weights from
// the collection so allocation and characterization agree.
std::unique_ptr<MechanismInstance> build_mechanism_for(MechanismKind kind,
                                                       const MechanismParams& params,
                                                       const Collection& a);

}  // namespace bargain
