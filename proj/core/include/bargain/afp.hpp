#pragma once

#include <optional>
#include <vector>

#include "bargain/collection.hpp"

namespace bargain {

// An average fixed point x of a collection A is witnessed by an averaging
// set S: x = weighted_avg(A, S) and
//   indices(A minus lower-left-closed(x))  is a subset of  S
//   S  is a subset of  indices(A minus lower-left-open(x)).
// Equivalently S contains everything strictly outside the closed lower-left
// quadrant at x and may additionally contain boundary points (points of the
// closed quadrant lying on one of the two half-lines through x).
struct AveragingWitness {
  Point x;
  IndexSet s;
  IndexSet boundary_included;  // s restricted to the boundary of x
};

// Re-derives every invariant of a witness from scratch: exact average,
// sandwich inclusions, and boundary_included == s restricted to boundary.
bool validate_witness(const Collection& a, const AveragingWitness& w);

struct IterationResult {
  AveragingWitness witness;
  // x^1 = avg(A), x^{t+1} = avg(A minus strictly-dominated-by x^t region);
  // the trace holds each distinct iterate, strictly increasing in both
  // coordinates, and stabilizes within n + 1 steps.
  std::vector<Point> trace;
};

// Boundaries-included fixed point by iterated averaging.
IterationResult iterate_boundaries_included(const Collection& a);

inline constexpr int kOracleCap = 22;

struct AfpEnumeration {
  std::vector<AveragingWitness> witnesses;  // one per qualifying subset
  std::vector<Point> distinct;              // deduplicated, ascending (u1, u2)
};

// Exhaustive scan of all nonempty index subsets with incrementally
// maintained sums. Throws when a.size() > cap.
AfpEnumeration enumerate_afps_oracle(const Collection& a, int cap = kOracleCap);

// Decides whether x is an average fixed point and returns a witness if so.
// The boundary completion is found by two independent subset-sum searches
// (one per coordinate: points on the vertical half-line only shift the
// second coordinate sum and vice versa).
std::optional<AveragingWitness> is_afp(const Collection& a, const Point& x);

// All diagonal average fixed points of a symmetric collection whose
// coordinates live on a common grid {0, 1/m, .., 1}. Runs in time polynomial
// in n and m, so it scales far past the oracle cap. Candidates are the open
// cells between consecutive coordinate values (boundary necessarily empty)
// plus each coordinate value itself (boundary completion via is_afp).
std::vector<AveragingWitness> enumerate_diagonal_afps(const Collection& a,
                                                      long grid_cap = 1 << 20);

// True when every pair of points is weakly comparable (p <= q or q <= p in
// both coordinates).
bool verify_chain(const std::vector<Point>& points);

}  // namespace bargain
