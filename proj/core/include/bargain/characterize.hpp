#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bargain/afp.hpp"
#include "bargain/collection.hpp"

namespace bargain {

// Per-coordinate extrema over a collection; index 0 is coordinate 1.
// argmax[i] lists every alternative attaining m_max[i].
struct MaxMinStats {
  std::array<Rational, 2> m_max;
  std::array<Rational, 2> m_min;
  std::array<IndexSet, 2> argmax;
};

MaxMinStats max_min_stats(const Collection& a);

// Indices of alternatives not strictly dominated by any alternative.
// Duplicates of an undominated point are all included.
IndexSet pe_set(const Collection& a);

// An equilibrium-outcome set split into agreement outcomes and disagreement
// outcomes. Each list is sorted and duplicate-free; neo is their union.
struct NeoSets {
  std::vector<Point> ag;
  std::vector<Point> dis;
  std::vector<Point> neo;
};

// Closed-form equilibrium-outcome sets of the list mechanism with agreement
// weight delta in (0,1]:
//   ag  = {(1-delta)a + delta*x : a undominated, x an averaged fixed point,
//          a >= x in both coordinates}
//   dis = {x an averaged fixed point with no strict dominator in A}
// For delta < 1 the union is exactly the set of pure-equilibrium outcomes.
// At delta = 1 the agreement carries no probability and extra equilibria
// appear (both players listing everything is always one, with outcome
// avg(A)), so the union can be a strict subset of the brute-force outcomes;
// see README. Fixed points come from the subset oracle when
// a.size() <= afp_cap, otherwise from the diagonal scan (symmetric
// collections only). Throws std::invalid_argument for delta outside (0,1]
// and std::runtime_error when no fixed-point enumeration route applies.
NeoSets sa_delta_neo(const Collection& a, const Rational& delta, int afp_cap = kOracleCap);

// Pure-equilibrium outcomes of the constrained-unanimity mechanism:
//   ag  = {a in A : a_i >= (m_max[i] + m_min[i]) / 2 for both i}
//   dis = {(b + c) / 2 : b in argmax[0], c in argmax[1]}
NeoSets cudd_neo(const Collection& a);

// True when no alternative strictly dominates x + (eps, eps).
bool is_eps_pareto_efficient(const Collection& a, const Point& x, const Rational& eps);

// True when no point of conv(A) strictly dominates x + (eps, eps). Exact:
// in the plane a strict dominator exists in the hull iff some alternative or
// some point on a segment between two alternatives dominates, and on each
// segment min(y1 - z1, y2 - z2) is concave piecewise linear, so only the
// endpoints and the breakpoint need checking.
bool is_eps_close_to_frontier(const Collection& a, const Point& x, const Rational& eps);

// Unit-weight grid of the triangle {(c/k, d/k) : c + d <= k}, c ascending
// then d; (k+1)(k+2)/2 points.
Collection pie_collection(int k);

// Bisection bracket [lo, hi] for the root of x^3 - x + 1/3 in [0, 1/2],
// narrowed until hi - lo <= precision. f(lo) >= 0 >= f(hi) on return.
std::pair<Rational, Rational> pie_reference_x(const Rational& precision);

// L-infinity distance from x to the segment {(t, 1-t) : t in [x_lo, 1-x_lo]}.
Rational segment_distance(const Point& x, const Rational& x_lo);

}  // namespace bargain
