#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bargain/rational.hpp"

namespace bargain {

// Utility pair of one alternative: coordinate i is player i's utility.
struct Point {
  Rational u1, u2;

  friend bool operator==(const Point& a, const Point& b) {
    return a.u1 == b.u1 && a.u2 == b.u2;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic; used for deterministic ordering of point sets.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.u1 != b.u1) return a.u1 < b.u1;
    return a.u2 < b.u2;
  }
  std::string str() const { return "(" + u1.str() + "," + u2.str() + ")"; }
};

enum class Dominance { kStrict, kWeak };

// dominates(a, b, kStrict): a >> b (both coordinates strictly larger).
// dominates(a, b, kWeak): a >= b in both coordinates.
bool dominates(const Point& a, const Point& b, Dominance mode);

// Subset of {0, .., n-1} stored as a dense bitmask. Indices are 0-based in
// code; JSON serialization is 1-based to match the usual index convention.
class IndexSet {
 public:
  IndexSet() : n_(0) {}
  explicit IndexSet(int n);
  static IndexSet full(int n);
  static IndexSet from_mask(int n, std::uint64_t mask);  // n <= 64
  static IndexSet of(int n, std::initializer_list<int> indices);

  int universe() const { return n_; }
  bool test(int i) const;
  void set(int i);
  void reset(int i);
  int count() const;
  bool empty() const { return count() == 0; }
  std::uint64_t mask64() const;  // n <= 64 only

  bool contains(const IndexSet& sub) const;
  bool intersects(const IndexSet& o) const;

  IndexSet operator|(const IndexSet& o) const;
  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator-(const IndexSet& o) const;
  IndexSet complement() const;

  std::vector<int> to_indices() const;  // ascending, 0-based

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
  friend bool operator<(const IndexSet& a, const IndexSet& b);

 private:
  void check_same_universe(const IndexSet& o) const;
  int n_;
  std::vector<std::uint64_t> words_;
};

// Probability distribution over alternative indices: entries are >= 0 and
// sum to exactly 1.
struct Allocation {
  std::vector<Rational> p;

  int size() const { return static_cast<int>(p.size()); }
  void validate() const;  // throws std::invalid_argument on violation
};

// Finite collection of alternatives in [0,1]^2 with optional positive
// weights (unit weights when none are given). Duplicates are allowed and
// meaningful: the collection is a multiset.
class Collection {
 public:
  explicit Collection(std::vector<Point> alternatives);
  Collection(std::vector<Point> alternatives, std::vector<Rational> weights);

  int size() const { return static_cast<int>(alts_.size()); }
  const Point& at(int i) const { return alts_[i]; }
  const std::vector<Point>& alternatives() const { return alts_; }
  const std::vector<Rational>& weights() const { return weights_; }
  bool unweighted() const { return unweighted_; }

  Rational weight_sum(const IndexSet& s) const;

  // Multiset symmetry: for every value (x, y), the total weight on (x, y)
  // equals the total weight on (y, x).
  bool symmetric() const;

  // Appends a copy of alternative j (0-based), keeping its weight.
  Collection duplicated(int j) const;

 private:
  void validate() const;
  std::vector<Point> alts_;
  std::vector<Rational> weights_;
  bool unweighted_;
};

// Weighted average of the sub-multiset indexed by s. Throws
// std::invalid_argument("empty averaging set") when s is empty.
Point weighted_avg(const Collection& a, const IndexSet& s);

// Per-coordinate relation for quadrant queries.
enum class Rel { kLt, kLe, kGt, kGe };

// Indices i with a_i rel1 x.u1 in coordinate 1 and a_i rel2 x.u2 in
// coordinate 2. All sixteen open/closed combinations are supported.
IndexSet quadrant(const Collection& a, const Point& x, Rel rel1, Rel rel2);

// Expected utility pair under an allocation. Throws on length mismatch or
// invalid allocation.
Point expected_outcome(const Collection& a, const Allocation& alloc);

// JSON wire format:
//   {"alternatives": [["p/q", "0.75"], ...], "weights": ["1", ...]?}
// Numbers are strings holding "p/q" or a decimal literal; both are converted
// exactly. Parsing rejects coordinates outside [0,1], non-positive weights,
// and weight lists whose length differs from the alternative list.
Collection parse_collection(const std::string& json_text);
std::string serialize_collection(const Collection& a);

}  // namespace bargain
