#include "bargain/collection.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace bargain {

bool dominates(const Point& a, const Point& b, Dominance mode) {
  if (mode == Dominance::kStrict) return a.u1 > b.u1 && a.u2 > b.u2;
  return a.u1 >= b.u1 && a.u2 >= b.u2;
}

IndexSet::IndexSet(int n) : n_(n), words_((n + 63) / 64, 0) {
  if (n < 0) throw std::invalid_argument("negative universe size");
}

IndexSet IndexSet::full(int n) {
  IndexSet s(n);
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

IndexSet IndexSet::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("from_mask needs n <= 64");
  IndexSet s(n);
  if (n > 0) s.words_[0] = mask;
  return s;
}

IndexSet IndexSet::of(int n, std::initializer_list<int> indices) {
  IndexSet s(n);
  for (int i : indices) s.set(i);
  return s;
}

bool IndexSet::test(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("index outside universe");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void IndexSet::set(int i) {
  if (i < 0 || i >= n_) throw std::out_of_range("index outside universe");
  words_[i / 64] |= std::uint64_t(1) << (i % 64);
}

void IndexSet::reset(int i) {
  if (i < 0 || i >= n_) throw std::out_of_range("index outside universe");
  words_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
}

int IndexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::uint64_t IndexSet::mask64() const {
  if (n_ > 64) throw std::logic_error("mask64 needs n <= 64");
  return words_.empty() ? 0 : words_[0];
}

void IndexSet::check_same_universe(const IndexSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("index sets over different universes");
}

bool IndexSet::contains(const IndexSet& sub) const {
  check_same_universe(sub);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (sub.words_[i] & ~words_[i]) return false;
  }
  return true;
}

bool IndexSet::intersects(const IndexSet& o) const {
  check_same_universe(o);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  check_same_universe(o);
  IndexSet r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  check_same_universe(o);
  IndexSet r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

IndexSet IndexSet::operator-(const IndexSet& o) const {
  check_same_universe(o);
  IndexSet r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

IndexSet IndexSet::complement() const {
  IndexSet r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (n_ % 64 != 0 && !r.words_.empty()) {
    r.words_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
  }
  return r;
}

std::vector<int> IndexSet::to_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

bool operator<(const IndexSet& a, const IndexSet& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

void Allocation::validate() const {
  Rational total = 0;
  for (const auto& q : p) {
    if (q < 0) throw std::invalid_argument("negative allocation entry");
    total += q;
  }
  if (total != 1) throw std::invalid_argument("allocation does not sum to 1");
}

Collection::Collection(std::vector<Point> alternatives)
    : alts_(std::move(alternatives)),
      weights_(alts_.size(), Rational(1)),
      unweighted_(true) {
  validate();
}

Collection::Collection(std::vector<Point> alternatives, std::vector<Rational> weights)
    : alts_(std::move(alternatives)), weights_(std::move(weights)), unweighted_(true) {
  if (weights_.size() != alts_.size()) {
    throw std::invalid_argument("weight list length differs from alternative list");
  }
  for (const auto& w : weights_) {
    if (w != 1) unweighted_ = false;
  }
  validate();
}

void Collection::validate() const {
  if (alts_.empty()) throw std::invalid_argument("collection must be nonempty");
  for (const auto& a : alts_) {
    if (a.u1 < 0 || a.u1 > 1 || a.u2 < 0 || a.u2 > 1) {
      throw std::invalid_argument("alternative outside [0,1]^2: " + a.str());
    }
  }
  for (const auto& w : weights_) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  }
}

Rational Collection::weight_sum(const IndexSet& s) const {
  Rational total = 0;
  for (int i : s.to_indices()) total += weights_[i];
  return total;
}

bool Collection::symmetric() const {
  std::map<std::pair<std::string, std::string>, Rational> mass;
  for (int i = 0; i < size(); ++i) {
    mass[{alts_[i].u1.str(), alts_[i].u2.str()}] += weights_[i];
  }
  for (const auto& [key, w] : mass) {
    auto it = mass.find({key.second, key.first});
    if (it == mass.end() || it->second != w) return false;
  }
  return true;
}

Collection Collection::duplicated(int j) const {
  if (j < 0 || j >= size()) throw std::out_of_range("duplicated index out of range");
  auto alts = alts_;
  auto w = weights_;
  alts.push_back(alts_[j]);
  w.push_back(weights_[j]);
  return Collection(std::move(alts), std::move(w));
}

Point weighted_avg(const Collection& a, const IndexSet& s) {
  if (s.universe() != a.size()) {
    throw std::invalid_argument("index set universe mismatch");
  }
  if (s.empty()) throw std::invalid_argument("empty averaging set");
  Rational s1 = 0, s2 = 0, w = 0;
  for (int i : s.to_indices()) {
    s1 += a.weights()[i] * a.at(i).u1;
    s2 += a.weights()[i] * a.at(i).u2;
    w += a.weights()[i];
  }
  return {s1 / w, s2 / w};
}

namespace {

bool rel_holds(const Rational& lhs, Rel rel, const Rational& rhs) {
  switch (rel) {
    case Rel::kLt: return lhs < rhs;
    case Rel::kLe: return lhs <= rhs;
    case Rel::kGt: return lhs > rhs;
    case Rel::kGe: return lhs >= rhs;
  }
  return false;
}

}  // namespace

IndexSet quadrant(const Collection& a, const Point& x, Rel rel1, Rel rel2) {
  IndexSet out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    if (rel_holds(a.at(i).u1, rel1, x.u1) && rel_holds(a.at(i).u2, rel2, x.u2)) {
      out.set(i);
    }
  }
  return out;
}

Point expected_outcome(const Collection& a, const Allocation& alloc) {
  if (alloc.size() != a.size()) {
    throw std::invalid_argument("allocation length differs from collection size");
  }
  alloc.validate();
  Point out{0, 0};
  for (int i = 0; i < a.size(); ++i) {
    out.u1 += alloc.p[i] * a.at(i).u1;
    out.u2 += alloc.p[i] * a.at(i).u2;
  }
  return out;
}

Collection parse_collection(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed collection JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("alternatives") || !doc["alternatives"].is_array()) {
    throw std::invalid_argument("collection JSON needs an \"alternatives\" array");
  }
  std::vector<Point> alts;
  for (const auto& row : doc["alternatives"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_string() || !row[1].is_string()) {
      throw std::invalid_argument("each alternative must be a pair of number strings");
    }
    alts.push_back({Rational::from_string(row[0].get<std::string>()),
                    Rational::from_string(row[1].get<std::string>())});
  }
  if (!doc.contains("weights")) return Collection(std::move(alts));
  if (!doc["weights"].is_array()) {
    throw std::invalid_argument("\"weights\" must be an array of number strings");
  }
  std::vector<Rational> weights;
  for (const auto& w : doc["weights"]) {
    if (!w.is_string()) throw std::invalid_argument("weights must be number strings");
    weights.push_back(Rational::from_string(w.get<std::string>()));
  }
  return Collection(std::move(alts), std::move(weights));
}

std::string serialize_collection(const Collection& a) {
  nlohmann::json doc;
  doc["alternatives"] = nlohmann::json::array();
  for (const auto& p : a.alternatives()) {
    doc["alternatives"].push_back({p.u1.str(), p.u2.str()});
  }
  if (!a.unweighted()) {
    doc["weights"] = nlohmann::json::array();
    for (const auto& w : a.weights()) doc["weights"].push_back(w.str());
  }
  return doc.dump(2);
}

}  // namespace bargain
