#include "bargain/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace bargain {

Allocation sa_delta_allocate(const Rational& delta, const std::vector<Rational>& weights,
                             const IndexSet& l1, const IndexSet& l2) {
  int n = static_cast<int>(weights.size());
  if (l1.universe() != n || l2.universe() != n) {
    throw std::invalid_argument("list universe differs from weight count");
  }
  if (delta < 0 || delta > 1) throw std::invalid_argument("delta outside [0,1]");
  for (const auto& w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  }

  Allocation out;
  out.p.assign(n, Rational(0));
  auto spread = [&](const IndexSet& part, const Rational& share) {
    if (share == 0) return;
    Rational total = 0;
    for (int i : part.to_indices()) total += weights[i];
    for (int i : part.to_indices()) out.p[i] += share * weights[i] / total;
  };

  IndexSet inter = l1 & l2;
  IndexSet uni = l1 | l2;
  if (uni.empty()) {
    spread(IndexSet::full(n), 1);
  } else if (inter.empty()) {
    spread(uni, 1);
  } else {
    spread(inter, Rational(1) - delta);
    spread(uni, delta);
  }
  return out;
}

Allocation cudd_allocate(CuddSignal s1, CuddSignal s2, int n) {
  auto check = [n](int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("signal index out of range");
  };
  check(s1.agreement);
  check(s1.disagreement);
  check(s2.agreement);
  check(s2.disagreement);
  Allocation out;
  out.p.assign(n, Rational(0));
  if (s1.agreement == s2.agreement) {
    out.p[s1.agreement] = 1;
  } else if (s1.disagreement == s2.disagreement) {
    out.p[s1.disagreement] = 1;
  } else {
    out.p[s1.disagreement] = Rational(1, 2);
    out.p[s2.disagreement] = Rational(1, 2);
  }
  return out;
}

Allocation dictator_allocate(int sigma1, int n) {
  if (sigma1 < 0 || sigma1 >= n) throw std::invalid_argument("signal index out of range");
  Allocation out;
  out.p.assign(n, Rational(0));
  out.p[sigma1] = 1;
  return out;
}

std::vector<std::vector<int>> k_multisets(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("k_multisets needs n >= 1, k >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - 1) --pos;
    if (pos < 0) break;
    int next = cur[pos] + 1;
    for (int i = pos; i < k; ++i) cur[i] = next;
  }
  return out;
}

Collection lift_k_uniform(const Collection& a, int k, std::int64_t cap) {
  if (k < 1) throw std::invalid_argument("lift needs k >= 1");
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), a.size() + k - 1, k);
  if (!mpz_fits_slong_p(count.get_mpz_t()) || count.get_si() > cap) {
    throw std::invalid_argument("k-uniform lift size exceeds cap");
  }
  std::vector<Point> lifted;
  for (const auto& mset : k_multisets(a.size(), k)) {
    Point p{0, 0};
    for (int i : mset) {
      p.u1 += a.at(i).u1;
      p.u2 += a.at(i).u2;
    }
    p.u1 /= Rational(k);
    p.u2 /= Rational(k);
    lifted.push_back(std::move(p));
  }
  return Collection(std::move(lifted));
}

std::string kind_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kSa: return "sa";
    case MechanismKind::kSaDelta: return "sa-delta";
    case MechanismKind::kSaDeltaWeighted: return "sa-delta-w";
    case MechanismKind::kSaKDelta: return "sa-k-delta";
    case MechanismKind::kDictator: return "dictator";
    case MechanismKind::kCudd: return "cudd";
  }
  return "?";
}

Point MechanismInstance::payoff(const Collection& a, std::uint64_t s1, std::uint64_t s2) const {
  if (a.size() != n_) throw std::invalid_argument("collection size differs from mechanism n");
  return expected_outcome(a, allocate(s1, s2));
}

std::optional<MechanismInstance::SaGameView> MechanismInstance::sa_game_view(
    const Collection&) const {
  return std::nullopt;
}

namespace {

nlohmann::json mask_signal_json(int n, std::uint64_t mask) {
  auto arr = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    if (mask & (std::uint64_t(1) << i)) arr.push_back(i + 1);
  }
  return arr;
}

class SaInstance : public MechanismInstance {
 public:
  SaInstance(MechanismKind kind, MechanismParams params, int n)
      : MechanismInstance(kind, std::move(params), n) {
    weights_ = params_.weights.empty() ? std::vector<Rational>(n, Rational(1))
                                       : params_.weights;
  }

  std::uint64_t signal_count(int) const override {
    if (n_ >= 64) return UINT64_MAX;
    return std::uint64_t(1) << n_;
  }

  Allocation allocate(std::uint64_t s1, std::uint64_t s2) const override {
    if (n_ > 63) throw std::runtime_error("list signals not enumerable for n > 63");
    return sa_delta_allocate(params_.delta, weights_,
                             IndexSet::from_mask(n_, s1), IndexSet::from_mask(n_, s2));
  }

  nlohmann::json signal_json(int, std::uint64_t sig) const override {
    return mask_signal_json(n_, sig);
  }

  std::optional<SaGameView> sa_game_view(const Collection& a) const override {
    if (a.size() != n_) throw std::invalid_argument("collection size differs from mechanism n");
    return SaGameView{params_.delta, Collection(a.alternatives(), weights_)};
  }

 private:
  std::vector<Rational> weights_;
};

class SaLiftedInstance : public MechanismInstance {
 public:
  SaLiftedInstance(MechanismParams params, int n)
      : MechanismInstance(MechanismKind::kSaKDelta, std::move(params), n),
        multisets_(k_multisets(n, params_.k)) {
    if (multisets_.size() > 63) {
      throw std::invalid_argument("lifted signal space not enumerable: lift larger than 63");
    }
  }

  std::uint64_t signal_count(int) const override {
    return std::uint64_t(1) << multisets_.size();
  }

  Allocation allocate(std::uint64_t s1, std::uint64_t s2) const override {
    int m = static_cast<int>(multisets_.size());
    std::vector<Rational> unit(m, Rational(1));
    Allocation over_lift = sa_delta_allocate(params_.delta, unit,
                                             IndexSet::from_mask(m, s1),
                                             IndexSet::from_mask(m, s2));
    Allocation out;
    out.p.assign(n_, Rational(0));
    for (int j = 0; j < m; ++j) {
      if (over_lift.p[j] == 0) continue;
      for (int i : multisets_[j]) {
        out.p[i] += over_lift.p[j] / Rational(params_.k);
      }
    }
    return out;
  }

  nlohmann::json signal_json(int, std::uint64_t sig) const override {
    return mask_signal_json(static_cast<int>(multisets_.size()), sig);
  }

  std::optional<SaGameView> sa_game_view(const Collection& a) const override {
    if (a.size() != n_) throw std::invalid_argument("collection size differs from mechanism n");
    if (!a.unweighted()) {
      throw std::invalid_argument("lifted mechanism is defined for unweighted collections");
    }
    return SaGameView{params_.delta, lift_k_uniform(a, params_.k)};
  }

 private:
  std::vector<std::vector<int>> multisets_;
};

class DictatorInstance : public MechanismInstance {
 public:
  DictatorInstance(int n) : MechanismInstance(MechanismKind::kDictator, {}, n) {}

  std::uint64_t signal_count(int player) const override {
    return player == 1 ? static_cast<std::uint64_t>(n_) : 1;
  }

  Allocation allocate(std::uint64_t s1, std::uint64_t) const override {
    return dictator_allocate(static_cast<int>(s1), n_);
  }

  Point payoff(const Collection& a, std::uint64_t s1, std::uint64_t) const override {
    if (a.size() != n_) throw std::invalid_argument("collection size differs from mechanism n");
    return a.at(static_cast<int>(s1));
  }

  nlohmann::json signal_json(int player, std::uint64_t sig) const override {
    if (player == 2) return nullptr;
    return static_cast<int>(sig) + 1;
  }
};

class CuddInstance : public MechanismInstance {
 public:
  CuddInstance(int n) : MechanismInstance(MechanismKind::kCudd, {}, n) {}

  std::uint64_t signal_count(int) const override {
    return static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_);
  }

  static CuddSignal decode(std::uint64_t sig, int n) {
    return {static_cast<int>(sig / n), static_cast<int>(sig % n)};
  }

  Allocation allocate(std::uint64_t s1, std::uint64_t s2) const override {
    return cudd_allocate(decode(s1, n_), decode(s2, n_), n_);
  }

  Point payoff(const Collection& a, std::uint64_t s1, std::uint64_t s2) const override {
    if (a.size() != n_) throw std::invalid_argument("collection size differs from mechanism n");
    CuddSignal c1 = decode(s1, n_), c2 = decode(s2, n_);
    if (c1.agreement == c2.agreement) return a.at(c1.agreement);
    if (c1.disagreement == c2.disagreement) return a.at(c1.disagreement);
    const Point& b = a.at(c1.disagreement);
    const Point& c = a.at(c2.disagreement);
    return {(b.u1 + c.u1) / Rational(2), (b.u2 + c.u2) / Rational(2)};
  }

  nlohmann::json signal_json(int, std::uint64_t sig) const override {
    CuddSignal s = decode(sig, n_);
    return nlohmann::json{{"g", s.agreement + 1}, {"d", s.disagreement + 1}};
  }
};

}  // namespace

std::unique_ptr<MechanismInstance> build_mechanism(MechanismKind kind,
                                                   const MechanismParams& params, int n) {
  if (n < 1) throw std::invalid_argument("mechanism needs n >= 1");
  if (params.delta < 0 || params.delta > 1) throw std::invalid_argument("delta outside [0,1]");

  switch (kind) {
    case MechanismKind::kSa: {
      if (params.delta != 0) throw std::invalid_argument("plain list rule has delta = 0");
      MechanismParams p = params;
      p.weights.clear();
      return std::make_unique<SaInstance>(kind, std::move(p), n);
    }
    case MechanismKind::kSaDelta: {
      MechanismParams p = params;
      if (!p.weights.empty()) {
        throw std::invalid_argument("unweighted mechanism given explicit weights");
      }
      return std::make_unique<SaInstance>(kind, std::move(p), n);
    }
    case MechanismKind::kSaDeltaWeighted: {
      MechanismParams p = params;
      if (p.weights.empty()) p.weights.assign(n, Rational(1));
      if (static_cast<int>(p.weights.size()) != n) {
        throw std::invalid_argument("weight list length differs from n");
      }
      for (const auto& w : p.weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
      }
      return std::make_unique<SaInstance>(kind, std::move(p), n);
    }
    case MechanismKind::kSaKDelta: {
      if (params.k < 1) throw std::invalid_argument("lifted mechanism needs k >= 1");
      return std::make_unique<SaLiftedInstance>(params, n);
    }
    case MechanismKind::kDictator:
      return std::make_unique<DictatorInstance>(n);
    case MechanismKind::kCudd:
      return std::make_unique<CuddInstance>(n);
  }
  throw std::invalid_argument("unknown mechanism kind");
}

std::unique_ptr<MechanismInstance> build_mechanism_for(MechanismKind kind,
                                                       const MechanismParams& params,
                                                       const Collection& a) {
  MechanismParams p = params;
  if (kind == MechanismKind::kSaDeltaWeighted && p.weights.empty()) {
    p.weights = a.weights();
  }
  if ((kind == MechanismKind::kSa || kind == MechanismKind::kSaDelta ||
       kind == MechanismKind::kSaKDelta) &&
      !a.unweighted()) {
    throw std::invalid_argument("weighted collection needs the weighted list mechanism");
  }
  return build_mechanism(kind, p, a.size());
}

}  // namespace bargain
