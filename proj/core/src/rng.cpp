#include "bargain/rng.hpp"

#include <stdexcept>

namespace bargain {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t state = seed;
  splitmix64(state);
  state += trial;
  gen_.seed(splitmix64(state));
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty draw range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = gen_();
  } while (r >= limit);
  return r % bound;
}

long TrialRng::range(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty draw range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Rational grid_coord(TrialRng& rng, int grid) {
  return Rational(rng.range(0, grid), grid);
}

}  // namespace

Collection random_collection(TrialRng& rng, int n, int grid) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back({grid_coord(rng, grid), grid_coord(rng, grid)});
  return Collection(pts);
}

Collection random_symmetric_collection(TrialRng& rng, int n, int grid) {
  std::vector<Point> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) + 1 < n) {
    Point p{grid_coord(rng, grid), grid_coord(rng, grid)};
    pts.push_back(p);
    if (p.u1 != p.u2) pts.push_back({p.u2, p.u1});
  }
  if (static_cast<int>(pts.size()) < n) {
    Rational c = grid_coord(rng, grid);
    pts.push_back({c, c});
  }
  return Collection(pts);
}

Collection random_weighted_collection(TrialRng& rng, int n, int grid, long wmax) {
  std::vector<Point> pts;
  std::vector<Rational> weights;
  for (int i = 0; i < n; ++i) {
    pts.push_back({grid_coord(rng, grid), grid_coord(rng, grid)});
    weights.emplace_back(rng.range(1, wmax), rng.range(1, wmax));
  }
  return Collection(pts, weights);
}

std::pair<AffineMap, AffineMap> random_affine_maps(TrialRng& rng, const Collection& a,
                                                   int grid) {
  auto draw = [&](int coord) {
    Rational mmax(0);
    for (const Point& p : a.alternatives()) {
      mmax = max(mmax, coord == 0 ? p.u1 : p.u2);
    }
    Rational alpha(rng.range(1, grid), grid);
    Rational slack = (Rational(1) - alpha * mmax) * Rational(grid);
    mpz_class hi;
    mpz_fdiv_q(hi.get_mpz_t(), slack.num().get_mpz_t(), slack.den().get_mpz_t());
    Rational beta(rng.range(0, hi.get_si()), grid);
    return AffineMap{alpha, beta};
  };
  return {draw(0), draw(1)};
}

}  // namespace bargain
