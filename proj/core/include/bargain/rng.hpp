#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "bargain/axioms.hpp"
#include "bargain/collection.hpp"

namespace bargain {

// Name recorded in every report header next to the seed.
inline constexpr const char* kPrngName = "mt19937_64";

std::uint64_t splitmix64(std::uint64_t& state);

// One independent, portable stream per (seed, trial). Bounded draws use
// rejection sampling on raw engine output, so results are identical across
// platforms and standard libraries.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64() { return gen_(); }
  std::uint64_t below(std::uint64_t bound);     // uniform in [0, bound)
  long range(long lo, long hi);                 // uniform in [lo, hi]

 private:
  std::mt19937_64 gen_;
};

// n points with both coordinates uniform on {0, 1/grid, ..., 1}.
Collection random_collection(TrialRng& rng, int n, int grid);

// Exactly n points, closed under coordinate swap as a multiset.
Collection random_symmetric_collection(TrialRng& rng, int n, int grid);

// Grid points with weights num/den, num and den uniform in [1, wmax].
Collection random_weighted_collection(TrialRng& rng, int n, int grid, long wmax);

// Positive-scale maps (t1, t2) with grid-valued parameters such that the
// transformed collection stays inside the unit square.
std::pair<AffineMap, AffineMap> random_affine_maps(TrialRng& rng, const Collection& a,
                                                   int grid);

}  // namespace bargain
