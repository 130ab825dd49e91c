#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bargain/collection.hpp"
#include "json.hpp"

namespace bargain {

// Shared knobs for the verification suites. Thread count never changes
// results or report bytes, only wall time.
struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 200;
  int n_min = 2;
  int n_max = 6;
  int grid = 8;
  std::vector<Rational> deltas = {Rational(1, 4), Rational(1, 2), Rational(1)};
  std::uint64_t budget = std::uint64_t(1) << 24;
  int threads = 1;
};

struct SuiteResult {
  nlohmann::json report;  // full per-trial payload, deterministic bytes
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool all_passed() const { return failed == 0; }
};

// theorem1 : characterization vs brute force for the list mechanism, the
//            nonemptiness and delta-efficiency corollary, and the two
//            constructive equilibrium profiles. The equality direction is a
//            delta < 1 property and fails at delta = 1 (see README); the
//            report keeps the per-delta verdicts either way.
// cudd     : characterization vs brute force for constrained unanimity,
//            efficient-outcome existence, constructed profiles, and the
//            symmetry / repetition checks over the fixture set.
// afp      : fixed-point iteration, chain and diagonal structure, membership
//            test against the subset oracle.
// lemmas   : per-equilibrium structural properties of the list game,
//            including the brute-force best-response maximum. The
//            per-equilibrium properties are delta < 1 properties and fail
//            on the extra delta = 1 equilibria (see README).
// axioms   : fixture-by-mechanism verdict matrix plus the named
//            demonstrations the impossibility results predict.
// prop2    : lifted-list outcomes stay close to the convex frontier.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace bargain
