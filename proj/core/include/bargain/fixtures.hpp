#pragma once

#include <string>
#include <vector>

#include "bargain/collection.hpp"

namespace bargain {

// Worked collections used across tests and demonstrations.

// ((1,0),(0,1),(99/100,99/100),(2/3,2/3)): the plain list mechanism has an
// inefficient equilibrium here with outcome (2/3,2/3).
Collection example1();

// ((1,1),(98/100,0),(0,98/100)): two averaged fixed points, (33/50,33/50)
// and (1,1).
Collection example2();

// Size 3^(k+1) - 1: for each j in [0,k], 3^j copies of (2^-j, 0) and of
// (0, 2^-j). Has a diagonal fixed point strictly between consecutive grid
// levels for every j in [1,k].
Collection example3(int k);

// Non-uniqueness witnesses.
Collection thm2_a();    // ((0,0),(1,1))
Collection thm2_ap();   // ((0,1),(1,0))
Collection thm2_app();  // ((0,1),(1,1))

// Efficiency-impossibility witnesses; the last takes the efficiency slack.
Collection thm3_a();     // ((1,0),(0,1))
Collection thm3_ap();    // ((1,0),(0,1),(0,1))
Collection thm3_app();   // ((1,0),(1,0),(0,1))
Collection thm3_appp(const Rational& eps);  // ((1,0),(3/4+eps/2, 3/4+eps/2),(0,1))

struct NamedFixture {
  std::string name;
  Collection collection;
};

// Stable-ordered fixture set small enough for the axiom suites; the pie
// grids come from pie_collection.
std::vector<NamedFixture> standard_fixtures();

}  // namespace bargain
