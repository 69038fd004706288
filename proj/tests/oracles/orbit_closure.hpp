#pragma once

#include <string>
#include <vector>

#include "quivkit/repmod.hpp"

namespace quivkit::oracle {

struct OrbitClosureResult {
  int partitions = 0;
  int orbits_hit = 0;   // partitions realized by some grid point
  long grid_points = 0;
  long edges = 0;       // distinct (orbit, degenerate orbit) pairs seen
  bool agree = false;   // closure relation == kp_leq, and every orbit hit
  std::vector<std::string> mismatches;
};

// Brute-force degeneration order on E_beta. Every point with entries in
// {-1, 0, 1, 2} is classified up to isomorphism; a diagonal one-parameter
// subgroup t -> (t^{w_{i,r}}) sends x to a limit whenever all nonzero entries
// have nonnegative exponent w_{target,r} - w_{source,c}, and the limit keeps
// the entries of exponent zero. The reflexive-transitive closure of
// "x degenerates to lim" is compared against the hom order of the table.
OrbitClosureResult orbit_closure_check(const HomTable& table, const Root& beta);

}  // namespace quivkit::oracle
