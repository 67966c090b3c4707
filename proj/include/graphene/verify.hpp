// Cross-construction verification: replays the identities that tie the six
// routes together and reports one named result per check.
#pragma once

#include "graphene/rational.hpp"

#include <string>
#include <vector>

namespace graphene {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  Rat radius{0};
  std::vector<CheckResult> checks;

  bool allPass() const;
};

// Runs the six-way construction equality at the given radius (trim margin 2),
// the two projection identities, the orbit-size checks, the group axioms for
// m = 2 and m = 3, and the |F_M| counts for M <= 6.  radius must be >= 4.
VerifyReport verifyAll(const Rat& radius);

} // namespace graphene
