#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ltlcount {

struct suite_result {
  std::string name;
  uint64_t checked = 0;
  uint64_t failed = 0;
  std::vector<std::string> failures;  // one line per counterexample, with seed
};

/* Built-in property suites: lattice and extended-natural algebra laws
 * (exhaustive over small components), pair shape admissibility, minimal
 * witness agreement with the brute-force oracle, the mu/e refinement,
 * negation symmetry, monotonicity under positive strengthening, and
 * single-step extension stability of determined mu verdicts. `instances`
 * controls how many seeded random formula/trace pairs each randomized suite
 * draws. */
std::vector<suite_result> run_property_suites(uint64_t instances);

}  // namespace ltlcount
