#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltlcount/formula.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount::oracle {

/* Reference 3-valued evaluation, written as the literal recursion with no
 * memoization or table sharing. Deliberately independent of mu_eval so the
 * two implementations cannot share a bug. Exponential in trace length; use on
 * small inputs only. */
verdict3 naive_mu(const trace& t, core f, size_t i);

/* least x >= 0 such that the truncated segment t[i..i+x], evaluated by
 * naive_mu at position 1, hits `target`; nullopt when no x <= |t| - i works */
std::optional<int64_t> min_witness(const trace& t, core f, size_t i,
                                   verdict3 target);

/* every extension of t by k steps, deterministic order; guarded to
 * 2^(k * |props|) <= 2^20 */
std::vector<trace> all_extensions(const trace& t, size_t k);

/* seeded, reproducible generators for the property suites */
formula random_formula(uint64_t seed, int size,
                       const std::vector<std::string>& props);
trace random_trace(uint64_t seed, size_t len,
                   const std::vector<std::string>& props);

}  // namespace ltlcount::oracle
