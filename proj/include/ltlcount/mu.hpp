#pragma once

#include "ltlcount/formula.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount {

/*! \brief Adapted 3-valued finitary semantics.
 *
 * Propositions decide inside the trace and are unknown beyond it; finally and
 * until unroll inside the trace and fall back to their closed end-of-trace
 * cases. Memoized per call, cost O(|subformulas| * (|trace| + x_depth)).
 */
verdict3 mu_eval(const trace& t, core f, size_t i);

}  // namespace ltlcount
