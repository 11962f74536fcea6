#pragma once

#include <unordered_map>
#include <vector>

#include "ltlcount/counting.hpp"
#include "ltlcount/formula.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount {

/*! \brief Five-valued predictive evaluation over a witness-count table.
 *
 * Caches verdicts per (subformula, position); an instance is bound to one
 * table and is not thread-safe.
 */
class predictive_evaluator {
public:
  explicit predictive_evaluator(const count_table& table) : table_(table) {}

  /* history-based prediction: top when some past satisfaction witness is at
   * least as long as the current need, bot when all are shorter, unknown when
   * the history is empty; requires a finite s-component at (g, i) */
  verdict3 pred(core g, size_t i) const;

  verdict5 evaluate(core g, size_t i);

  /* true when evaluate() ever re-entered an in-progress (g, i); the
   * recursion never loops by construction, this is a safety net only */
  bool cycle_hit() const { return cycle_hit_; }

  const count_table& table() const { return table_; }

private:
  verdict5 recurse(core g, size_t i);  // the auxiliary function r
  verdict5 compute(core g, size_t i);
  /* fill the cache from the end marker back to position 1 so later lookups
   * recurse at most once per subformula, independent of the trace length */
  void prefill();

  const count_table& table_;
  enum class state : uint8_t { fresh, running, done };
  struct cell {
    state st = state::fresh;
    verdict5 value = verdict5::unknown;
  };
  std::unordered_map<core, std::vector<cell>> cache_;
  bool cycle_hit_ = false;
  bool prefilled_ = false;
};

/* top-level entry: rewrite to core, build the table, evaluate at position 1 */
verdict5 verdict(const trace& t, const formula& f);

}  // namespace ltlcount
