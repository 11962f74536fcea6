#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ltlcount/formula.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount {

/*! \brief Witness-count table d(subformula, position).
 *
 * Positions run 1..N with N = |trace| + 1 + x_depth(root); only the next
 * operator advances past the end of the trace, so N covers every position the
 * evaluation can reach. Entries are memoized; lookups for formulas outside the
 * closure (the unrolled next-wrappers the predictive evaluator introduces) are
 * computed on demand against the same trace.
 */
class count_table {
public:
  count_table(const trace& t, core root, core_arena& arena);

  count_pair d(core g, size_t i) const;

  /* largest s with d(g,j) = (s,-) for 1 <= j < i; nullopt when no such j */
  std::optional<int64_t> max_sat_witness_before(core g, size_t i) const;

  core root() const { return root_; }
  const std::vector<core>& closure() const { return closure_; }
  const trace& tr() const { return trace_; }
  core_arena& arena() const { return arena_; }
  size_t trace_length() const { return trace_.length(); }
  /* N = |trace| + 1 + x_depth(root); the EOT column is |trace| + 1 */
  size_t positions() const { return positions_; }

private:
  struct row {
    std::vector<count_pair> value;
    std::vector<bool> known;
    /* prefix maxima of satisfaction witnesses, filled left to right */
    std::vector<std::optional<int64_t>> sat_prefix_max;
    size_t sat_filled = 0;
  };

  count_pair compute(core g, size_t i) const;
  row& row_for(core g) const;

  const trace trace_;
  core root_;
  core_arena& arena_;
  std::vector<core> closure_;
  std::vector<int> prop_index_;  // per closure prop node; aligned lazily
  size_t positions_;
  mutable std::unordered_map<core, row> rows_;
};

/* Admissible pair shapes: (a,-), (-,a), (b1,b2), (b1,inf), (inf,b2),
 * (inf,inf) with a <= n - i and finite b > n - i. */
bool check_admissible(count_pair p, size_t i, size_t n);

}  // namespace ltlcount
