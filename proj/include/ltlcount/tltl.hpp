#pragma once

#include "ltlcount/formula.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount {

/* applies uniformly to every next occurrence; until/finally are always
 * strong, globally always weak */
enum class next_mode { strong, weak };

/* truncated-path semantics: classical boolean recursion on the finite trace */
bool tltl_eval(const trace& t, const formula& f, size_t i, next_mode mode);

struct comparison {
  verdict5 counting;   // c-LTL
  verdict3 three;      // 3-LTL (mu approximation)
  bool truncated_strong;
  bool truncated_weak;
};

comparison comparison_row(const trace& t, const formula& f);

}  // namespace ltlcount
