#include "ltlcount/mu.hpp"

#include <unordered_map>

namespace ltlcount {

namespace {

struct evaluator {
  const trace& t;
  std::unordered_map<core, std::unordered_map<size_t, verdict3>> memo;

  verdict3 eval(core f, size_t i) {
    auto& slot = memo[f];
    if (auto it = slot.find(i); it != slot.end())
      return it->second;
    verdict3 v = compute(f, i);
    memo[f][i] = v;
    return v;
  }

  verdict3 compute(core f, size_t i) {
    size_t n = t.length();
    switch (f->kind) {
      case core_op::prop: {
        if (i > n)
          return verdict3::unknown;
        int idx = t.prop_index(f->name);
        if (idx < 0)
          throw trace_error("proposition '" + f->name + "' not in trace");
        return t.holds(static_cast<size_t>(idx), i) ? verdict3::top
                                                    : verdict3::bot;
      }
      case core_op::not_:
        return neg3(eval(f->left, i));
      case core_op::or_:
        return or3(eval(f->left, i), eval(f->right, i));
      case core_op::next:
        return eval(f->left, i + 1);
      case core_op::finally_:
        if (i <= n)
          return or3(eval(f->left, i), eval(f, i + 1));
        return eval(f->left, i);
      case core_op::until:
        if (i <= n)
          return or3(eval(f->right, i),
                     and3(eval(f->left, i), eval(f, i + 1)));
        return eval(f->right, i);
    }
    return verdict3::unknown;
  }
};

}  // namespace

verdict3 mu_eval(const trace& t, core f, size_t i) {
  evaluator ev{t, {}};
  return ev.eval(f, i);
}

}  // namespace ltlcount
