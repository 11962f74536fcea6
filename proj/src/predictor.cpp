#include "ltlcount/predictor.hpp"

namespace ltlcount {

verdict3 predictive_evaluator::pred(core g, size_t i) const {
  count_pair p = table_.d(g, i);
  if (!p.s.is_fin())
    return verdict3::unknown;
  auto best = table_.max_sat_witness_before(g, i);
  if (!best)
    return verdict3::unknown;
  return p.s.value() <= *best ? verdict3::top : verdict3::bot;
}

void predictive_evaluator::prefill() {
  if (prefilled_)
    return;
  prefilled_ = true;
  size_t n = table_.trace_length();
  for (size_t i = n + 1; i >= 1; --i) {
    for (core g : table_.closure()) {
      // the unrolled next-wrapper of F/U looks one position ahead, which the
      // previous iteration already settled; compute it before its parent
      if (i <= n &&
          (g->kind == core_op::finally_ || g->kind == core_op::until))
        evaluate(table_.arena().next(g), i);
      evaluate(g, i);
    }
  }
}

verdict5 predictive_evaluator::evaluate(core g, size_t i) {
  // beyond the end marker no valuation and no new witness can appear, so
  // the verdict at |trace| + 1 repeats for every later position
  if (i > table_.trace_length() + 1)
    i = table_.trace_length() + 1;
  prefill();
  auto& cells = cache_[g];
  if (i >= cells.size())
    cells.resize(table_.trace_length() + 2);
  cell& c = cache_[g][i];
  if (c.st == state::done)
    return c.value;
  if (c.st == state::running) {
    cycle_hit_ = true;
    return verdict5::unknown;
  }
  c.st = state::running;
  verdict5 v = compute(g, i);
  cell& c2 = cache_[g][i];
  c2.st = state::done;
  c2.value = v;
  return v;
}

verdict5 predictive_evaluator::compute(core g, size_t i) {
  count_pair p = table_.d(g, i);
  if (p.f.is_impossible())
    return verdict5::true_;
  if (p.s.is_impossible())
    return verdict5::false_;
  if (p.s.is_fin() && p.f.is_fin()) {
    verdict3 own = pred(g, i);
    verdict3 opp = pred(negate(g, table_.arena()), i);
    if (own > opp)
      return verdict5::presumably_true;
    if (own < opp)
      return verdict5::presumably_false;
    return recurse(g, i);
  }
  if (p.s.is_fin()) {  // (b, inf)
    switch (pred(g, i)) {
      case verdict3::top:
        return verdict5::presumably_true;
      case verdict3::bot:
        return verdict5::presumably_false;
      case verdict3::unknown:
        return recurse(g, i);
    }
  }
  if (p.f.is_fin()) {  // (inf, b): decide through the negation's history
    if (g->kind == core_op::not_)
      return neg5(evaluate(g->left, i));
    switch (pred(negate(g, table_.arena()), i)) {
      case verdict3::top:
        return verdict5::presumably_false;
      case verdict3::bot:
        return verdict5::presumably_true;
      case verdict3::unknown:
        return recurse(g, i);
    }
  }
  return recurse(g, i);  // (inf, inf)
}

verdict5 predictive_evaluator::recurse(core g, size_t i) {
  size_t n = table_.trace_length();
  switch (g->kind) {
    case core_op::prop:
      return verdict5::unknown;
    case core_op::not_:
      return neg5(evaluate(g->left, i));
    case core_op::or_:
      return or5(evaluate(g->left, i), evaluate(g->right, i));
    case core_op::next: {
      // collapse the maximal run of next operators in one step
      size_t k = 0;
      core inner = g;
      while (inner->kind == core_op::next) {
        ++k;
        inner = inner->left;
      }
      return evaluate(inner, i + k);
    }
    case core_op::finally_:
      if (i <= n)
        return or5(evaluate(g->left, i),
                   evaluate(table_.arena().next(g), i));
      return evaluate(g->left, i);
    case core_op::until:
      if (i <= n)
        return or5(evaluate(g->right, i),
                   and5(evaluate(g->left, i),
                        evaluate(table_.arena().next(g), i)));
      return evaluate(g->right, i);
  }
  return verdict5::unknown;
}

verdict5 verdict(const trace& t, const formula& f) {
  core_arena arena;
  core root = to_core(f, arena);
  count_table table(t, root, arena);
  predictive_evaluator ev(table);
  return ev.evaluate(root, 1);
}

}  // namespace ltlcount
