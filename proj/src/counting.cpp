#include "ltlcount/counting.hpp"

#include <algorithm>

namespace ltlcount {

count_table::count_table(const trace& t, core root, core_arena& arena)
    : trace_(t), root_(root), arena_(arena) {
  closure_ = subformula_closure(root, arena);
  positions_ = trace_.length() + 1 + static_cast<size_t>(x_depth(root));
  // right-to-left prefill keeps the until/finally self-recursion iterative
  for (size_t i = trace_.length() + 1; i >= 1; --i)
    for (core g : closure_)
      d(g, i);
}

count_table::row& count_table::row_for(core g) const {
  auto it = rows_.find(g);
  if (it == rows_.end()) {
    row r;
    size_t cols = trace_.length() + 1;
    r.value.resize(cols);
    r.known.assign(cols, false);
    r.sat_prefix_max.resize(cols);
    it = rows_.emplace(g, std::move(r)).first;
  }
  return it->second;
}

count_pair count_table::d(core g, size_t i) const {
  size_t cols = trace_.length() + 1;
  // positions past the trace never consult a valuation, so the value at
  // |trace| + 1 repeats for every later position
  if (i > cols)
    i = cols;
  row& r = row_for(g);
  if (!r.known[i - 1]) {
    count_pair v = compute(g, i);
    r.value[i - 1] = v;
    r.known[i - 1] = true;
  }
  return r.value[i - 1];
}

count_pair count_table::compute(core g, size_t i) const {
  size_t n = trace_.length();
  constexpr count_pair never_here{ext_nat::impossible(), ext_nat::inf()};
  switch (g->kind) {
    case core_op::prop: {
      if (i > n)
        return {ext_nat::fin(0), ext_nat::fin(0)};
      int idx = trace_.prop_index(g->name);
      if (idx < 0)
        throw trace_error("proposition '" + g->name + "' not in trace");
      if (trace_.holds(static_cast<size_t>(idx), i))
        return {ext_nat::fin(0), ext_nat::impossible()};
      return {ext_nat::impossible(), ext_nat::fin(0)};
    }
    case core_op::not_:
      return swap(d(g->left, i));
    case core_op::or_:
      return join(d(g->left, i), d(g->right, i));
    case core_op::next:
      return inc(d(g->left, i + 1));
    case core_op::finally_:
      if (i <= n)
        return join(d(g->left, i), inc(d(g, i + 1)));
      return join(d(g->left, i), never_here);
    case core_op::until:
      if (i <= n)
        return join(d(g->right, i), meet(d(g->left, i), inc(d(g, i + 1))));
      return join(d(g->right, i), meet(d(g->left, i), never_here));
  }
  return {};
}

std::optional<int64_t> count_table::max_sat_witness_before(core g,
                                                           size_t i) const {
  size_t cols = trace_.length() + 1;
  size_t upto = std::min(i - 1, cols);
  if (upto == 0)
    return std::nullopt;
  row& r = row_for(g);
  while (r.sat_filled < upto) {
    size_t j = r.sat_filled + 1;
    count_pair p = d(g, j);
    std::optional<int64_t> cur =
        j == 1 ? std::nullopt : r.sat_prefix_max[j - 2];
    if (p.f.is_impossible() && p.s.is_fin())
      cur = std::max(cur.value_or(-1), p.s.value());
    r.sat_prefix_max[j - 1] = cur;
    r.sat_filled = j;
  }
  return r.sat_prefix_max[upto - 1];
}

bool check_admissible(count_pair p, size_t i, size_t n) {
  int64_t slack = static_cast<int64_t>(n) - static_cast<int64_t>(i);
  if (p.f.is_impossible())
    return p.s.is_fin() && p.s.value() <= slack;
  if (p.s.is_impossible())
    return p.f.is_fin() && p.f.value() <= slack;
  auto pending = [&](ext_nat x) {
    return x.is_inf() || (x.is_fin() && x.value() > slack);
  };
  return pending(p.s) && pending(p.f);
}

}  // namespace ltlcount
