#include "ltlcount/oracle.hpp"

#include <random>
#include <stdexcept>

namespace ltlcount::oracle {

verdict3 naive_mu(const trace& t, core f, size_t i) {
  size_t n = t.length();
  switch (f->kind) {
    case core_op::prop:
      if (i > n)
        return verdict3::unknown;
      return t.holds(f->name, i) ? verdict3::top : verdict3::bot;
    case core_op::not_:
      return neg3(naive_mu(t, f->left, i));
    case core_op::or_:
      return or3(naive_mu(t, f->left, i), naive_mu(t, f->right, i));
    case core_op::next:
      return naive_mu(t, f->left, i + 1);
    case core_op::finally_:
      if (i > n)
        return naive_mu(t, f->left, i);
      return or3(naive_mu(t, f->left, i), naive_mu(t, f, i + 1));
    case core_op::until:
      if (i > n)
        return naive_mu(t, f->right, i);
      return or3(naive_mu(t, f->right, i),
                 and3(naive_mu(t, f->left, i), naive_mu(t, f, i + 1)));
  }
  return verdict3::unknown;
}

std::optional<int64_t> min_witness(const trace& t, core f, size_t i,
                                   verdict3 target) {
  for (size_t x = 0; i + x <= t.length(); ++x)
    if (naive_mu(t.truncated(i, i + x), f, 1) == target)
      return static_cast<int64_t>(x);
  return std::nullopt;
}

std::vector<trace> all_extensions(const trace& t, size_t k) {
  size_t bits = k * t.propositions().size();
  if (bits > 20)
    throw std::length_error("extension space exceeds 2^20 traces");
  std::vector<trace> out;
  uint64_t combos = uint64_t(1) << bits;
  for (uint64_t mask = 0; mask < combos; ++mask) {
    trace ext = t;
    size_t bit = 0;
    for (size_t step = 0; step < k; ++step) {
      std::vector<bool> vals;
      for (size_t p = 0; p < t.propositions().size(); ++p)
        vals.push_back((mask >> bit++) & 1);
      ext = ext.extended(vals);
    }
    out.push_back(std::move(ext));
  }
  return out;
}

namespace {

formula gen(std::mt19937_64& rng, int budget,
            const std::vector<std::string>& props) {
  std::uniform_int_distribution<size_t> pick_prop(0, props.size() - 1);
  if (budget <= 1)
    return mk_prop(props[pick_prop(rng)]);
  // weights: prop 30, not 15, or 15, and 10, implies 5, X 10, F 7.5, G 5, U 2.5
  std::discrete_distribution<int> pick_op({60, 30, 30, 20, 10, 20, 15, 10, 5});
  int choice = pick_op(rng);
  bool binary = choice == 2 || choice == 3 || choice == 4 || choice == 8;
  if (binary && budget < 3)
    choice = 1;
  switch (choice) {
    case 0:
      return mk_prop(props[pick_prop(rng)]);
    case 1:
      return mk_not(gen(rng, budget - 1, props));
    case 5:
      return mk_next(gen(rng, budget - 1, props));
    case 6:
      return mk_finally(gen(rng, budget - 1, props));
    case 7:
      return mk_globally(gen(rng, budget - 1, props));
    default: {
      std::uniform_int_distribution<int> split(1, budget - 2);
      int l = split(rng);
      formula left = gen(rng, l, props);
      formula right = gen(rng, budget - 1 - l, props);
      if (choice == 2)
        return mk_or(left, right);
      if (choice == 3)
        return mk_and(left, right);
      if (choice == 4)
        return mk_implies(left, right);
      return mk_until(left, right);
    }
  }
}

}  // namespace

formula random_formula(uint64_t seed, int size,
                       const std::vector<std::string>& props) {
  std::mt19937_64 rng(seed);
  return gen(rng, size, props);
}

trace random_trace(uint64_t seed, size_t len,
                   const std::vector<std::string>& props) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::vector<bool>> steps(len);
  for (auto& step : steps)
    for (size_t p = 0; p < props.size(); ++p)
      step.push_back(rng() & 1);
  return trace(props, std::move(steps));
}

}  // namespace ltlcount::oracle
