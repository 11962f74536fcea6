#include "ltlcount/check.hpp"

#include <random>

#include "ltlcount/counting.hpp"
#include "ltlcount/formula.hpp"
#include "ltlcount/mu.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/oracle.hpp"
#include "ltlcount/predictor.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount {

namespace {

const std::vector<std::string> kProps{"p", "q"};

struct drawn {
  formula f;
  trace t;
  std::string label;
};

drawn draw(uint64_t seed, int max_size, size_t max_len) {
  int size = 2 + static_cast<int>(seed % static_cast<uint64_t>(max_size - 1));
  size_t len = 1 + (seed / 7) % max_len;
  drawn d{oracle::random_formula(seed, size, kProps),
          oracle::random_trace(seed, len, kProps), ""};
  d.label = "seed=" + std::to_string(seed) + " formula=" + render(d.f) +
            " trace=" + to_inline(d.t);
  return d;
}

void note(suite_result& r, const std::string& line) {
  ++r.failed;
  if (r.failures.size() < 5)
    r.failures.push_back(line);
}

template <class Fn>
suite_result randomized(const std::string& name, uint64_t salt,
                        uint64_t instances, Fn&& body) {
  suite_result r;
  r.name = name;
  for (uint64_t k = 0; k < instances; ++k) {
    ++r.checked;
    body(salt + k, r);
  }
  return r;
}

suite_result pair_algebra() {
  suite_result r;
  r.name = "pair-algebra";
  const ext_nat comps[] = {ext_nat::fin(0),  ext_nat::fin(1),
                           ext_nat::fin(2),  ext_nat::fin(3),
                           ext_nat::inf(),   ext_nat::impossible()};
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok)
      note(r, what);
  };
  for (ext_nat a : comps)
    for (ext_nat b : comps) {
      expect(a + b == b + a, "plus not commutative at " + a.to_string() +
                                 "," + b.to_string());
      expect(a + ext_nat::fin(0) == a, "zero not neutral at " + a.to_string());
      for (ext_nat c : comps)
        expect((a + b) + c == a + (b + c),
               "plus not associative at " + a.to_string() + "," +
                   b.to_string() + "," + c.to_string());
    }
  std::vector<count_pair> pairs;
  for (ext_nat s : comps)
    for (ext_nat f : comps)
      pairs.push_back({s, f});
  for (count_pair p : pairs) {
    std::string ps = p.to_string();
    expect(swap(swap(p)) == p, "swap not an involution at " + ps);
    expect(join(p, p) == p, "join not idempotent at " + ps);
    expect(meet(p, p) == p, "meet not idempotent at " + ps);
    for (count_pair q : pairs) {
      std::string pq = ps + "," + q.to_string();
      expect(join(p, q) == join(q, p), "join not commutative at " + pq);
      expect(meet(p, q) == meet(q, p), "meet not commutative at " + pq);
      expect(join(p, meet(p, q)) == p, "absorption (join) fails at " + pq);
      expect(meet(p, join(p, q)) == p, "absorption (meet) fails at " + pq);
      expect(pair_leq(p, q) == (join(p, q) == q),
             "order/join disagreement at " + pq);
      expect(pair_leq(p, q) == (meet(p, q) == p),
             "order/meet disagreement at " + pq);
      expect(swap(join(p, q)) == meet(swap(p), swap(q)),
             "swap does not dualize join at " + pq);
      expect(inc(join(p, q)) == join(inc(p), inc(q)),
             "inc does not distribute over join at " + pq);
      expect(inc(meet(p, q)) == meet(inc(p), inc(q)),
             "inc does not distribute over meet at " + pq);
      for (count_pair o : pairs)
        expect(join(join(p, q), o) == join(p, join(q, o)),
               "join not associative at " + pq + "," + o.to_string());
    }
  }
  return r;
}

void shape_admissibility(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 7, 6);
  core_arena arena;
  core root = to_core(d.f, arena);
  count_table table(d.t, root, arena);
  size_t n = d.t.length();
  for (core g : table.closure())
    for (size_t i = 1; i <= n + 1; ++i)
      if (!check_admissible(table.d(g, i), i, n))
        note(r, d.label + " subformula=" + render(g) +
                    " i=" + std::to_string(i) +
                    " pair=" + table.d(g, i).to_string());
}

void minimal_witness(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 5, 5);
  core_arena arena;
  core root = to_core(d.f, arena);
  count_table table(d.t, root, arena);
  size_t n = d.t.length();
  for (core g : table.closure())
    for (size_t i = 1; i <= n + 1; ++i) {
      count_pair p = table.d(g, i);
      int64_t slack = static_cast<int64_t>(n) - static_cast<int64_t>(i);
      std::optional<int64_t> expect_top, expect_bot;
      if (p.s.is_fin() && p.s.value() <= slack)
        expect_top = p.s.value();
      if (p.f.is_fin() && p.f.value() <= slack)
        expect_bot = p.f.value();
      if (oracle::min_witness(d.t, g, i, verdict3::top) != expect_top ||
          oracle::min_witness(d.t, g, i, verdict3::bot) != expect_bot)
        note(r, d.label + " subformula=" + render(g) +
                    " i=" + std::to_string(i) + " pair=" + p.to_string());
    }
}

void three_valued_agreement(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 7, 6);
  core_arena arena;
  core root = to_core(d.f, arena);
  for (size_t i = 1; i <= d.t.length() + 2; ++i)
    if (mu_eval(d.t, root, i) != oracle::naive_mu(d.t, root, i))
      note(r, d.label + " i=" + std::to_string(i));
}

void refinement(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 7, 6);
  core_arena arena;
  core root = to_core(d.f, arena);
  count_table table(d.t, root, arena);
  predictive_evaluator ev(table);
  for (size_t i = 1; i <= d.t.length() + 1; ++i) {
    verdict3 m = mu_eval(d.t, root, i);
    verdict5 e = ev.evaluate(root, i);
    bool ok = (m == verdict3::top && e == verdict5::true_) ||
              (m == verdict3::bot && e == verdict5::false_) ||
              (m == verdict3::unknown && e != verdict5::true_ &&
               e != verdict5::false_);
    if (!ok)
      note(r, d.label + " i=" + std::to_string(i) + " mu=" + to_string(m) +
                  " e=" + to_string(e));
  }
}

void negation_symmetry(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 7, 6);
  core_arena arena;
  core root = to_core(d.f, arena);
  core neg_root = negate(root, arena);
  count_table table(d.t, root, arena);
  predictive_evaluator ev(table);
  for (size_t i = 1; i <= d.t.length() + 1; ++i) {
    if (table.d(neg_root, i) != swap(table.d(root, i)))
      note(r, d.label + " i=" + std::to_string(i) + " d-swap mismatch");
    if (ev.evaluate(neg_root, i) != neg5(ev.evaluate(root, i)))
      note(r, d.label + " i=" + std::to_string(i) + " e-negation mismatch");
  }
  if (ev.cycle_hit())
    note(r, d.label + " evaluation re-entered an in-progress cell");
}

void monotonicity(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 7, 6);
  auto pol = polarities(d.f);
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 1);
  std::vector<std::vector<bool>> steps;
  for (size_t i = 1; i <= d.t.length(); ++i) {
    std::vector<bool> step;
    for (size_t p = 0; p < kProps.size(); ++p) {
      bool v = d.t.holds(p, i);
      auto it = pol.find(kProps[p]);
      bool flip = rng() & 1;
      if (it == pol.end())
        v = flip ? !v : v;  // unconstrained by the formula
      else if (it->second == polarity::pos)
        v = v || flip;
      else if (it->second == polarity::neg)
        v = v && !flip;
      step.push_back(v);
    }
    steps.push_back(std::move(step));
  }
  trace stronger(kProps, std::move(steps));
  if (!trace_leq(d.t, stronger, d.f)) {
    note(r, d.label + " generator broke the more-true preorder");
    return;
  }
  core_arena a1, a2;
  core r1 = to_core(d.f, a1);
  core r2 = to_core(d.f, a2);
  count_table t1(d.t, r1, a1);
  count_table t2(stronger, r2, a2);
  predictive_evaluator e1(t1), e2(t2);
  for (size_t i = 1; i <= d.t.length() + 1; ++i)
    if (!pair_leq(t1.d(r1, i), t2.d(r2, i)))
      note(r, d.label + " stronger=" + to_inline(stronger) +
                  " i=" + std::to_string(i) + " d not monotone");
  // only the decided verdicts transfer; predictions may flip either way
  verdict5 weak = e1.evaluate(r1, 1);
  verdict5 strong = e2.evaluate(r2, 1);
  if (weak == verdict5::true_ && strong != verdict5::true_)
    note(r, d.label + " stronger=" + to_inline(stronger) +
                " true verdict not preserved");
  if (strong == verdict5::false_ && weak != verdict5::false_)
    note(r, d.label + " stronger=" + to_inline(stronger) +
                " false verdict not reflected");
}

void extension_stability(uint64_t seed, suite_result& r) {
  drawn d = draw(seed, 6, 5);
  core_arena arena;
  core root = to_core(d.f, arena);
  verdict3 m = mu_eval(d.t, root, 1);
  verdict5 v = verdict(d.t, d.f);
  for (const trace& ext : oracle::all_extensions(d.t, 1)) {
    if (m != verdict3::unknown && mu_eval(ext, root, 1) != m)
      note(r, d.label + " ext=" + to_inline(ext) + " mu verdict revoked");
    if ((v == verdict5::true_ || v == verdict5::false_) &&
        verdict(ext, d.f) != v)
      note(r, d.label + " ext=" + to_inline(ext) + " decided verdict revoked");
  }
}

}  // namespace

std::vector<suite_result> run_property_suites(uint64_t instances) {
  std::vector<suite_result> out;
  out.push_back(pair_algebra());
  out.push_back(
      randomized("shape-admissibility", 1'000'000, instances,
                 shape_admissibility));
  out.push_back(
      randomized("minimal-witness", 2'000'000, instances, minimal_witness));
  out.push_back(randomized("three-valued-agreement", 3'000'000, instances,
                           three_valued_agreement));
  out.push_back(randomized("refinement", 4'000'000, instances, refinement));
  out.push_back(
      randomized("negation-symmetry", 5'000'000, instances, negation_symmetry));
  out.push_back(randomized("monotonicity", 6'000'000, instances, monotonicity));
  out.push_back(randomized("extension-stability", 7'000'000, instances,
                           extension_stability));
  return out;
}

}  // namespace ltlcount
