#include "ltlcount.h"

#include <cstring>
#include <sstream>

#include "ltlcount/check.hpp"
#include "ltlcount/counting.hpp"
#include "ltlcount/formula.hpp"
#include "ltlcount/mu.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/predictor.hpp"
#include "ltlcount/render.hpp"
#include "ltlcount/tltl.hpp"
#include "ltlcount/trace.hpp"

struct ltlc_formula {
  ltlcount::formula f;
};

struct ltlc_trace {
  ltlcount::trace t;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ltlcount::parse_error& e) {
    return fail(LTLC_EPARSE, e.what());
  } catch (const ltlcount::trace_error& e) {
    return fail(LTLC_ETRACE, e.what());
  } catch (const std::exception& e) {
    return fail(LTLC_EINVAL, e.what());
  }
}

/* 0 means unlimited */
bool within_limit(const ltlcount::formula& f, const ltlcount::trace& t,
                  size_t max_positions) {
  if (max_positions == 0)
    return true;
  ltlcount::core_arena arena;
  ltlcount::core root = ltlcount::to_core(f, arena);
  return t.length() + 1 + static_cast<size_t>(ltlcount::x_depth(root)) <=
         max_positions;
}

}  // namespace

extern "C" {

const char* ltlc_last_error(void) { return g_last_error.c_str(); }

void ltlc_string_free(char* s) { std::free(s); }

int ltlc_formula_parse(const char* text, ltlc_formula** out) {
  if (!text || !out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    *out = new ltlc_formula{ltlcount::parse(text)};
    return LTLC_OK;
  });
}

void ltlc_formula_free(ltlc_formula* f) { delete f; }

int ltlc_formula_render(const ltlc_formula* f, char** out) {
  if (!f || !out)
    return fail(LTLC_EINVAL, "null argument");
  *out = dup_string(ltlcount::render(f->f));
  return LTLC_OK;
}

int ltlc_trace_parse_csv(const char* text, ltlc_trace** out) {
  if (!text || !out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    *out = new ltlc_trace{ltlcount::parse_csv(text)};
    return LTLC_OK;
  });
}

int ltlc_trace_parse_inline(const char* text, ltlc_trace** out) {
  if (!text || !out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    *out = new ltlc_trace{ltlcount::parse_inline(text)};
    return LTLC_OK;
  });
}

int ltlc_trace_parse_json(const char* text, ltlc_trace** out) {
  if (!text || !out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    *out = new ltlc_trace{ltlcount::parse_json_trace(text)};
    return LTLC_OK;
  });
}

void ltlc_trace_free(ltlc_trace* t) { delete t; }

size_t ltlc_trace_length(const ltlc_trace* t) { return t ? t->t.length() : 0; }

int ltlc_trace_render_json(const ltlc_trace* t, char** out) {
  if (!t || !out)
    return fail(LTLC_EINVAL, "null argument");
  *out = dup_string(ltlcount::to_json_trace(t->t));
  return LTLC_OK;
}

int ltlc_trace_render_csv(const ltlc_trace* t, char** out) {
  if (!t || !out)
    return fail(LTLC_EINVAL, "null argument");
  *out = dup_string(ltlcount::to_csv(t->t));
  return LTLC_OK;
}

int ltlc_verdict_eval(const ltlc_formula* f, const ltlc_trace* t,
                      size_t max_positions, int* verdict_out) {
  return ltlc_verdict_eval_at(f, t, 1, max_positions, verdict_out);
}

int ltlc_verdict_eval_at(const ltlc_formula* f, const ltlc_trace* t,
                         size_t position, size_t max_positions,
                         int* verdict_out) {
  if (!f || !t || !verdict_out)
    return fail(LTLC_EINVAL, "null argument");
  if (position < 1)
    return fail(LTLC_EINVAL, "positions are 1-indexed");
  return guarded([&] {
    if (!within_limit(f->f, t->t, max_positions))
      return fail(LTLC_ELIMIT, "trace exceeds the position limit");
    ltlcount::core_arena arena;
    ltlcount::core root = ltlcount::to_core(f->f, arena);
    ltlcount::count_table table(t->t, root, arena);
    ltlcount::predictive_evaluator ev(table);
    size_t i = std::min(position, t->t.length() + 1);
    *verdict_out = static_cast<int>(ev.evaluate(root, i));
    return static_cast<int>(LTLC_OK);
  });
}

int ltlc_explain(const ltlc_formula* f, const ltlc_trace* t, int format,
                 size_t max_positions, char** out) {
  if (!f || !t || !out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    if (!within_limit(f->f, t->t, max_positions))
      return fail(LTLC_ELIMIT, "trace exceeds the position limit");
    ltlcount::explain_table table = ltlcount::make_explain(f->f, t->t);
    switch (format) {
      case LTLC_FORMAT_TABLE:
        *out = dup_string(ltlcount::render_text(table));
        return static_cast<int>(LTLC_OK);
      case LTLC_FORMAT_JSON:
        *out = dup_string(ltlcount::render_json(table));
        return static_cast<int>(LTLC_OK);
      case LTLC_FORMAT_CSV:
        *out = dup_string(ltlcount::render_csv(table));
        return static_cast<int>(LTLC_OK);
    }
    return fail(LTLC_EINVAL, "unknown format");
  });
}

int ltlc_compare(const ltlc_formula* f, const ltlc_trace* t,
                 size_t max_positions, int* counting_out, int* three_out,
                 int* truncated_strong_out, int* truncated_weak_out) {
  if (!f || !t || !counting_out || !three_out || !truncated_strong_out ||
      !truncated_weak_out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    if (!within_limit(f->f, t->t, max_positions))
      return fail(LTLC_ELIMIT, "trace exceeds the position limit");
    ltlcount::comparison c = ltlcount::comparison_row(t->t, f->f);
    *counting_out = static_cast<int>(c.counting);
    *three_out = static_cast<int>(c.three);
    *truncated_strong_out = c.truncated_strong ? 1 : 0;
    *truncated_weak_out = c.truncated_weak ? 1 : 0;
    return static_cast<int>(LTLC_OK);
  });
}

int ltlc_compare_render(const ltlc_formula* f, const ltlc_trace* t,
                        size_t max_positions, char** out) {
  if (!f || !t || !out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    if (!within_limit(f->f, t->t, max_positions))
      return fail(LTLC_ELIMIT, "trace exceeds the position limit");
    *out = dup_string(
        ltlcount::render_comparison(ltlcount::comparison_row(t->t, f->f)));
    return static_cast<int>(LTLC_OK);
  });
}

const char* ltlc_verdict_name(int verdict) {
  switch (verdict) {
    case LTLC_FALSE: return "false";
    case LTLC_PRESUMABLY_FALSE: return "presumably-false";
    case LTLC_INCONCLUSIVE: return "inconclusive";
    case LTLC_PRESUMABLY_TRUE: return "presumably-true";
    case LTLC_TRUE: return "true";
  }
  return "invalid";
}

int ltlc_check(uint64_t instances, char** report_out, uint64_t* failures_out) {
  if (!report_out || !failures_out)
    return fail(LTLC_EINVAL, "null argument");
  return guarded([&] {
    auto suites = ltlcount::run_property_suites(instances);
    uint64_t failures = 0;
    std::ostringstream report;
    for (const auto& s : suites) {
      failures += s.failed;
      report << s.name << ": checked " << s.checked << ", failed " << s.failed
             << "\n";
      for (const auto& line : s.failures)
        report << "  " << line << "\n";
    }
    *report_out = dup_string(report.str());
    *failures_out = failures;
    return static_cast<int>(LTLC_OK);
  });
}

}  // extern "C"
