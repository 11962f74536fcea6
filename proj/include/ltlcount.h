#ifndef LTLCOUNT_H
#define LTLCOUNT_H

/* C API for the ltlcount shared library. All functions return an error code
 * (LTLC_OK on success) and write results through out-parameters. Strings
 * returned through char** are heap-allocated; release them with
 * ltlc_string_free. Handles are opaque; release them with the matching
 * *_free function. ltlc_last_error() describes the most recent failure on
 * the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ltlc_formula ltlc_formula;
typedef struct ltlc_trace ltlc_trace;

enum ltlc_status {
  LTLC_OK = 0,
  LTLC_EINVAL = 1,       /* bad argument (null handle, bad position, ...) */
  LTLC_EPARSE = 2,       /* formula syntax error */
  LTLC_ETRACE = 3,       /* trace format or formula/trace mismatch */
  LTLC_ELIMIT = 4        /* trace exceeds the configured position limit */
};

enum ltlc_verdict {
  LTLC_FALSE = 0,
  LTLC_PRESUMABLY_FALSE = 1,
  LTLC_INCONCLUSIVE = 2,
  LTLC_PRESUMABLY_TRUE = 3,
  LTLC_TRUE = 4
};

enum ltlc_verdict3 {
  LTLC_V3_BOT = 0,
  LTLC_V3_UNKNOWN = 1,
  LTLC_V3_TOP = 2
};

enum ltlc_format {
  LTLC_FORMAT_TABLE = 0,
  LTLC_FORMAT_JSON = 1,
  LTLC_FORMAT_CSV = 2
};

const char* ltlc_last_error(void);
void ltlc_string_free(char* s);

int ltlc_formula_parse(const char* text, ltlc_formula** out);
void ltlc_formula_free(ltlc_formula* f);
/* canonical rendering of the parsed formula */
int ltlc_formula_render(const ltlc_formula* f, char** out);

int ltlc_trace_parse_csv(const char* text, ltlc_trace** out);
int ltlc_trace_parse_inline(const char* text, ltlc_trace** out);
int ltlc_trace_parse_json(const char* text, ltlc_trace** out);
void ltlc_trace_free(ltlc_trace* t);
size_t ltlc_trace_length(const ltlc_trace* t);
int ltlc_trace_render_json(const ltlc_trace* t, char** out);
int ltlc_trace_render_csv(const ltlc_trace* t, char** out);

/* five-valued predictive verdict at position 1 */
int ltlc_verdict_eval(const ltlc_formula* f, const ltlc_trace* t,
                      size_t max_positions, int* verdict_out);
/* same, at an explicit 1-indexed position (may point past the trace end) */
int ltlc_verdict_eval_at(const ltlc_formula* f, const ltlc_trace* t,
                         size_t position, size_t max_positions,
                         int* verdict_out);

/* per-subformula d/e table in the requested format */
int ltlc_explain(const ltlc_formula* f, const ltlc_trace* t, int format,
                 size_t max_positions, char** out);

/* four-way comparison row {c-LTL, 3-LTL, t-LTL-s, t-LTL-w} */
int ltlc_compare(const ltlc_formula* f, const ltlc_trace* t,
                 size_t max_positions, int* counting_out, int* three_out,
                 int* truncated_strong_out, int* truncated_weak_out);
/* the same row rendered as symbols */
int ltlc_compare_render(const ltlc_formula* f, const ltlc_trace* t,
                        size_t max_positions, char** out);

const char* ltlc_verdict_name(int verdict);

/* runs the built-in property suites with `instances` random draws per suite;
 * writes a human-readable report and the total failure count */
int ltlc_check(uint64_t instances, char** report_out, uint64_t* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* LTLCOUNT_H */
