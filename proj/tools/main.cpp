#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "ltlcount.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFormula = 3;
constexpr int kExitTrace = 4;
constexpr int kExitVerdictBase = 10;  // 10..14 with --exit-verdict

struct eval_options {
  std::string formula_text;
  std::string trace_file;
  std::string inline_trace;
  size_t at = 1;
  std::string format = "table";
  bool explain = false;
  bool exit_verdict = false;
  size_t max_positions = 100000;
};

bool use_color() {
  return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string colored(const std::string& text, int verdict) {
  if (!use_color())
    return text;
  const char* code = verdict >= LTLC_PRESUMABLY_TRUE ? "\033[32m"
                     : verdict <= LTLC_PRESUMABLY_FALSE ? "\033[31m"
                                                        : "\033[33m";
  return std::string(code) + text + "\033[0m";
}

int die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return code;
}

int parse_formula(const std::string& text, ltlc_formula** out) {
  if (ltlc_formula_parse(text.c_str(), out) != LTLC_OK)
    return die(kExitFormula, ltlc_last_error());
  return 0;
}

int load_trace(const eval_options& opt, ltlc_trace** out) {
  if (!opt.inline_trace.empty()) {
    if (ltlc_trace_parse_inline(opt.inline_trace.c_str(), out) != LTLC_OK)
      return die(kExitTrace, ltlc_last_error());
    return 0;
  }
  std::ifstream in(opt.trace_file);
  if (!in)
    return die(kExitTrace, "cannot open trace file '" + opt.trace_file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  bool json = opt.trace_file.size() >= 5 &&
              opt.trace_file.substr(opt.trace_file.size() - 5) == ".json";
  int rc = json ? ltlc_trace_parse_json(text.c_str(), out)
                : ltlc_trace_parse_csv(text.c_str(), out);
  if (rc != LTLC_OK)
    return die(kExitTrace, ltlc_last_error());
  return 0;
}

int map_status(int rc) {
  switch (rc) {
    case LTLC_EPARSE:
      return kExitFormula;
    case LTLC_ETRACE:
    case LTLC_ELIMIT:
      return kExitTrace;
    default:
      return 1;
  }
}

int run_eval(const eval_options& opt) {
  ltlc_formula* f = nullptr;
  ltlc_trace* t = nullptr;
  if (int rc = parse_formula(opt.formula_text, &f))
    return rc;
  if (int rc = load_trace(opt, &t)) {
    ltlc_formula_free(f);
    return rc;
  }
  int exit_code = 0;
  int verdict = LTLC_INCONCLUSIVE;
  if (int rc = ltlc_verdict_eval_at(f, t, opt.at, opt.max_positions, &verdict);
      rc != LTLC_OK) {
    exit_code = die(map_status(rc), ltlc_last_error());
  } else if (opt.explain) {
    int format = opt.format == "json"  ? LTLC_FORMAT_JSON
                 : opt.format == "csv" ? LTLC_FORMAT_CSV
                                       : LTLC_FORMAT_TABLE;
    char* rendered = nullptr;
    if (int rc2 = ltlc_explain(f, t, format, opt.max_positions, &rendered);
        rc2 != LTLC_OK) {
      exit_code = die(map_status(rc2), ltlc_last_error());
    } else {
      std::cout << rendered;
      ltlc_string_free(rendered);
    }
  } else {
    std::cout << colored(ltlc_verdict_name(verdict), verdict) << "\n";
  }
  ltlc_trace_free(t);
  ltlc_formula_free(f);
  if (exit_code == 0 && opt.exit_verdict)
    return kExitVerdictBase + verdict;
  return exit_code;
}

int run_compare(const eval_options& opt) {
  ltlc_formula* f = nullptr;
  ltlc_trace* t = nullptr;
  if (int rc = parse_formula(opt.formula_text, &f))
    return rc;
  if (int rc = load_trace(opt, &t)) {
    ltlc_formula_free(f);
    return rc;
  }
  int exit_code = 0;
  char* rendered = nullptr;
  if (int rc = ltlc_compare_render(f, t, opt.max_positions, &rendered);
      rc != LTLC_OK) {
    exit_code = die(map_status(rc), ltlc_last_error());
  } else {
    std::cout << "counting  three-valued  truncated-strong  truncated-weak\n";
    std::cout << rendered << "\n";
    ltlc_string_free(rendered);
  }
  ltlc_trace_free(t);
  ltlc_formula_free(f);
  return exit_code;
}

int run_check(uint64_t seeds) {
  char* report = nullptr;
  uint64_t failures = 0;
  if (ltlc_check(seeds, &report, &failures) != LTLC_OK)
    return die(1, ltlc_last_error());
  std::cout << report;
  ltlc_string_free(report);
  if (failures > 0) {
    std::cout << "FAILED: " << failures << " property violations\n";
    return 1;
  }
  std::cout << "all property suites passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counting-based runtime verification of LTL over finite traces"};
  app.require_subcommand(1);

  eval_options opt;
  uint64_t seeds = 1000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-f,--formula", opt.formula_text, "LTL formula")
        ->required();
    auto* file = cmd->add_option("-t,--trace", opt.trace_file,
                                 "trace file (.csv or .json)");
    auto* inl = cmd->add_option("-i,--inline", opt.inline_trace,
                                "inline trace, e.g. r=1001;g=0010");
    file->excludes(inl);
    cmd->add_option("--max-positions", opt.max_positions,
                    "refuse traces needing more table positions (0 = no limit)")
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula on a trace");
  add_common(eval);
  eval->add_option("--at", opt.at, "1-indexed evaluation position")
      ->capture_default_str();
  eval->add_option("--format", opt.format, "output format with --explain")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  eval->add_flag("--explain", opt.explain,
                 "print the per-subformula count/verdict table");
  eval->add_flag("--exit-verdict", opt.exit_verdict,
                 "exit with 10..14 encoding the five-valued verdict");

  CLI::App* compare = app.add_subcommand(
      "compare", "evaluate under the counting, three-valued and truncated "
                 "semantics side by side");
  add_common(compare);

  CLI::App* check =
      app.add_subcommand("check", "run the built-in property suites");
  check->add_option("--seeds", seeds, "random instances per suite")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand(eval) || app.got_subcommand(compare)) {
    if (opt.trace_file.empty() && opt.inline_trace.empty()) {
      std::cerr << "error: provide a trace with --trace or --inline\n";
      return kExitUsage;
    }
    return app.got_subcommand(eval) ? run_eval(opt) : run_compare(opt);
  }
  return run_check(seeds);
}
