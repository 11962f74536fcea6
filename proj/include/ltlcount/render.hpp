#pragma once

#include <string>
#include <vector>

#include "ltlcount/formula.hpp"
#include "ltlcount/numeric.hpp"
#include "ltlcount/tltl.hpp"
#include "ltlcount/trace.hpp"

namespace ltlcount {

struct explain_row {
  std::string subformula;
  std::vector<count_pair> d;  // positions 1..length, then EOT
  std::vector<verdict5> e;
};

struct explain_table {
  std::string formula_text;
  size_t length = 0;
  std::vector<explain_row> rows;  // closure order, children first
  verdict5 result = verdict5::unknown;
};

/* one d-row and one e-row per closure subformula over positions 1..|t| and
 * EOT, mirroring the presentation of the worked tables */
explain_table make_explain(const formula& f, const trace& t);

std::string render_text(const explain_table& table);
std::string render_csv(const explain_table& table);
std::string render_json(const explain_table& table);
explain_table parse_explain_json(const std::string& text);

std::string render_comparison(const comparison& row);

}  // namespace ltlcount
