#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ltlcount/formula.hpp"

namespace ltlcount {

struct trace_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*! \brief Finite trace: a sequence of total valuations over a fixed
 *         proposition set. Positions are 1-indexed. */
class trace {
public:
  trace() = default;
  trace(std::vector<std::string> props, std::vector<std::vector<bool>> steps);

  const std::vector<std::string>& propositions() const { return props_; }
  size_t length() const { return steps_.size(); }

  /* value of proposition `index` at 1-indexed position i (i <= length) */
  bool holds(size_t prop_index, size_t i) const {
    return steps_[i - 1][prop_index];
  }
  bool holds(const std::string& prop, size_t i) const;

  /* -1 when absent */
  int prop_index(const std::string& name) const;

  trace extended(const std::vector<bool>& step) const;
  trace truncated(size_t from, size_t to) const;  // 1-indexed inclusive range

  friend bool operator==(const trace&, const trace&) = default;

private:
  std::vector<std::string> props_;
  std::vector<std::vector<bool>> steps_;  // steps_[i][p]
};

/* header row of proposition names (optional leading "time" column ignored),
 * then one row per step; truthy cells {1,true,t,⊤}, falsy {0,false,f,-,⊥} */
trace parse_csv(const std::string& text);
std::string to_csv(const trace& t);

/* "name=bits;name=bits" with bits over {0,1}, equal lengths */
trace parse_inline(const std::string& text);
std::string to_inline(const trace& t);

/* {"propositions":["r","g"],"steps":[{"r":true,"g":false},...]} */
trace parse_json_trace(const std::string& text);
std::string to_json_trace(const trace& t);

/* the "more true" preorder: per-position implication respecting polarity of
 * each proposition in f; props absent from f are unconstrained */
bool trace_leq(const trace& a, const trace& b, const formula& f);

}  // namespace ltlcount
