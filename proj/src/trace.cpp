#include "ltlcount/trace.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ltlcount {

trace::trace(std::vector<std::string> props,
             std::vector<std::vector<bool>> steps)
    : props_(std::move(props)), steps_(std::move(steps)) {
  for (const auto& step : steps_)
    if (step.size() != props_.size())
      throw trace_error("valuation is not total over the proposition set");
}

bool trace::holds(const std::string& prop, size_t i) const {
  int idx = prop_index(prop);
  if (idx < 0)
    throw trace_error("proposition '" + prop + "' not in trace");
  return holds(static_cast<size_t>(idx), i);
}

int trace::prop_index(const std::string& name) const {
  auto it = std::find(props_.begin(), props_.end(), name);
  return it == props_.end() ? -1 : static_cast<int>(it - props_.begin());
}

trace trace::extended(const std::vector<bool>& step) const {
  auto steps = steps_;
  steps.push_back(step);
  return trace(props_, std::move(steps));
}

trace trace::truncated(size_t from, size_t to) const {
  std::vector<std::vector<bool>> steps;
  for (size_t i = from; i <= to && i <= length(); ++i)
    steps.push_back(steps_[i - 1]);
  return trace(props_, std::move(steps));
}

// -------------------------------------------------------------------- CSV

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// {1,true,t,⊤} are truthy, {0,false,f,-,⊥} falsy, case-insensitive
std::optional<bool> parse_cell(const std::string& raw) {
  std::string s = lower(trim(raw));
  if (s == "1" || s == "true" || s == "t" || s == "⊤")
    return true;
  if (s == "0" || s == "false" || s == "f" || s == "-" || s == "−" ||
      s == "⊥")
    return false;
  return std::nullopt;
}

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty())
      throw trace_error("empty proposition name");
    if (!seen.insert(n).second)
      throw trace_error("duplicate proposition name '" + n + "'");
  }
}

}  // namespace

trace parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw trace_error("empty CSV input");
  auto header = split(line, ',');
  for (auto& h : header)
    h = trim(h);
  size_t first_col = 0;
  if (!header.empty() && lower(header[0]) == "time")
    first_col = 1;
  std::vector<std::string> props(header.begin() + first_col, header.end());
  if (props.empty())
    throw trace_error("CSV header has no proposition columns");
  check_names(props);

  std::vector<std::vector<bool>> steps;
  size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty())
      continue;
    auto cells = split(line, ',');
    if (cells.size() != header.size())
      throw trace_error("ragged row " + std::to_string(row_no) + ": expected " +
                        std::to_string(header.size()) + " cells, got " +
                        std::to_string(cells.size()));
    std::vector<bool> step;
    for (size_t c = first_col; c < cells.size(); ++c) {
      auto v = parse_cell(cells[c]);
      if (!v)
        throw trace_error("unknown cell token at row " +
                          std::to_string(row_no) + ", column " +
                          props[c - first_col]);
      step.push_back(*v);
    }
    steps.push_back(std::move(step));
  }
  return trace(std::move(props), std::move(steps));
}

std::string to_csv(const trace& t) {
  std::string out;
  const auto& props = t.propositions();
  for (size_t p = 0; p < props.size(); ++p) {
    if (p)
      out += ',';
    out += props[p];
  }
  out += '\n';
  for (size_t i = 1; i <= t.length(); ++i) {
    for (size_t p = 0; p < props.size(); ++p) {
      if (p)
        out += ',';
      out += t.holds(p, i) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

// ------------------------------------------------------------------ inline

trace parse_inline(const std::string& text) {
  if (trim(text).empty())
    throw trace_error("empty trace input");
  std::vector<std::string> props;
  std::vector<std::string> bits;
  for (const auto& part : split(text, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw trace_error("expected name=bits in '" + part + "'");
    std::string name = trim(part.substr(0, eq));
    std::string bs = trim(part.substr(eq + 1));
    if (name.empty())
      throw trace_error("empty proposition name in '" + part + "'");
    for (char c : bs)
      if (c != '0' && c != '1')
        throw trace_error("bits for '" + name + "' must be over {0,1}");
    props.push_back(name);
    bits.push_back(bs);
  }
  check_names(props);
  for (const auto& b : bits)
    if (b.size() != bits[0].size())
      throw trace_error("length mismatch: all bit strings must have equal length");
  std::vector<std::vector<bool>> steps(bits[0].size());
  for (size_t i = 0; i < bits[0].size(); ++i)
    for (const auto& b : bits)
      steps[i].push_back(b[i] == '1');
  return trace(std::move(props), std::move(steps));
}

std::string to_inline(const trace& t) {
  std::string out;
  const auto& props = t.propositions();
  for (size_t p = 0; p < props.size(); ++p) {
    if (p)
      out += ';';
    out += props[p];
    out += '=';
    for (size_t i = 1; i <= t.length(); ++i)
      out += t.holds(p, i) ? '1' : '0';
  }
  return out;
}

// -------------------------------------------------------------------- JSON

trace parse_json_trace(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw trace_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("propositions") || !j.contains("steps"))
    throw trace_error("expected {\"propositions\": [...], \"steps\": [...]}");
  std::vector<std::string> props;
  for (const auto& p : j["propositions"])
    props.push_back(p.get<std::string>());
  check_names(props);
  std::vector<std::vector<bool>> steps;
  for (const auto& step : j["steps"]) {
    std::vector<bool> vals;
    for (const auto& p : props) {
      if (!step.contains(p))
        throw trace_error("step " + std::to_string(steps.size() + 1) +
                          " missing proposition '" + p + "'");
      vals.push_back(step[p].get<bool>());
    }
    steps.push_back(std::move(vals));
  }
  return trace(std::move(props), std::move(steps));
}

std::string to_json_trace(const trace& t) {
  nlohmann::json j;
  j["propositions"] = t.propositions();
  auto steps = nlohmann::json::array();
  for (size_t i = 1; i <= t.length(); ++i) {
    nlohmann::json step;
    for (size_t p = 0; p < t.propositions().size(); ++p)
      step[t.propositions()[p]] = t.holds(p, i);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

// --------------------------------------------------------------- more-true

bool trace_leq(const trace& a, const trace& b, const formula& f) {
  if (a.length() != b.length())
    throw trace_error("traces have different lengths");
  if (a.propositions() != b.propositions())
    throw trace_error("traces are over different proposition sets");
  auto pol = polarities(f);
  for (const auto& [name, p] : pol) {
    int idx = a.prop_index(name);
    if (idx < 0)
      continue;  // formula proposition absent from these traces
    for (size_t i = 1; i <= a.length(); ++i) {
      bool va = a.holds(static_cast<size_t>(idx), i);
      bool vb = b.holds(static_cast<size_t>(idx), i);
      switch (p) {
        case polarity::mixed:
          if (va != vb)
            return false;
          break;
        case polarity::pos:
          if (va && !vb)
            return false;
          break;
        case polarity::neg:
          if (vb && !va)
            return false;
          break;
      }
    }
  }
  return true;
}

}  // namespace ltlcount
