#include "ltlcount/render.hpp"

#include <sstream>

#include <json.hpp>

#include "ltlcount/counting.hpp"
#include "ltlcount/predictor.hpp"

namespace ltlcount {

explain_table make_explain(const formula& f, const trace& t) {
  core_arena arena;
  core root = to_core(f, arena);
  count_table table(t, root, arena);
  predictive_evaluator ev(table);
  explain_table out;
  out.formula_text = render(f);
  out.length = t.length();
  size_t cols = t.length() + 1;
  for (core g : table.closure()) {
    explain_row row;
    row.subformula = render(g);
    for (size_t i = 1; i <= cols; ++i) {
      row.d.push_back(table.d(g, i));
      row.e.push_back(ev.evaluate(g, i));
    }
    out.rows.push_back(std::move(row));
  }
  out.result = ev.evaluate(root, 1);
  return out;
}

namespace {

// column display width; count pairs and verdict symbols use multi-byte
// characters, so count code points rather than bytes
size_t width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xc0) != 0x80)
      ++w;
  return w;
}

std::string pad(const std::string& s, size_t w) {
  std::string out = s;
  for (size_t i = width(s); i < w; ++i)
    out += ' ';
  return out;
}

}  // namespace

std::string render_text(const explain_table& table) {
  size_t cols = table.length + 1;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"subformula", ""};
  for (size_t i = 1; i <= table.length; ++i)
    head.push_back(std::to_string(i));
  head.push_back("EOT");
  grid.push_back(head);
  for (const auto& row : table.rows) {
    std::vector<std::string> dline{row.subformula, "d"};
    std::vector<std::string> eline{"", "e"};
    for (size_t i = 0; i < cols; ++i) {
      dline.push_back(row.d[i].to_string(true));
      eline.push_back(to_symbol(row.e[i]));
    }
    grid.push_back(std::move(dline));
    grid.push_back(std::move(eline));
  }
  std::vector<size_t> widths(grid[0].size(), 0);
  for (const auto& line : grid)
    for (size_t c = 0; c < line.size(); ++c)
      widths[c] = std::max(widths[c], width(line[c]));
  std::ostringstream out;
  out << "formula: " << table.formula_text << "\n";
  for (const auto& line : grid) {
    for (size_t c = 0; c < line.size(); ++c) {
      if (c)
        out << "  ";
      out << pad(line[c], widths[c]);
    }
    out << "\n";
  }
  out << "verdict: " << to_string(table.result) << "\n";
  return out.str();
}

std::string render_csv(const explain_table& table) {
  std::ostringstream out;
  out << "subformula,row";
  for (size_t i = 1; i <= table.length; ++i)
    out << "," << i;
  out << ",EOT\n";
  for (const auto& row : table.rows) {
    out << row.subformula << ",d";
    for (const auto& p : row.d)
      out << ",\"" << p.to_string(false) << "\"";
    out << "\n" << row.subformula << ",e";
    for (auto v : row.e)
      out << "," << to_string(v);
    out << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json to_json(ext_nat x) {
  if (x.is_impossible())
    return "-";
  if (x.is_inf())
    return "inf";
  return x.value();
}

ext_nat ext_from_json(const nlohmann::json& j) {
  if (j.is_number_integer())
    return ext_nat::fin(j.get<int64_t>());
  auto parsed = ext_nat::parse(j.get<std::string>());
  if (!parsed)
    throw std::runtime_error("bad count component in JSON");
  return *parsed;
}

verdict5 verdict_from_name(const std::string& name) {
  for (int v = 0; v <= 4; ++v)
    if (to_string(static_cast<verdict5>(v)) == name)
      return static_cast<verdict5>(v);
  throw std::runtime_error("unknown verdict name '" + name + "'");
}

}  // namespace

std::string render_json(const explain_table& table) {
  nlohmann::json j;
  j["formula"] = table.formula_text;
  j["length"] = table.length;
  auto columns = nlohmann::json::array();
  for (size_t i = 1; i <= table.length; ++i)
    columns.push_back(i);
  columns.push_back("EOT");
  j["columns"] = std::move(columns);
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r;
    r["subformula"] = row.subformula;
    auto d = nlohmann::json::array();
    for (const auto& p : row.d)
      d.push_back(nlohmann::json::array({to_json(p.s), to_json(p.f)}));
    r["d"] = std::move(d);
    auto e = nlohmann::json::array();
    for (auto v : row.e)
      e.push_back(to_string(v));
    r["e"] = std::move(e);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["verdict"] = to_string(table.result);
  return j.dump(2);
}

explain_table parse_explain_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  explain_table table;
  table.formula_text = j.at("formula").get<std::string>();
  table.length = j.at("length").get<size_t>();
  for (const auto& r : j.at("rows")) {
    explain_row row;
    row.subformula = r.at("subformula").get<std::string>();
    for (const auto& p : r.at("d"))
      row.d.push_back({ext_from_json(p.at(0)), ext_from_json(p.at(1))});
    for (const auto& v : r.at("e"))
      row.e.push_back(verdict_from_name(v.get<std::string>()));
    table.rows.push_back(std::move(row));
  }
  table.result = verdict_from_name(j.at("verdict").get<std::string>());
  return table;
}

std::string render_comparison(const comparison& row) {
  std::ostringstream out;
  out << to_symbol(row.counting) << "  " << to_symbol(row.three) << "  "
      << (row.truncated_strong ? "⊤" : "⊥") << "  "
      << (row.truncated_weak ? "⊤" : "⊥");
  return out.str();
}

}  // namespace ltlcount
