#include <doctest.h>

#include <json.hpp>

#include "ltlcount/render.hpp"

using namespace ltlcount;

TEST_CASE("table text layout") {
  explain_table table =
      make_explain(parse("F g"), parse_inline("g=001"));
  std::string text = render_text(table);
  CHECK(text.find("formula: F g") != std::string::npos);
  CHECK(text.find("EOT") != std::string::npos);
  CHECK(text.find("(2,−)") != std::string::npos);
  CHECK(text.find("verdict: true") != std::string::npos);
}

TEST_CASE("csv output pairs each subformula with a d row and an e row") {
  explain_table table = make_explain(parse("F g"), parse_inline("g=001"));
  std::string csv = render_csv(table);
  CHECK(csv.find("subformula,row,1,2,3,EOT") == 0);
  CHECK(csv.find("F g,d,\"(2,-)\",\"(1,-)\",\"(0,-)\",\"(0,inf)\"") !=
        std::string::npos);
  CHECK(csv.find("F g,e,true,true,true,presumably-true") != std::string::npos);
}

TEST_CASE("json output round trips") {
  explain_table table =
      make_explain(parse("G(r -> F g)"), parse_inline("r=1001001;g=0010010"));
  explain_table back = parse_explain_json(render_json(table));
  CHECK(back.formula_text == table.formula_text);
  CHECK(back.length == table.length);
  CHECK(back.result == table.result);
  REQUIRE(back.rows.size() == table.rows.size());
  for (size_t r = 0; r < back.rows.size(); ++r) {
    CHECK(back.rows[r].subformula == table.rows[r].subformula);
    CHECK(back.rows[r].d == table.rows[r].d);
    CHECK(back.rows[r].e == table.rows[r].e);
  }
  auto j = nlohmann::json::parse(render_json(table));
  CHECK(j["columns"].size() == table.length + 1);
  CHECK(j["columns"].back() == "EOT");
  CHECK(j["verdict"] == "presumably-true");
}

TEST_CASE("closure rows come children first") {
  explain_table table = make_explain(parse("F g"), parse_inline("g=001"));
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[0].subformula == "g");
  CHECK(table.rows[1].subformula == "!g");
  CHECK(table.rows[2].subformula == "F g");
  CHECK(table.rows[3].subformula == "!F g");
}
