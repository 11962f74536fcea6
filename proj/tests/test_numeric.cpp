#include <doctest.h>

#include "ltlcount/numeric.hpp"

using namespace ltlcount;

TEST_CASE("extended naturals order finite below inf below impossible") {
  CHECK(ext_nat::fin(0) < ext_nat::fin(7));
  CHECK(ext_nat::fin(1000000) < ext_nat::inf());
  CHECK(ext_nat::inf() < ext_nat::impossible());
}

TEST_CASE("addition adds finite values and keeps the larger symbol") {
  CHECK(ext_nat::fin(2) + ext_nat::fin(3) == ext_nat::fin(5));
  CHECK(ext_nat::fin(2) + ext_nat::inf() == ext_nat::inf());
  CHECK(ext_nat::inf() + ext_nat::impossible() == ext_nat::impossible());
  CHECK(ext_nat::inf() + ext_nat::inf() == ext_nat::inf());
}

TEST_CASE("ext_nat text round trip in both styles") {
  CHECK(ext_nat::fin(42).to_string() == "42");
  CHECK(ext_nat::inf().to_string() == "inf");
  CHECK(ext_nat::inf().to_string(true) == "∞");
  CHECK(ext_nat::impossible().to_string() == "-");
  CHECK(ext_nat::parse("17") == ext_nat::fin(17));
  CHECK(ext_nat::parse("∞") == ext_nat::inf());
  CHECK(ext_nat::parse("inf") == ext_nat::inf());
  CHECK(ext_nat::parse("−") == ext_nat::impossible());
  CHECK(!ext_nat::parse("x7"));
  CHECK(!ext_nat::parse(""));
}

TEST_CASE("pair operations") {
  count_pair p{ext_nat::fin(2), ext_nat::impossible()};
  count_pair q{ext_nat::fin(1), ext_nat::inf()};
  CHECK(swap(p) == count_pair{ext_nat::impossible(), ext_nat::fin(2)});
  CHECK(inc(q) == count_pair{ext_nat::fin(2), ext_nat::inf()});
  CHECK(join(p, q) == count_pair{ext_nat::fin(1), ext_nat::impossible()});
  CHECK(meet(p, q) == count_pair{ext_nat::fin(2), ext_nat::inf()});
  CHECK(pair_leq(q, join(p, q)));
  CHECK(count_pair::parse("(2,-)") == p);
  CHECK(count_pair::parse("(1,∞)") == q);
  CHECK(p.to_string(true) == "(2,−)");
}

TEST_CASE("three valued connectives") {
  CHECK(neg3(verdict3::top) == verdict3::bot);
  CHECK(neg3(verdict3::unknown) == verdict3::unknown);
  CHECK(or3(verdict3::bot, verdict3::unknown) == verdict3::unknown);
  CHECK(and3(verdict3::top, verdict3::unknown) == verdict3::unknown);
}

TEST_CASE("five valued connectives and names") {
  CHECK(neg5(verdict5::presumably_true) == verdict5::presumably_false);
  CHECK(or5(verdict5::presumably_false, verdict5::unknown) ==
        verdict5::unknown);
  CHECK(and5(verdict5::true_, verdict5::presumably_true) ==
        verdict5::presumably_true);
  CHECK(to_string(verdict5::presumably_false) == "presumably-false");
  CHECK(to_symbol(verdict5::presumably_true) == "⊤_P");
  CHECK(to_symbol(verdict5::unknown) == "?");
}
