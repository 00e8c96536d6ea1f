#include <catch_amalgamated.hpp>

#include "toric/json_io.hpp"

using namespace toric;

TEST_CASE("integer and rational round trips") {
  Int big = int_from_string("123456789012345678901234567890");
  REQUIRE(int_from_json(int_to_json(big)) == big);
  Rat q = rat_from_string("-355/113");
  REQUIRE(rat_from_json(rat_to_json(q)) == q);
}

TEST_CASE("continued fraction round trip") {
  CFReal cf;
  cf.prefix = {1, 2};
  cf.tail = CFReal::Tail::Arithmetic;
  cf.start = 3;
  cf.step = 2;
  CFReal back = cf_from_json(cf_to_json(cf));
  REQUIRE(back.prefix == cf.prefix);
  REQUIRE(back.tail == cf.tail);
  REQUIRE(back.start == 3);
  REQUIRE(back.step == 2);
}

TEST_CASE("continued fraction text forms") {
  CFReal a = cf_from_text("[1;2,3]");
  REQUIRE(a.prefix == IntVec{1, 2, 3});
  REQUIRE(a.tail == CFReal::Tail::Terminated);
  CFReal b = cf_from_text("[1;(1)]");
  REQUIRE(b.prefix == IntVec{1});
  REQUIRE(b.tail == CFReal::Tail::Periodic);
  REQUIRE(b.period == IntVec{1});
  CFReal c = cf_from_text("[1;2,...]");
  REQUIRE(c.tail == CFReal::Tail::Arithmetic);
  REQUIRE(c.start == 3);
  REQUIRE(c.step == 1);
}

TEST_CASE("binomial ideal round trip") {
  BinomialIdeal I;
  I.vars = 2;
  I.binomials.push_back({{0, 2}, {3, 0}, Rat(1)});
  I.degrees = IntMat{{2, 3}};
  BinomialIdeal back = ideal_from_json(ideal_to_json(I));
  REQUIRE(back.vars == I.vars);
  REQUIRE(back.binomials[0].m == I.binomials[0].m);
  REQUIRE(back.binomials[0].n == I.binomials[0].n);
  REQUIRE(back.degrees == I.degrees);
}

TEST_CASE("fan round trip keeps canonical ordering") {
  Fan f;
  f.ambient = 2;
  f.cones.push_back(normalize_cone({{2, 3}, {1, 1}}));
  f.cones.push_back(normalize_cone({{1, 0}, {1, 1}}));
  sort_fan(f);
  Fan back = fan_from_json(fan_to_json(f));
  REQUIRE(fan_to_json(back) == fan_to_json(f));
}

TEST_CASE("polynomial round trip") {
  Poly p;
  poly_add_term(p, {1, 0}, Rat(1, 2));
  poly_add_term(p, {0, 3}, Rat(-7));
  REQUIRE(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("rewrite system from the schema") {
  Json j = Json::parse(R"({"s":[2,2,2],"d":["1","1"],"weights-auto":"exzar"})");
  RewriteSystem sys = rewrite_from_json(j);
  REQUIRE(sys.nvars() == 3);
  REQUIRE(sys.rules.size() == 2);
  Json back = rewrite_to_json(sys);
  REQUIRE(back.at("s") == j.at("s"));
  REQUIRE(back.at("d") == j.at("d"));
}

TEST_CASE("malformed json is a parse error") {
  REQUIRE_THROWS_AS(ivec_from_json(Json::parse(R"({"a":1})")), Error);
}
