#include <catch_amalgamated.hpp>

#include "toric/resolution.hpp"

using namespace toric;

TEST_CASE("strict transform of the cusp in the center chart") {
  Binomial b{{0, 2}, {3, 0}, Rat(1)};  // U2^2 - U1^3
  IntMat M = {{1, 1}, {2, 3}};
  TransformedBinomial t = strict_transform_binomial(b, M);
  // y1^2 y2^6 (y1 - 1) up to orientation
  REQUIRE(t.e == IntVec{2, 6});
  Poly expected;
  poly_add_term(expected, {1, 0}, Rat(1));
  poly_add_term(expected, {0, 0}, Rat(-1));
  REQUIRE(t.strict == expected);
}

TEST_CASE("incompatible chart is rejected") {
  Binomial b{{0, 2}, {3, 0}, Rat(1)};
  IntMat M = {{1, 0}, {0, 1}};  // mixed signs of M(m-n)
  REQUIRE_THROWS_AS(strict_transform_binomial(b, M), Error);
}

TEST_CASE("deformed artin-schreier transform") {
  // v^2 - u(1+v) with u = y1^2 y2, v = y1 y2
  DeformedEquation eq;
  eq.bin = Binomial{{0, 2}, {1, 0}, Rat(1)};
  eq.tails = {{Rat(-1), IntVec{1, 1}}};
  IntMat M = {{2, 1}, {1, 1}};
  IntMat degrees = {{2, 1}};  // deg u = 2, deg v = 1
  TransformedDeformed t = strict_transform_deformed(eq, M, degrees);
  REQUIRE(t.e == IntVec{2, 1});
  REQUIRE(t.ok);
  Poly expected;  // y2 - 1 - y1 y2
  poly_add_term(expected, {0, 1}, Rat(1));
  poly_add_term(expected, {0, 0}, Rat(-1));
  poly_add_term(expected, {1, 1}, Rat(-1));
  REQUIRE(t.strict == expected);
}

TEST_CASE("tail that is not a deformation is rejected") {
  DeformedEquation eq;
  eq.bin = Binomial{{0, 2}, {1, 0}, Rat(1)};
  eq.tails = {{Rat(1), IntVec{0, 1}}};  // weight 1 < weight 2 of the binomial
  IntMat M = {{2, 1}, {1, 1}};
  REQUIRE_THROWS_AS(strict_transform_deformed(eq, M, IntMat{{2, 1}}), Error);
}

TEST_CASE("cusp resolution end to end") {
  BinomialIdeal I;
  I.vars = 2;
  I.binomials.push_back({{0, 2}, {3, 0}, Rat(1)});
  ResolutionReport rep = resolve(I);
  REQUIRE(rep.smooth);
  REQUIRE(rep.degrees == IntMat{{2, 3}});
  REQUIRE(rep.center_chart.has_value());
  const ChartReport& center = rep.charts[*rep.center_chart];
  REQUIRE(center.cone.rays == normalize_cone({{1, 1}, {2, 3}}).rays);
  for (const ChartReport& ch : rep.charts) {
    REQUIRE(ch.jacobian.smooth);
    REQUIRE(is_regular(ch.cone));
  }
}

TEST_CASE("resolve rejects an invalid presentation") {
  BinomialIdeal I;
  I.vars = 2;
  I.binomials.push_back({{2, 0}, {0, 2}, Rat(1)});  // unsaturated
  REQUIRE_THROWS_AS(resolve(I), Error);
}

TEST_CASE("max-dim guard") {
  BinomialIdeal I;
  I.vars = 2;
  I.binomials.push_back({{0, 2}, {3, 0}, Rat(1)});
  ResolveOptions opts;
  opts.max_dim = 1;
  REQUIRE_THROWS_AS(resolve(I, opts), Error);
}

TEST_CASE("principalization of two monomials") {
  std::vector<IntVec> monomials = {{2, 0}, {0, 3}};
  OrderSpec Q = OrderSpec::rational();
  std::vector<GroupElement> weights = {ge_rat(Rat(1)), ge_rat(Rat(1))};
  PrincipalizationReport rep = principalize_monomials(monomials, Q, weights);
  REQUIRE(rep.least_weight_ok);
  const IntVec& least = rep.transformed[rep.least];
  for (const IntVec& t : rep.transformed)
    for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(least[i] <= t[i]);
}

TEST_CASE("monomial curve resolution of the cusp") {
  CurveReport rep = resolve_monomial_curve({2, 3});
  REQUIRE(rep.ideal.binomials.size() == 1);
  REQUIRE(rep.ideal.binomials[0].m == IntVec{0, 2});
  REQUIRE(rep.ideal.binomials[0].n == IntVec{3, 0});
  REQUIRE(rep.res.has_value());
  REQUIRE(rep.res->smooth);
  REQUIRE(rep.unit_linear.size() == 1);
  REQUIRE(rep.unit_linear[0].constant_ok);
  REQUIRE(rep.unit_linear[0].vanishes);
  REQUIRE(rep.unit_linear[0].linear_ok);
}

TEST_CASE("single generator curve is already smooth") {
  CurveReport rep = resolve_monomial_curve({1});
  REQUIRE(rep.already_smooth);
}
