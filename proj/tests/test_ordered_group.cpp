#include <catch_amalgamated.hpp>

#include "toric/ordered_group.hpp"

using namespace toric;

TEST_CASE("continued fraction convergents") {
  CFReal cf;
  cf.prefix = {1, 2, 3};
  auto conv = cf_convergents(cf, 3);
  REQUIRE(conv.size() == 3);
  REQUIRE(conv[0] == std::pair<Int, Int>{1, 1});
  REQUIRE(conv[1] == std::pair<Int, Int>{3, 2});
  REQUIRE(conv[2] == std::pair<Int, Int>{10, 7});
}

TEST_CASE("rational value of a terminated fraction") {
  CFReal cf = CFReal::from_rational(Rat(10, 7));
  REQUIRE(cf.rational_value() == Rat(10, 7));
}

TEST_CASE("weighted order compares against an irrational line") {
  CFReal phi;  // golden ratio [1;1,1,...]
  phi.prefix = {1};
  phi.tail = CFReal::Tail::Periodic;
  phi.period = {1};
  OrderSpec spec = OrderSpec::weighted({CFReal::from_rational(Rat(1)), phi});
  // 2 - phi > 0, 3 - 2 phi < 0
  REQUIRE(compare(spec, GroupElement{{Rat(2), Rat(-1)}}, ge_zero(spec)) > 0);
  REQUIRE(compare(spec, GroupElement{{Rat(3), Rat(-2)}}, ge_zero(spec)) < 0);
}

TEST_CASE("minimal generators of a numerical semigroup") {
  OrderSpec Q = OrderSpec::rational();
  std::vector<GroupElement> vals;
  for (int v : {2, 3, 4, 5}) vals.push_back(ge_rat(Rat(v)));
  auto gens = minimal_generators(Q, vals, 4096);
  REQUIRE(gens.size() == 2);
  REQUIRE(gens[0].coeffs[0] == 2);
  REQUIRE(gens[1].coeffs[0] == 3);
}

TEST_CASE("minimal relations of the branch semigroup") {
  OrderSpec Q = OrderSpec::rational();
  ValueSemigroup S{Q, {}};
  for (int v : {8, 12, 30, 63}) S.gens.push_back(ge_rat(Rat(v)));
  // 2*12 = 3*8
  MinimalRelation r1 = minimal_relation(S, 1);
  REQUIRE(r1.order == 2);
  REQUIRE(r1.ell == IntVec{3});
  REQUIRE(r1.ncoef == IntVec{0});
  // 2*30 = 6*8 + 12
  MinimalRelation r2 = minimal_relation(S, 2);
  REQUIRE(r2.order == 2);
  REQUIRE(r2.ell == IntVec{6, 1});
  // 2*63 = 8*12 + 30
  MinimalRelation r3 = minimal_relation(S, 3);
  REQUIRE(r3.order == 2);
  REQUIRE(r3.ell == IntVec{0, 8, 1});
}

TEST_CASE("exzar staircase semigroup") {
  ValueSemigroup S = exzar_semigroup({2, 2, 2, 2}, 4);
  REQUIRE(S.gens[0].coeffs[0] == Rat(1, 2));
  REQUIRE(S.gens[1].coeffs[0] == Rat(5, 4));
  REQUIRE(S.gens[2].coeffs[0] == Rat(21, 8));
  REQUIRE(S.gens[3].coeffs[0] == Rat(85, 16));
  // recurrence gamma_{i+1} = s_i gamma_i + 1/(s_1...s_{i+1})
  Rat prod = 2;
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    prod *= 2;
    REQUIRE(S.gens[i + 1].coeffs[0] == 2 * S.gens[i].coeffs[0] + 1 / prod);
  }
}

TEST_CASE("lex order on Z^d") {
  OrderSpec L = OrderSpec::lex(2);
  REQUIRE(compare(L, GroupElement{{Rat(1), Rat(-5)}}, ge_zero(L)) > 0);
  REQUIRE(compare(L, GroupElement{{Rat(0), Rat(-1)}}, ge_zero(L)) < 0);
}
