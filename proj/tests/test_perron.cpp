#include <catch_amalgamated.hpp>

#include "toric/perron.hpp"

using namespace toric;

namespace {

CFReal golden() {
  CFReal phi;
  phi.prefix = {1};
  phi.tail = CFReal::Tail::Periodic;
  phi.period = {1};
  return phi;
}

}  // namespace

TEST_CASE("perron reproduces continued fraction convergents") {
  CFReal cf;
  cf.prefix = {1, 2, 3, 4};
  PerronResult r = perron_run({TauEntry::rational(Rat(1)), TauEntry::irrational(cf)}, 3);
  REQUIRE(r.convergents.size() == 3);
  REQUIRE(r.convergents[0] == std::pair<Int, Int>{1, 1});
  REQUIRE(r.convergents[1] == std::pair<Int, Int>{3, 2});
  REQUIRE(r.convergents[2] == std::pair<Int, Int>{10, 7});
}

TEST_CASE("window determinant alternates and inclusions are nonnegative") {
  PerronResult r = perron_run({TauEntry::rational(Rat(1)), TauEntry::irrational(golden())}, 8);
  for (std::size_t h = 0; h < r.steps.size(); ++h) {
    // det = (-1)^{(h+1)(m-1)} with m = 2
    Int expected = (h + 1) % 2 == 0 ? 1 : -1;
    REQUIRE(r.steps[h].window_det == expected);
    for (const IntVec& row : r.steps[h].inclusion)
      for (const Int& x : row) REQUIRE(x >= 0);
  }
}

TEST_CASE("rational input terminates") {
  PerronResult r = perron_run(
      {TauEntry::rational(Rat(4)), TauEntry::rational(Rat(6)), TauEntry::rational(Rat(7))}, 50);
  REQUIRE(r.terminated);
}

TEST_CASE("irrational ranks above two are refused") {
  CFReal phi = golden();
  CFReal other;
  other.prefix = {2};
  other.tail = CFReal::Tail::Periodic;
  other.period = {2};
  REQUIRE_THROWS_AS(perron_run({TauEntry::irrational(phi), TauEntry::irrational(other),
                                TauEntry::rational(Rat(1))},
                               3),
                    Error);
}

TEST_CASE("appending a dependent generator yields a nonnegative cone") {
  AppendResult a = perron_append_dependent({TauEntry::rational(Rat(1)),
                                            TauEntry::irrational(golden())},
                                           Rat(1), Rat(1));
  REQUIRE(a.relation.size() == 3);
  // the relation annihilates (tau_1, tau_2, rho_1 tau_1 + rho_2 tau_2):
  // rel_1 + rel_2 phi + rel_3 (1 + phi) = 0 as an exact linear identity
  REQUIRE(a.relation[0] + a.relation[2] == 0);
  REQUIRE(a.relation[1] + a.relation[2] == 0);
  REQUIRE(a.rays.size() == 2);
}

TEST_CASE("presentation streams are degree homogeneous") {
  auto check = [](const PresentationStream& st) {
    for (const Binomial& b : st.binomials) {
      GroupElement dm = ge_zero(st.spec), dn = ge_zero(st.spec);
      for (std::size_t i = 0; i < b.m.size(); ++i) {
        dm = ge_add(dm, ge_scale(Rat(b.m[i]), st.degrees[i]));
        dn = ge_add(dn, ge_scale(Rat(b.n[i]), st.degrees[i]));
      }
      REQUIRE(compare(st.spec, dm, dn) == 0);
    }
    for (const GroupElement& g : st.degrees)
      REQUIRE(compare(st.spec, g, ge_zero(st.spec)) > 0);
  };
  check(stream_lex_Zd(2, 3));
  check(stream_cf_tau({2, 3, 2, 3}, 3));
  check(stream_zariski_Q({2, 3}, {Rat(1), Rat(2)}, 2));
}

TEST_CASE("zariski Q degrees are unit fractions") {
  PresentationStream st = stream_zariski_Q({2, 3}, {Rat(1), Rat(1)}, 2);
  REQUIRE(st.degrees[0].coeffs[0] == Rat(1));
  REQUIRE(st.degrees[1].coeffs[0] == Rat(1, 2));
  REQUIRE(st.degrees[2].coeffs[0] == Rat(1, 6));
}
