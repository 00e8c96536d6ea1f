#include <catch_amalgamated.hpp>

#include "toric/binomial.hpp"

using namespace toric;

namespace {

BinomialIdeal cusp_ideal() {
  BinomialIdeal I;
  I.vars = 2;
  I.binomials.push_back({{0, 2}, {3, 0}, Rat(1)});  // U2^2 - U1^3
  I.degrees = IntMat{{2, 3}};
  return I;
}

}  // namespace

TEST_CASE("verify accepts the cusp presentation") {
  PresentationCertificate c = verify_presentation(cusp_ideal());
  REQUIRE(c.homogeneous);
  REQUIRE(c.lattice_saturated);
  REQUIRE(c.lambda_compatible);
  REQUIRE(c.rank == 1);
  REQUIRE(c.d == 1);
}

TEST_CASE("verify flags an unsaturated lattice") {
  BinomialIdeal I;
  I.vars = 2;
  I.binomials.push_back({{2, 0}, {0, 2}, Rat(1)});  // difference (2,-2), index 2
  PresentationCertificate c = verify_presentation(I);
  REQUIRE_FALSE(c.lattice_saturated);
}

TEST_CASE("lambda compatibility over integer relations") {
  BinomialIdeal good;
  good.vars = 2;
  good.binomials.push_back({{2, 0}, {0, 2}, Rat(2)});
  good.binomials.push_back({{4, 0}, {0, 4}, Rat(4)});  // 2^2 = 4: compatible
  REQUIRE(verify_presentation(good).lambda_compatible);

  BinomialIdeal bad = good;
  bad.binomials[1].lambda = 5;  // 2^2 != 5
  REQUIRE_FALSE(verify_presentation(bad).lambda_compatible);
}

TEST_CASE("inhomogeneous degrees are rejected") {
  BinomialIdeal I = cusp_ideal();
  I.degrees = IntMat{{1, 1}};
  REQUIRE_FALSE(verify_presentation(I).homogeneous);
}

TEST_CASE("singular locus certifies linear witnesses") {
  BinomialIdeal I;
  I.vars = 3;
  I.binomials.push_back({{0, 0, 1}, {2, 1, 0}, Rat(1)});  // U3 - U1^2 U2
  auto flags = singular_locus(I);
  REQUIRE(flags[2].certified_smooth);
  REQUIRE_FALSE(flags[0].certified_smooth);
}

TEST_CASE("jacobian certificate in a regular chart") {
  BinomialIdeal I = cusp_ideal();
  IntMat chart = {{1, 1}, {2, 3}};  // transpose of the center cone's rays
  JacobianCertificate c = jacobian_certificate(I, chart);
  REQUIRE(c.expected == 1);
  REQUIRE(c.rank == 1);
  REQUIRE(c.gcd == 1);
  REQUIRE(c.smooth);
}

TEST_CASE("generator selection spans the lattice") {
  BinomialIdeal I;
  I.vars = 3;
  I.binomials.push_back({{1, 0, 0}, {0, 1, 0}, Rat(1)});
  I.binomials.push_back({{0, 1, 0}, {0, 0, 1}, Rat(1)});
  I.binomials.push_back({{1, 0, 0}, {0, 0, 1}, Rat(1)});  // dependent
  auto picked = select_generators(I);
  REQUIRE(picked.size() == 2);
}
