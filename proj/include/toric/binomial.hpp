#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "cones.hpp"
#include "linalg.hpp"

namespace toric {

// U^m - lambda U^n with m, n nonnegative exponent vectors.
struct Binomial {
  IntVec m, n;
  Rat lambda = 1;
};

struct BinomialIdeal {
  std::size_t vars = 0;
  std::vector<Binomial> binomials;
  std::optional<IntMat> degrees;  // r x vars, column i = degree of U_i
};

inline IntMat difference_matrix(const BinomialIdeal& I) {
  IntMat D;
  for (const Binomial& b : I.binomials) D.push_back(vec_sub(b.m, b.n));
  return D;
}

// Codimension of the torus orbit: rank of the difference lattice.
inline std::size_t lattice_rank(const BinomialIdeal& I) {
  return rank_int(difference_matrix(I));
}

struct PresentationCertificate {
  bool homogeneous = true;
  bool lattice_saturated = false;
  bool lambda_compatible = true;
  std::size_t rank = 0;  // rank of the difference lattice
  std::size_t d = 0;     // dimension N - rank
};

// Checks that the binomials present the coordinate ring of an orbit closure:
// degree-homogeneous, difference lattice saturated, and the lambda constants
// compatible with every integer relation among the binomial differences.
inline PresentationCertificate verify_presentation(const BinomialIdeal& I) {
  PresentationCertificate cert;
  IntMat D = difference_matrix(I);
  cert.rank = rank_int(D);
  cert.d = I.vars - cert.rank;
  if (I.degrees) {
    for (const Binomial& b : I.binomials)
      if (mat_vec(*I.degrees, b.m) != mat_vec(*I.degrees, b.n)) cert.homogeneous = false;
  }
  cert.lattice_saturated = is_saturated(D);
  // integer relations sum_l c_l (m^l - n^l) = 0  force  prod lambda_l^{c_l} = 1
  for (const IntVec& rel : kernel_lattice(transpose(D))) {
    Rat prod(1);
    for (std::size_t l = 0; l < rel.size(); ++l) {
      if (rel[l] == 0) continue;
      require(I.binomials[l].lambda != 0, "lambda-zero", "binomial constant must be nonzero");
      prod *= pow_rat(I.binomials[l].lambda, to_long(rel[l]));
    }
    if (prod != 1) cert.lambda_compatible = false;
  }
  return cert;
}

// Greedy subset of binomials rationally generating the difference lattice:
// sorted by total degree, keeping those that grow the rank.
inline std::vector<std::size_t> select_generators(const BinomialIdeal& I) {
  std::vector<std::size_t> order(I.binomials.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto total = [&](std::size_t i) {
    Int s = 0;
    for (const Int& x : I.binomials[i].m) s += x;
    for (const Int& x : I.binomials[i].n) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return total(a) < total(b); });
  std::vector<std::size_t> picked;
  IntMat rows;
  std::size_t r = 0;
  for (std::size_t i : order) {
    rows.push_back(vec_sub(I.binomials[i].m, I.binomials[i].n));
    std::size_t nr = rank_int(rows);
    if (nr > r) {
      picked.push_back(i);
      r = nr;
    } else {
      rows.pop_back();
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

struct VariableSmoothness {
  bool certified_smooth = false;
  std::optional<std::size_t> witness;  // index of the linear equation used
};

// Conservative smoothness certificate along each coordinate hyperplane
// section: U_i is certified when some selected generator is linear in U_i
// (exponent exactly one, on a single side) and every other selected
// generator avoids U_i entirely.
inline std::vector<VariableSmoothness> singular_locus(const BinomialIdeal& I) {
  std::vector<std::size_t> gens = select_generators(I);
  require(gens.size() == lattice_rank(I), "rank-deficient",
          "binomials do not rationally generate the difference lattice");
  std::vector<VariableSmoothness> out(I.vars);
  for (std::size_t v = 0; v < I.vars; ++v) {
    std::optional<std::size_t> linear;
    bool ok = true;
    for (std::size_t g : gens) {
      const Binomial& b = I.binomials[g];
      Int em = b.m[v], en = b.n[v];
      if (em == 0 && en == 0) continue;
      bool is_linear = (em == 1 && en == 0) || (em == 0 && en == 1);
      if (is_linear && !linear) {
        linear = g;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && linear) {
      out[v].certified_smooth = true;
      out[v].witness = linear;
    }
  }
  return out;
}

struct JacobianCertificate {
  std::size_t rank = 0;
  Int gcd = 0;
  std::size_t expected = 0;  // N - d
  bool smooth = false;
  IntMat matrix;
};

// The chart jacobian matrix ( <a^j, m^s - n^s> ), j over chart rows, s over
// binomials.  Smoothness of the chart needs rank N-d and unit minor gcd.
inline JacobianCertificate jacobian_certificate(const BinomialIdeal& I, const IntMat& chart) {
  JacobianCertificate cert;
  IntMat D = difference_matrix(I);
  cert.expected = rank_int(D);
  cert.matrix = mat_mul(chart, transpose(D));
  cert.rank = rank_int(cert.matrix);
  cert.gcd = minors_gcd(cert.matrix, cert.expected);
  cert.smooth = cert.rank == cert.expected && cert.gcd == 1;
  return cert;
}

}  // namespace toric
