// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure.  Random cases use fixed seeds so every run checks the same set.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toric/toric.hpp"

using namespace toric;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << idx << ". " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, F f) {
  try {
    std::string detail;
    bool ok = f(detail);
    report(idx, name, ok, detail);
  } catch (const std::exception& e) {
    report(idx, name, false, e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1: Artin-Schreier transforms --------------------------------------------

bool artin_schreier(std::string& detail) {
  for (long p : {2L, 3L, 5L}) {
    auto t0 = std::chrono::steady_clock::now();
    DeformedEquation eq;  // v^p - u^{p-1}(1 + v) in variables (u, v)
    eq.bin = Binomial{{0, p}, {p - 1, 0}, Rat(1)};
    eq.tails = {{Rat(-1), IntVec{p - 1, 1}}};
    IntMat M = {{p, p - 1}, {1, 1}};        // u = y1^p y2, v = y1^{p-1} y2
    IntMat degrees = {{p, p - 1}};          // deg u = p, deg v = p-1
    TransformedDeformed t = strict_transform_deformed(eq, M, degrees);
    // expected y1^{p(p-1)} y2^{p-1} (y2 - 1 - y1^{p-1} y2)
    IntVec e_expected = {p * (p - 1), p - 1};
    Poly strict_expected;
    poly_add_term(strict_expected, {0, 1}, Rat(1));
    poly_add_term(strict_expected, {0, 0}, Rat(-1));
    poly_add_term(strict_expected, {p - 1, 1}, Rat(-1));
    if (t.e != e_expected || t.strict != strict_expected || !t.ok) {
      detail = "p=" + std::to_string(p) + " factorization mismatch";
      return false;
    }
    if (seconds_since(t0) > 1.0) {
      detail = "p=" + std::to_string(p) + " exceeded 1s";
      return false;
    }
  }
  return true;
}

// --- 2: branch equations ------------------------------------------------------

bool branch_equations(std::string& detail) {
  for (long p : {2L, 3L}) {
    Int P = p;
    std::vector<Int> gens = {P * P * P, P * P * P + P * P,
                             P * P * P * P + P * P * P + P * P + P,
                             P * P * P * P * P + P * P * P * P + P * P * P + P * P + P + 1};
    auto t0 = std::chrono::steady_clock::now();
    ResolveOptions opts;
    opts.max_dim = 4;
    CurveReport rep = resolve_monomial_curve(gens, {}, opts);
    std::vector<Binomial> expected = {
        {{0, P, 0, 0}, {P + 1, 0, 0, 0}, Rat(1)},
        {{0, 0, P, 0}, {P * (P + 1), 1, 0, 0}, Rat(1)},
        {{0, 0, 0, P}, {0, P * P * P, 1, 0}, Rat(1)}};
    if (rep.ideal.binomials.size() != 3) {
      detail = "p=" + std::to_string(p) + ": wrong relation count";
      return false;
    }
    for (std::size_t i = 0; i < 3; ++i)
      if (rep.ideal.binomials[i].m != expected[i].m || rep.ideal.binomials[i].n != expected[i].n) {
        detail = "p=" + std::to_string(p) + ": relation " + std::to_string(i) + " mismatch";
        return false;
      }
    if (!rep.res) {
      detail = "p=" + std::to_string(p) + ": no resolution";
      return false;
    }
    for (const ChartReport& ch : rep.res->charts)
      if (ch.jacobian.rank != 3 || ch.jacobian.gcd != 1) {
        detail = "p=" + std::to_string(p) + ": chart certificate failed";
        return false;
      }
    if (p == 2 && seconds_since(t0) > 30.0) {
      detail = "p=2 exceeded 30s";
      return false;
    }
  }
  return true;
}

// --- 3: cusp pipeline ---------------------------------------------------------

bool cusp_pipeline(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  CurveReport rep = resolve_monomial_curve({2, 3});
  if (!rep.res) {
    detail = "no resolution";
    return false;
  }
  std::set<IntVec> rays;
  for (const Cone& c : rep.res->fan.cones)
    for (const IntVec& r : c.rays) rays.insert(r);
  std::set<IntVec> expected = {{1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}};
  if (rays != expected) {
    detail = "fan rays mismatch";
    return false;
  }
  if (!rep.res->center_chart) {
    detail = "no center chart";
    return false;
  }
  const ChartReport& center = rep.res->charts[*rep.res->center_chart];
  if (center.cone.rays != normalize_cone({{1, 1}, {2, 3}}).rays) {
    detail = "center chart mismatch";
    return false;
  }
  Poly strict_expected;  // y1 - 1
  poly_add_term(strict_expected, {1, 0}, Rat(1));
  poly_add_term(strict_expected, {0, 0}, Rat(-1));
  if (center.transforms.size() != 1 || center.transforms[0].strict != strict_expected) {
    detail = "strict transform mismatch";
    return false;
  }
  if (center.jacobian.rank != 1 || center.jacobian.gcd != 1) {
    detail = "certificate mismatch";
    return false;
  }
  if (seconds_since(t0) > 1.0) {
    detail = "exceeded 1s";
    return false;
  }
  return true;
}

// --- 4: perron invariants -----------------------------------------------------

bool perron_invariants(std::string& detail) {
  std::mt19937 rng(20240817);
  for (int run = 0; run < 100; ++run) {
    CFReal cf;
    std::size_t len = 13 + rng() % 6;
    for (std::size_t i = 0; i < len; ++i) cf.prefix.push_back(Int(1 + long(rng() % 9)));
    cf.tail = CFReal::Tail::Periodic;
    cf.period = {Int(1 + long(rng() % 9))};
    PerronResult r =
        perron_run({TauEntry::rational(Rat(1)), TauEntry::irrational(cf)}, 12);
    for (std::size_t h = 0; h < r.steps.size(); ++h) {
      Int expected_det = (h + 1) % 2 == 0 ? 1 : -1;  // (-1)^{h(m-1)}, m = 2
      if (r.steps[h].window_det != expected_det) {
        detail = "window determinant at run " + std::to_string(run);
        return false;
      }
      for (const IntVec& row : r.steps[h].inclusion)
        for (const Int& x : row)
          if (x < 0) {
            detail = "inclusion not nonnegative at run " + std::to_string(run);
            return false;
          }
    }
  }
  // tau = [1;2,3,...]: A-vectors (1,1),(3,2),(10,7),(43,30)
  CFReal tau;
  tau.prefix = {1};
  tau.tail = CFReal::Tail::Arithmetic;
  tau.start = 2;
  tau.step = 1;
  PerronResult r = perron_run({TauEntry::rational(Rat(1)), TauEntry::irrational(tau)}, 4);
  std::vector<std::pair<Int, Int>> expected = {{1, 1}, {3, 2}, {10, 7}, {43, 30}};
  if (r.convergents != expected) {
    detail = "A-vectors of [1;2,3,...] mismatch";
    return false;
  }
  return true;
}

// --- 5: Sylvester-Franke ------------------------------------------------------

IntMat random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMat M = identity_mat(n);
  for (int op = 0; op < 8; ++op) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    long k = long(rng() % 5) - 2;
    for (std::size_t c = 0; c < n; ++c) M[i][c] += k * M[j][c];
  }
  if (rng() % 2) std::swap(M[0], M[rng() % (n - 1) + 1]);  // det -1 half the time
  return M;
}

// branch-equation ideal straight from the minimal relations (no resolution)
BinomialIdeal relations_ideal(const std::vector<Int>& gens) {
  OrderSpec Q = OrderSpec::rational();
  ValueSemigroup S{Q, {}};
  for (const Int& g : gens) S.gens.push_back(ge_rat(Rat(g)));
  BinomialIdeal I;
  I.vars = gens.size();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    MinimalRelation rel = minimal_relation(S, i);
    Binomial b;
    b.m.assign(I.vars, 0);
    b.n.assign(I.vars, 0);
    b.m[i] = rel.order;
    for (std::size_t k = 0; k < i; ++k) {
      b.m[k] = rel.ncoef[k];
      b.n[k] = rel.ell[k];
    }
    b.lambda = 1;
    I.binomials.push_back(std::move(b));
  }
  return I;
}

Int binom(std::size_t n, std::size_t k) {
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * Int(long(n - i)) / Int(long(i + 1));
  return r;
}

bool sylvester_franke(std::string& detail) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 4;  // 2..5
    IntMat M = random_unimodular(rng, n);
    Int dm = det_int(M);
    for (std::size_t k = 1; k <= n; ++k) {
      Int expected = pow_int(dm, to_ulong(binom(n - 1, k - 1)));
      if (det_int(compound_matrix(M, k)) != expected) {
        detail = "trial " + std::to_string(trial) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

// --- 6: exzar semigroup and valuation ----------------------------------------

bool exzar_valuation(std::string& detail) {
  std::vector<Int> s = {2, 2, 2, 2};
  ValueSemigroup sg = exzar_semigroup(s, 4);
  Rat prod = 2;
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    prod *= 2;
    if (sg.gens[i + 1].coeffs[0] != 2 * sg.gens[i].coeffs[0] + 1 / prod) {
      detail = "recurrence failed at i=" + std::to_string(i);
      return false;
    }
  }
  if (sg.gens[0].coeffs[0] != Rat(1, 2) || sg.gens[1].coeffs[0] != Rat(5, 4) ||
      sg.gens[2].coeffs[0] != Rat(21, 8)) {
    detail = "generator values mismatch";
    return false;
  }
  std::vector<Rat> c(8, Rat(1));
  std::vector<Rat> d = derive_d(s, c, 6);
  RewriteSystem sys = build_staircase_system(s, d);
  std::mt19937 rng(6180339);
  int done = 0;
  while (done < 50) {
    Poly p;  // degree <= 6 in u_2, u_3
    std::size_t terms = 1 + rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) {
      long a = long(rng() % 7), b = long(rng() % 4);
      if (a + b > 6) continue;
      long coef = long(rng() % 9) - 4;
      if (coef == 0) coef = 1;
      poly_add_term(p, IntVec{a, b, 0, 0}, Rat(coef));
    }
    if (p.empty() || poly_degree(p) > 6) continue;
    ++done;
    Rat got = valuate(sys, p).value;
    Rat expected = oracle_valuate(s, c, d, p, 6);
    if (got != expected) {
      detail = "mismatch on sample " + std::to_string(done);
      return false;
    }
  }
  return true;
}

// --- 7: principalization ------------------------------------------------------

bool principalization(std::string& detail) {
  std::mt19937 rng(7070707);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng() % 3;  // 2..4 variables
    std::size_t count = 2 + rng() % 4;
    std::set<IntVec> monoset;
    while (monoset.size() < count) {
      IntVec m(n);
      for (Int& x : m) x = long(rng() % 7);
      if (!is_zero_vec(m)) monoset.insert(m);
    }
    std::vector<IntVec> monomials(monoset.begin(), monoset.end());
    OrderSpec Q = OrderSpec::rational();
    std::vector<GroupElement> weights;
    for (std::size_t i = 0; i < n; ++i)
      weights.push_back(ge_rat(Rat(1 + long(rng() % 9), 1 + long(rng() % 9))));
    PrincipalizationReport rep = principalize_monomials(monomials, Q, weights);
    const IntVec& least = rep.transformed[rep.least];
    for (const IntVec& t : rep.transformed)
      for (std::size_t i = 0; i < t.size(); ++i)
        if (least[i] > t[i]) {
          detail = "divisibility failed at trial " + std::to_string(trial);
          return false;
        }
    if (!rep.least_weight_ok) {
      detail = "least-weight certificate failed at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// --- 8: lambda compatibility and saturation ----------------------------------

bool lambda_compatibility(std::string& detail) {
  std::vector<std::vector<Int>> families = {
      {2, 3}, {8, 12, 30, 63}, {27, 36, 120, 364}};
  for (const auto& gens : families) {
    BinomialIdeal I = relations_ideal(gens);
    PresentationCertificate cert = verify_presentation(I);
    if (!cert.homogeneous || !cert.lattice_saturated || !cert.lambda_compatible) {
      detail = "minimal-relation ideal rejected";
      return false;
    }
  }
  BinomialIdeal planted;
  planted.vars = 2;
  planted.binomials.push_back({{2, 0}, {0, 2}, Rat(2)});
  planted.binomials.push_back({{4, 0}, {0, 4}, Rat(5)});
  if (verify_presentation(planted).lambda_compatible) {
    detail = "planted incompatible family accepted";
    return false;
  }
  return true;
}

// --- 9: orbit-closure smoothness oracle ---------------------------------------

// exact jacobian of the binomials at a rational point
IntMat eval_jacobian_rows(const BinomialIdeal& I, const RatVec& x, RatMat& out) {
  out.clear();
  for (const Binomial& b : I.binomials) {
    RatVec row(I.vars, Rat(0));
    for (std::size_t j = 0; j < I.vars; ++j) {
      auto dpow = [&](const IntVec& e) {
        if (e[j] == 0) return Rat(0);
        Rat v = Rat(e[j]);
        for (std::size_t k = 0; k < I.vars; ++k) {
          Int ex = k == j ? Int(e[k] - 1) : e[k];
          if (ex == 0) continue;
          if (x[k] == 0) return Rat(0);
          v *= pow_rat(x[k], to_long(ex));
        }
        return v;
      };
      row[j] = dpow(b.m) - b.lambda * dpow(b.n);
    }
    out.push_back(std::move(row));
  }
  return {};
}

bool point_on_variety(const BinomialIdeal& I, const RatVec& x) {
  auto mono = [&](const IntVec& e) {
    Rat v(1);
    for (std::size_t k = 0; k < I.vars; ++k) {
      if (e[k] == 0) continue;
      if (x[k] == 0) return Rat(0);
      v *= pow_rat(x[k], to_long(e[k]));
    }
    return v;
  };
  for (const Binomial& b : I.binomials)
    if (mono(b.m) != b.lambda * mono(b.n)) return false;
  return true;
}

// soundness of the certificate: every certified variable must have full
// jacobian rank at every sampled variety point on its hyperplane section
bool check_lattice_soundness(const IntMat& lattice, std::string& detail) {
  BinomialIdeal I;
  I.vars = lattice[0].size();
  for (const IntVec& v : lattice) {
    Binomial b;
    b.m.assign(I.vars, 0);
    b.n.assign(I.vars, 0);
    for (std::size_t j = 0; j < I.vars; ++j)
      (v[j] > 0 ? b.m[j] : b.n[j]) = abs(v[j]);
    b.lambda = 1;
    I.binomials.push_back(std::move(b));
  }
  std::size_t rank = lattice_rank(I);
  std::vector<VariableSmoothness> flags;
  try {
    flags = singular_locus(I);
  } catch (const Error&) {
    return true;  // generators do not span: nothing is certified
  }
  for (std::size_t v = 0; v < I.vars; ++v) {
    if (!flags[v].certified_smooth) continue;
    // walk integer points with x_v ranging over [-3,3] (including 0) and the
    // other coordinates nonzero
    std::vector<long> point(I.vars, -3);
    while (true) {
      RatVec x;
      bool usable = true;
      for (std::size_t k = 0; k < I.vars; ++k) {
        if (k != v && point[k] == 0) usable = false;
        x.push_back(Rat(point[k]));
      }
      if (usable && point_on_variety(I, x)) {
        RatMat J;
        eval_jacobian_rows(I, x, J);
        if (rank_rat(J) != rank) {
          detail = "certified variable with singular sample point";
          return false;
        }
      }
      std::size_t k = 0;
      while (k < I.vars && ++point[k] > 3) point[k++] = -3;
      if (k == I.vars) break;
    }
  }
  return true;
}

bool smoothness_oracle(std::string& detail) {
  // all rank-one saturated lattices: primitive vectors with entries in [-3,3]
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<long> v(n, -3);
    while (true) {
      IntVec vec;
      for (long x : v) vec.push_back(x);
      if (!is_zero_vec(vec)) {
        IntVec prim = primitive_vector(vec);
        if (prim == vec && !check_lattice_soundness({vec}, detail)) return false;
      }
      std::size_t k = 0;
      while (k < n && ++v[k] > 3) v[k++] = -3;
      if (k == n) break;
    }
  }
  // sampled rank-two saturated lattices
  std::mt19937 rng(909090);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng() % 2;
    IntMat rows;
    for (int r = 0; r < 2; ++r) {
      IntVec v(n);
      for (Int& x : v) x = long(rng() % 7) - 3;
      rows.push_back(v);
    }
    IntMat sat = saturate_lattice(rows);
    if (sat.size() != 2) continue;
    bool small = true;
    for (const IntVec& r : sat)
      for (const Int& x : r) small = small && abs(x) <= 3;
    if (!small) continue;
    if (!check_lattice_soundness(sat, detail)) return false;
  }
  return true;
}

// --- 10: chart-change invariance ----------------------------------------------

bool chart_invariance(std::string& detail) {
  BinomialIdeal I = relations_ideal({8, 12, 30, 63});
  JacobianCertificate base = jacobian_certificate(I, identity_mat(4));
  std::mt19937 rng(101010);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat G = random_unimodular(rng, 4);
    JacobianCertificate c = jacobian_certificate(I, G);
    if (c.gcd != base.gcd || c.rank != base.rank) {
      detail = "trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "artin-schreier transforms (p = 2, 3, 5)", artin_schreier);
  criterion(2, "branch equations (p = 2, 3)", branch_equations);
  criterion(3, "cusp pipeline", cusp_pipeline);
  criterion(4, "perron invariants (100 randomized runs)", perron_invariants);
  criterion(5, "sylvester-franke (200 random matrices)", sylvester_franke);
  criterion(6, "exzar semigroup and valuation oracle (50 samples)", exzar_valuation);
  criterion(7, "principalization (50 random families)", principalization);
  criterion(8, "lambda compatibility and saturation", lambda_compatibility);
  criterion(9, "orbit-closure smoothness oracle", smoothness_oracle);
  criterion(10, "chart-change invariance (100 unimodular changes)", chart_invariance);
  return failures == 0 ? 0 : 1;
}
