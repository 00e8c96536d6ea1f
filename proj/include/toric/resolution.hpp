#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "cones.hpp"
#include "polynomial.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Strict transforms under a chart  U_i -> prod_j Y_j^{M[j][i]}.
// ---------------------------------------------------------------------------

struct TransformedBinomial {
  IntVec e;      // exceptional exponent vector, e = M * n after orientation
  IntVec delta;  // M * (m - n) after orientation (componentwise >= 0)
  Poly strict;   // Y^delta - lambda
  bool swapped = false;
};

inline TransformedBinomial strict_transform_binomial(const Binomial& b, const IntMat& M) {
  IntVec delta = mat_vec(M, vec_sub(b.m, b.n));
  bool has_pos = false, has_neg = false;
  for (const Int& x : delta) {
    if (x > 0) has_pos = true;
    if (x < 0) has_neg = true;
  }
  require(!(has_pos && has_neg), "chart-not-compatible",
          "binomial difference changes sign over the chart cone");
  TransformedBinomial out;
  out.swapped = has_neg;
  IntVec m = b.m, n = b.n;
  Rat lambda = b.lambda;
  if (has_neg) {
    std::swap(m, n);
    require(lambda != 0, "lambda-zero", "binomial constant must be nonzero");
    lambda = 1 / lambda;
    delta = vec_scale(Int(-1), delta);
  }
  out.e = mat_vec(M, n);
  out.delta = delta;
  out.strict[delta] = 1;
  poly_add_term(out.strict, IntVec(delta.size(), 0), -lambda);
  return out;
}

// ---------------------------------------------------------------------------
// Deformed equations: binomial plus higher-weight tail terms.
// ---------------------------------------------------------------------------

struct DeformedEquation {
  Binomial bin;
  std::vector<std::pair<Rat, IntVec>> tails;  // coefficient, exponent vector
};

namespace detail {

// Order on weight vectors b*s: natural for r = 1, lexicographic beyond.
inline int weight_compare(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

struct TailReport {
  IntVec residual;  // transformed tail exponent minus the binomial residual base
  bool divisible = false;
  bool strict_excess = false;
};

struct TransformedDeformed {
  IntVec e;  // factored minimal exponent vector
  Poly strict;
  bool swapped = false;
  std::vector<TailReport> tails;
  bool ok = false;
};

inline TransformedDeformed strict_transform_deformed(const DeformedEquation& eq,
                                                     const IntMat& M, const IntMat& degrees) {
  IntVec wm = mat_vec(degrees, eq.bin.m);
  require(wm == mat_vec(degrees, eq.bin.n), "not-a-deformation",
          "binomial part is not weight-homogeneous");
  for (const auto& [c, s] : eq.tails)
    require(detail::weight_compare(mat_vec(degrees, s), wm) > 0, "not-a-deformation",
            "tail term does not have strictly larger weight");
  TransformedBinomial tb = strict_transform_binomial(eq.bin, M);
  const std::size_t N = nrows(M);
  IntVec m = tb.swapped ? eq.bin.n : eq.bin.m;
  IntVec n = tb.swapped ? eq.bin.m : eq.bin.n;
  Rat lambda = tb.swapped ? 1 / eq.bin.lambda : eq.bin.lambda;
  Rat unit = tb.swapped ? -1 / eq.bin.lambda : Rat(1);  // scale so the binomial keeps lead 1
  IntVec tm = mat_vec(M, m), tn = mat_vec(M, n);
  std::vector<std::pair<Rat, IntVec>> terms{{1, tm}, {-lambda, tn}};
  for (const auto& [c, s] : eq.tails) terms.emplace_back(unit * c, mat_vec(M, s));
  IntVec emin = terms[0].second;
  for (const auto& [c, t] : terms)
    for (std::size_t j = 0; j < N; ++j) emin[j] = std::min(emin[j], t[j]);
  TransformedDeformed out;
  out.e = emin;
  out.swapped = tb.swapped;
  for (const auto& [c, t] : terms) poly_add_term(out.strict, vec_sub(t, emin), c);
  // divisibility of each tail by the binomial residual base
  IntVec ebin = tm;
  for (std::size_t j = 0; j < N; ++j) ebin[j] = std::min(tm[j], tn[j]);
  std::vector<bool> exceptional(N);
  for (std::size_t j = 0; j < N; ++j) {
    Int ones = 0, nz = 0;
    for (const Int& x : M[j]) {
      if (x != 0) ++nz;
      if (x == 1) ++ones;
    }
    exceptional[j] = !(nz == 1 && ones == 1);  // ray is not a coordinate vector
  }
  out.ok = true;
  for (std::size_t k = 2; k < terms.size(); ++k) {
    TailReport rep;
    rep.residual = vec_sub(terms[k].second, ebin);
    rep.divisible = std::all_of(rep.residual.begin(), rep.residual.end(),
                                [](const Int& x) { return x >= 0; });
    for (std::size_t j = 0; j < N; ++j)
      if (exceptional[j] && rep.residual[j] > 0) rep.strict_excess = true;
    out.ok = out.ok && rep.divisible && rep.strict_excess;
    out.tails.push_back(std::move(rep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The resolution pipeline.
// ---------------------------------------------------------------------------

struct ResolveOptions {
  std::size_t max_dim = 16;
  Int search_bound = 4096;
  std::vector<IntVec> extra_hyperplanes;  // e.g. tail-term weight differences
};

struct ChartReport {
  Cone cone;
  IntMat chart;
  std::vector<TransformedBinomial> transforms;
  JacobianCertificate jacobian;
  bool meets_exceptional = false;  // some ray of the cone lies in W
  bool center = false;
};

struct ResolutionReport {
  PresentationCertificate presentation;
  IntMat degrees;
  WeightCone wc;
  Fan fan;
  std::vector<ChartReport> charts;
  std::optional<std::size_t> center_chart;
  bool smooth = false;
};

// Degree matrix induced by the difference lattice when none is supplied:
// a basis of the orthogonal (saturated) lattice, whose columns then
// automatically generate Z^r.
inline IntMat derive_degrees(const BinomialIdeal& I) {
  IntMat D = difference_matrix(I);
  IntMat b = lattice_hnf(kernel_lattice(D));
  require(!b.empty(), "group-not-generated", "difference lattice has full rank");
  return b;
}

inline ResolutionReport resolve(const BinomialIdeal& I, const ResolveOptions& opts = {}) {
  require(I.vars <= opts.max_dim, "dimension-exceeded",
          "ambient dimension exceeds --max-dim");
  ResolutionReport rep;
  rep.presentation = verify_presentation(I);
  require(rep.presentation.homogeneous && rep.presentation.lattice_saturated &&
              rep.presentation.lambda_compatible,
          "presentation-invalid", "binomial ideal is not a verified presentation");
  rep.degrees = I.degrees ? *I.degrees : derive_degrees(I);
  IntMat D = difference_matrix(I);
  std::vector<IntVec> normals;
  for (const IntVec& d : D) {
    IntVec p = primitive_vector(d);
    if (!is_zero_vec(p) && std::find(normals.begin(), normals.end(), p) == normals.end())
      normals.push_back(p);
  }
  std::vector<IntVec> extra;
  for (const IntVec& h : opts.extra_hyperplanes) {
    IntVec p = primitive_vector(h);
    if (!is_zero_vec(p) && std::find(normals.begin(), normals.end(), p) == normals.end() &&
        std::find(extra.begin(), extra.end(), p) == extra.end())
      extra.push_back(std::move(p));
  }
  rep.fan = build_RES_fan(rep.degrees, normals, &rep.wc, extra);
  for (const Cone& c : rep.fan.cones) {
    ChartReport cr;
    cr.cone = c;
    cr.chart = chart_of(c);
    for (const Binomial& b : I.binomials)
      cr.transforms.push_back(strict_transform_binomial(b, cr.chart));
    cr.jacobian = jacobian_certificate(I, cr.chart);
    for (const IntVec& ray : c.rays) {
      bool in_w = true;
      for (const IntVec& d : D)
        if (dot(ray, d) != 0) {
          in_w = false;
          break;
        }
      if (in_w) cr.meets_exceptional = true;
    }
    rep.charts.push_back(std::move(cr));
  }
  // valuative center: the chart containing the weight point (rank-one degrees)
  if (nrows(rep.degrees) == 1) {
    bool positive = std::all_of(rep.degrees[0].begin(), rep.degrees[0].end(),
                                [](const Int& x) { return x > 0; });
    if (positive) {
      std::vector<GroupElement> w;
      for (const Int& x : rep.degrees[0]) w.push_back(ge_rat(Rat(x)));
      std::size_t ci = locate_weight(rep.fan, OrderSpec::rational(), w);
      rep.center_chart = ci;
      rep.charts[ci].center = true;
    }
  }
  rep.smooth = std::all_of(rep.charts.begin(), rep.charts.end(),
                           [](const ChartReport& c) { return c.jacobian.smooth; });
  return rep;
}

// ---------------------------------------------------------------------------
// Principalization of monomial families.
// ---------------------------------------------------------------------------

struct PrincipalizationReport {
  Fan fan;
  std::size_t chart_index = 0;
  IntMat chart;
  std::vector<IntVec> transformed;   // exponents in the chart
  std::size_t least = 0;             // index of the monomial dividing the others
  std::vector<std::size_t> order;    // indices sorted by divisibility
  bool least_weight_ok = false;      // the divisor attains the minimal valuation
};

inline PrincipalizationReport principalize_monomials(const std::vector<IntVec>& monomials,
                                                     const OrderSpec& spec,
                                                     const std::vector<GroupElement>& weights) {
  require(!monomials.empty(), "empty-input", "no monomials to principalize");
  const std::size_t N = monomials[0].size();
  require(weights.size() == N, "shape-mismatch", "one weight per variable");
  for (const GroupElement& w : weights)
    require(ge_positive(spec, w), "not-positive", "variable weights must be positive");
  std::vector<IntVec> normals;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i + 1; j < monomials.size(); ++j) {
      IntVec h = primitive_vector(vec_sub(monomials[i], monomials[j]));
      if (!is_zero_vec(h) && std::find(normals.begin(), normals.end(), h) == normals.end())
        normals.push_back(h);
    }
  PrincipalizationReport rep;
  rep.fan = regularize(refine_with_hyperplanes(positive_orthant_fan(N), normals));
  rep.chart_index = locate_weight(rep.fan, spec, weights);
  rep.chart = chart_of(rep.fan.cones[rep.chart_index]);
  for (const IntVec& p : monomials) rep.transformed.push_back(mat_vec(rep.chart, p));
  auto divides = [](const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  rep.order.resize(monomials.size());
  for (std::size_t i = 0; i < rep.order.size(); ++i) rep.order[i] = i;
  std::stable_sort(rep.order.begin(), rep.order.end(), [&](std::size_t a, std::size_t b) {
    return divides(rep.transformed[a], rep.transformed[b]) &&
           rep.transformed[a] != rep.transformed[b];
  });
  rep.least = rep.order.front();
  for (std::size_t k : rep.order)
    require(divides(rep.transformed[rep.least], rep.transformed[k]), "internal",
            "chart does not totally order the monomials by divisibility");
  // the divisor attains the minimal valuation of the family
  auto weight_of = [&](const IntVec& p) {
    GroupElement w = ge_zero(spec);
    for (std::size_t i = 0; i < N; ++i) w = ge_add(w, ge_scale(Rat(p[i]), weights[i]));
    return w;
  };
  GroupElement least_w = weight_of(monomials[rep.least]);
  rep.least_weight_ok = true;
  for (const IntVec& p : monomials)
    if (compare(spec, least_w, weight_of(p)) > 0) rep.least_weight_ok = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Monomial curve resolution from a numerical value semigroup.
// ---------------------------------------------------------------------------

struct UnitLinearCertificate {
  bool constant_ok = false;  // strict transform has constant term -lambda
  bool vanishes = false;     // the shifted equation passes through the center
  bool linear_ok = false;    // nonzero linear part in a zero-valuation coordinate
};

struct CurveReport {
  ValueSemigroup semigroup;      // minimal generators
  BinomialIdeal ideal;           // branch equations from minimal relations
  bool already_smooth = false;   // single generator: nothing to do
  std::optional<ResolutionReport> res;
  std::vector<TransformedDeformed> deformed_center;
  std::vector<UnitLinearCertificate> unit_linear;
};

inline CurveReport resolve_monomial_curve(
    const std::vector<Int>& generators,
    const std::vector<std::vector<std::pair<Rat, IntVec>>>& tails = {},
    const ResolveOptions& opts = {}) {
  OrderSpec Q = OrderSpec::rational();
  std::vector<GroupElement> vals;
  for (const Int& g : generators) vals.push_back(ge_rat(Rat(g)));
  CurveReport rep;
  rep.semigroup = ValueSemigroup{Q, minimal_generators(Q, vals, opts.search_bound)};
  const std::size_t N = rep.semigroup.gens.size();
  rep.ideal.vars = N;
  if (N <= 1) {
    rep.already_smooth = true;
    return rep;
  }
  IntMat degs(1, IntVec(N));
  for (std::size_t i = 0; i < N; ++i) degs[0][i] = rep.semigroup.gens[i].coeffs[0].get_num();
  rep.ideal.degrees = degs;
  for (std::size_t i = 1; i < N; ++i) {
    MinimalRelation r = minimal_relation(rep.semigroup, i, opts.search_bound);
    Binomial b;
    b.m.assign(N, 0);
    b.n.assign(N, 0);
    b.m[i] = r.order;
    for (std::size_t k = 0; k < i; ++k) {
      b.m[k] = r.ncoef[k];
      b.n[k] = r.ell[k];
    }
    rep.ideal.binomials.push_back(std::move(b));
  }
  ResolveOptions curve_opts = opts;
  for (std::size_t k = 0; k < tails.size() && k < rep.ideal.binomials.size(); ++k)
    for (const auto& [c, s] : tails[k])
      curve_opts.extra_hyperplanes.push_back(vec_sub(s, rep.ideal.binomials[k].m));
  rep.res = resolve(rep.ideal, curve_opts);
  require(tails.empty() || tails.size() == rep.ideal.binomials.size(),
          "shape-mismatch", "one tail list per branch equation");
  if (rep.res->center_chart.has_value()) {
    std::vector<std::vector<std::pair<Rat, IntVec>>> tls = tails;
    tls.resize(rep.ideal.binomials.size());
    const ChartReport& center = rep.res->charts[*rep.res->center_chart];
    // zero-valuation chart coordinates: rays with zero coefficient in the
    // expansion of the weight point
    RatVec w(N);
    for (std::size_t i = 0; i < N; ++i) w[i] = degs[0][i];
    RatVec coords = coords_in_cone(center.cone, w);
    for (std::size_t k = 0; k < tls.size(); ++k) {
      DeformedEquation eq{rep.ideal.binomials[k], tls[k]};
      TransformedDeformed td = strict_transform_deformed(eq, center.chart, degs);
      UnitLinearCertificate cert;
      Rat lambda = td.swapped ? 1 / eq.bin.lambda : eq.bin.lambda;
      auto cit = td.strict.find(IntVec(N, 0));
      cert.constant_ok = cit != td.strict.end() && cit->second == -lambda;
      Poly shifted = td.strict;
      for (std::size_t j = 0; j < N; ++j)
        if (coords[j] == 0)
          shifted = poly_subst(shifted, j,
                               poly_add(poly_const(N, 1), poly_var(N, j)));
      cert.vanishes = shifted.find(IntVec(N, 0)) == shifted.end();
      for (std::size_t j = 0; j < N; ++j) {
        if (coords[j] != 0) continue;
        IntVec lin(N, 0);
        lin[j] = 1;
        auto it = shifted.find(lin);
        if (it != shifted.end() && it->second != 0) cert.linear_ok = true;
      }
      rep.deformed_center.push_back(std::move(td));
      rep.unit_linear.push_back(cert);
    }
  }
  return rep;
}

}  // namespace toric
