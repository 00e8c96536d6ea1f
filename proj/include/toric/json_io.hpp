#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "binomial.hpp"
#include "cones.hpp"
#include "ordered_group.hpp"
#include "perron.hpp"
#include "polynomial.hpp"
#include "resolution.hpp"
#include "rewrite.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "toric/1";

// ---------------------------------------------------------------------------
// Scalars and vectors.  Integers and rationals travel as decimal strings so
// that arbitrary precision survives the round trip.
// ---------------------------------------------------------------------------

inline Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(to_string(x));
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  require(j.is_string(), "parse-error", "expected integer or string");
  return int_from_string(j.get<std::string>());
}

inline Json rat_to_json(const Rat& x) { return Json(to_string(x)); }

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
  require(j.is_string(), "parse-error", "expected rational string");
  return rat_from_string(j.get<std::string>());
}

inline Json ivec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

inline IntVec ivec_from_json(const Json& j) {
  require(j.is_array(), "parse-error", "expected array of integers");
  IntVec v;
  for (const Json& x : j) v.push_back(int_from_json(x));
  return v;
}

inline Json rvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

inline RatVec rvec_from_json(const Json& j) {
  require(j.is_array(), "parse-error", "expected array of rationals");
  RatVec v;
  for (const Json& x : j) v.push_back(rat_from_json(x));
  return v;
}

inline Json imat_to_json(const IntMat& m) {
  Json a = Json::array();
  for (const IntVec& r : m) a.push_back(ivec_to_json(r));
  return a;
}

inline IntMat imat_from_json(const Json& j) {
  require(j.is_array(), "parse-error", "expected matrix");
  IntMat m;
  for (const Json& r : j) m.push_back(ivec_from_json(r));
  return m;
}

// ---------------------------------------------------------------------------
// Continued fractions and ordered-group elements.
// ---------------------------------------------------------------------------

inline Json cf_to_json(const CFReal& cf) {
  Json j;
  j["prefix"] = ivec_to_json(cf.prefix);
  Json tail;
  switch (cf.tail) {
    case CFReal::Tail::Terminated:
      tail["kind"] = "terminated";
      break;
    case CFReal::Tail::Periodic:
      tail["kind"] = "periodic";
      tail["period"] = ivec_to_json(cf.period);
      break;
    case CFReal::Tail::Arithmetic:
      tail["kind"] = "arithmetic";
      tail["start"] = int_to_json(cf.start);
      tail["step"] = int_to_json(cf.step);
      break;
  }
  j["tail"] = tail;
  return j;
}

inline CFReal cf_from_json(const Json& j) {
  CFReal cf;
  cf.prefix = ivec_from_json(j.at("prefix"));
  std::string kind = j.at("tail").at("kind").get<std::string>();
  if (kind == "terminated") {
    cf.tail = CFReal::Tail::Terminated;
  } else if (kind == "periodic") {
    cf.tail = CFReal::Tail::Periodic;
    cf.period = ivec_from_json(j.at("tail").at("period"));
    require(!cf.period.empty(), "parse-error", "empty period");
  } else if (kind == "arithmetic") {
    cf.tail = CFReal::Tail::Arithmetic;
    cf.start = int_from_json(j.at("tail").at("start"));
    cf.step = int_from_json(j.at("tail").at("step"));
  } else {
    fail("parse-error", "unknown continued fraction tail: " + kind);
  }
  return cf;
}

// Parses "[1;2,3]" / "[1;2,3,(4,5)]" (periodic) / "[1;2,3,...]" (arithmetic).
inline CFReal cf_from_text(const std::string& text) {
  require(text.size() >= 2 && text.front() == '[' && text.back() == ']', "parse-error",
          "continued fraction must look like [a0;a1,a2]");
  std::string body = text.substr(1, text.size() - 2);
  CFReal cf;
  std::string tok;
  bool in_period = false;
  std::vector<std::string> toks;
  for (char ch : body) {
    if (ch == ';' || ch == ',') {
      toks.push_back(tok);
      tok.clear();
    } else {
      tok += ch;
    }
  }
  toks.push_back(tok);
  for (std::string t : toks) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    if (t == "...") {
      require(!cf.prefix.empty(), "parse-error", "arithmetic tail needs a prefix");
      cf.tail = CFReal::Tail::Arithmetic;
      cf.start = cf.prefix.back() + 1;
      cf.step = 1;
      cf.prefix.pop_back();
      return cf;
    }
    bool open = !t.empty() && t.front() == '(';
    bool close = !t.empty() && t.back() == ')';
    if (open) {
      in_period = true;
      t.erase(t.begin());
    }
    if (close) t.pop_back();
    require(!t.empty(), "parse-error", "empty partial quotient");
    Int q = int_from_string(t);
    if (in_period)
      cf.period.push_back(q);
    else
      cf.prefix.push_back(q);
    if (close) {
      cf.tail = CFReal::Tail::Periodic;
      return cf;
    }
  }
  require(!in_period, "parse-error", "unterminated period");
  cf.tail = CFReal::Tail::Terminated;
  return cf;
}

inline Json order_to_json(const OrderSpec& spec) {
  Json j;
  switch (spec.kind) {
    case OrderKind::LexZ:
      j["kind"] = "lex";
      j["rank"] = spec.rank;
      break;
    case OrderKind::RationalLine:
      j["kind"] = "rational";
      break;
    case OrderKind::WeightedLine: {
      j["kind"] = "weighted";
      Json ws = Json::array();
      for (const CFReal& w : spec.weights) ws.push_back(cf_to_json(w));
      j["weights"] = ws;
      break;
    }
  }
  return j;
}

inline Json group_element_to_json(const GroupElement& g, const OrderSpec& spec) {
  Json j;
  j["coeffs"] = rvec_to_json(g.coeffs);
  switch (spec.kind) {
    case OrderKind::LexZ: j["order"] = "lex"; break;
    case OrderKind::RationalLine: j["order"] = "rational"; break;
    case OrderKind::WeightedLine: j["order"] = "weighted"; break;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Fans, binomial ideals, polynomials, rewrite systems.
// ---------------------------------------------------------------------------

inline Json fan_to_json(const Fan& f) {
  Json j;
  j["ambient"] = f.ambient;
  Json cones = Json::array();
  for (const Cone& c : f.cones) {
    Json cj;
    cj["rays"] = imat_to_json(c.rays);
    cones.push_back(cj);
  }
  j["cones"] = cones;
  return j;
}

inline Fan fan_from_json(const Json& j) {
  Fan f;
  f.ambient = j.at("ambient").get<std::size_t>();
  for (const Json& cj : j.at("cones"))
    f.cones.push_back(normalize_cone(imat_from_json(cj.at("rays"))));
  return f;
}

inline Json binomial_to_json(const Binomial& b) {
  Json j;
  j["m"] = ivec_to_json(b.m);
  j["n"] = ivec_to_json(b.n);
  j["lambda"] = rat_to_json(b.lambda);
  return j;
}

inline Binomial binomial_from_json(const Json& j) {
  Binomial b;
  b.m = ivec_from_json(j.at("m"));
  b.n = ivec_from_json(j.at("n"));
  if (j.contains("lambda")) b.lambda = rat_from_json(j.at("lambda"));
  require(b.m.size() == b.n.size(), "shape-mismatch", "binomial sides differ in arity");
  return b;
}

inline Json ideal_to_json(const BinomialIdeal& I) {
  Json j;
  j["vars"] = I.vars;
  Json bs = Json::array();
  for (const Binomial& b : I.binomials) bs.push_back(binomial_to_json(b));
  j["binomials"] = bs;
  if (I.degrees) {
    // one degree vector per variable (columns of the internal matrix)
    Json ds = Json::array();
    IntMat cols = transpose(*I.degrees);
    for (const IntVec& c : cols) ds.push_back(ivec_to_json(c));
    j["degrees"] = ds;
  }
  return j;
}

inline BinomialIdeal ideal_from_json(const Json& j) {
  BinomialIdeal I;
  I.vars = j.at("vars").get<std::size_t>();
  for (const Json& bj : j.at("binomials")) {
    Binomial b = binomial_from_json(bj);
    require(b.m.size() == I.vars, "shape-mismatch", "binomial arity != vars");
    I.binomials.push_back(std::move(b));
  }
  if (j.contains("degrees")) {
    IntMat cols = imat_from_json(j.at("degrees"));
    require(cols.size() == I.vars, "shape-mismatch", "one degree vector per variable");
    I.degrees = transpose(cols);
  }
  return I;
}

inline Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p) {
    Json t;
    t["e"] = ivec_to_json(e);
    t["c"] = rat_to_json(c);
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

inline Poly poly_from_json(const Json& j) {
  Poly p;
  for (const Json& t : j.at("terms"))
    poly_add_term(p, ivec_from_json(t.at("e")), rat_from_json(t.at("c")));
  return p;
}

// {"s":[2,2,2],"d":["1","1"],"weights-auto":"exzar"}
inline RewriteSystem rewrite_from_json(const Json& j) {
  std::vector<Int> s;
  for (const Json& x : j.at("s")) s.push_back(int_from_json(x));
  std::vector<Rat> d;
  for (const Json& x : j.at("d")) d.push_back(rat_from_json(x));
  if (j.contains("weights-auto"))
    require(j.at("weights-auto").get<std::string>() == "exzar", "parse-error",
            "only exzar weights are supported");
  return build_staircase_system(s, d);
}

inline Json rewrite_to_json(const RewriteSystem& sys) {
  Json j;
  j["s"] = ivec_to_json(sys.s);
  Json d = Json::array();
  for (const RewriteRule& r : sys.rules) d.push_back(rat_to_json(r.d));
  j["d"] = d;
  j["weights-auto"] = "exzar";
  Json w = Json::array();
  for (const Rat& x : sys.weights) w.push_back(rat_to_json(x));
  j["weights"] = w;
  return j;
}

// Monomial in y-variables rendered as a compact string, e.g. "y1^3 y2".
inline std::string monomial_text(const IntVec& e, const std::string& stem = "y") {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += stem + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

inline Json transformed_binomial_to_json(const TransformedBinomial& t) {
  Json j;
  j["exceptional"] = ivec_to_json(t.e);
  j["delta"] = ivec_to_json(t.delta);
  j["strict"] = poly_to_json(t.strict);
  j["swapped"] = t.swapped;
  return j;
}

inline Json jacobian_to_json(const JacobianCertificate& c) {
  Json j;
  j["rank"] = c.rank;
  j["expected"] = c.expected;
  j["gcd"] = int_to_json(c.gcd);
  j["smooth"] = c.smooth;
  return j;
}

inline Json chart_report_to_json(const ChartReport& ch) {
  Json j;
  j["rays"] = imat_to_json(ch.cone.rays);
  j["chart"] = imat_to_json(ch.chart);
  Json ts = Json::array();
  for (const TransformedBinomial& t : ch.transforms) ts.push_back(transformed_binomial_to_json(t));
  j["transforms"] = ts;
  j["jacobian"] = jacobian_to_json(ch.jacobian);
  j["meets_exceptional"] = ch.meets_exceptional;
  j["center"] = ch.center;
  return j;
}

inline Json presentation_cert_to_json(const PresentationCertificate& c) {
  Json j;
  j["homogeneous"] = c.homogeneous;
  j["saturated"] = c.lattice_saturated;
  j["lambda_compatible"] = c.lambda_compatible;
  j["rank"] = c.rank;
  j["d"] = c.d;
  return j;
}

inline Json resolution_report_to_json(const ResolutionReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["presentation"] = presentation_cert_to_json(r.presentation);
  j["degrees"] = imat_to_json(r.degrees);
  j["fan"] = fan_to_json(r.fan);
  Json cs = Json::array();
  for (const ChartReport& ch : r.charts) cs.push_back(chart_report_to_json(ch));
  j["charts"] = cs;
  if (r.center_chart) j["center_chart"] = *r.center_chart;
  j["smooth"] = r.smooth;
  return j;
}

inline Json principalization_report_to_json(const PrincipalizationReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["fan"] = fan_to_json(r.fan);
  j["chart_index"] = r.chart_index;
  j["chart"] = imat_to_json(r.chart);
  j["transformed"] = imat_to_json(r.transformed);
  j["least"] = r.least;
  Json ord = Json::array();
  for (std::size_t i : r.order) ord.push_back(i);
  j["order"] = ord;
  j["least_weight_ok"] = r.least_weight_ok;
  return j;
}

inline Json deformed_to_json(const TransformedDeformed& t) {
  Json j;
  j["exceptional"] = ivec_to_json(t.e);
  j["strict"] = poly_to_json(t.strict);
  j["swapped"] = t.swapped;
  Json tails = Json::array();
  for (const TailReport& tr : t.tails) {
    Json tj;
    tj["residual"] = ivec_to_json(tr.residual);
    tj["divisible"] = tr.divisible;
    tj["strict_excess"] = tr.strict_excess;
    tails.push_back(tj);
  }
  j["tails"] = tails;
  j["ok"] = t.ok;
  return j;
}

inline Json curve_report_to_json(const CurveReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json gens = Json::array();
  for (const GroupElement& g : r.semigroup.gens) gens.push_back(rat_to_json(g.coeffs[0]));
  j["generators"] = gens;
  Json bs = Json::array();
  for (const Binomial& b : r.ideal.binomials) bs.push_back(binomial_to_json(b));
  j["binomials"] = bs;
  j["already_smooth"] = r.already_smooth;
  if (r.res) j["resolution"] = resolution_report_to_json(*r.res);
  Json dc = Json::array();
  for (const TransformedDeformed& t : r.deformed_center) dc.push_back(deformed_to_json(t));
  j["deformed_center"] = dc;
  Json certs = Json::array();
  for (const UnitLinearCertificate& c : r.unit_linear) {
    Json cj;
    cj["constant_ok"] = c.constant_ok;
    cj["vanishes"] = c.vanishes;
    cj["linear_ok"] = c.linear_ok;
    cj["ok"] = c.constant_ok && c.vanishes && c.linear_ok;
    certs.push_back(cj);
  }
  j["unit_linear"] = certs;
  j["smooth"] = r.res ? r.res->smooth : r.already_smooth;
  return j;
}

inline Json perron_to_json(const PerronResult& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["m"] = r.m;
  Json av = Json::array();
  for (const IntVec& a : r.avectors) av.push_back(ivec_to_json(a));
  j["avectors"] = av;
  Json steps = Json::array();
  for (const PerronStep& st : r.steps) {
    Json sj;
    sj["quotients"] = ivec_to_json(st.quotients);
    sj["window"] = imat_to_json(st.window);
    sj["window_det"] = int_to_json(st.window_det);
    sj["inclusion"] = imat_to_json(st.inclusion);
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["terminated"] = r.terminated;
  if (r.terminated) j["termination_step"] = r.termination_step;
  if (!r.convergents.empty()) {
    Json cv = Json::array();
    for (const auto& [p, q] : r.convergents) cv.push_back(Json::array({int_to_json(p), int_to_json(q)}));
    j["convergents"] = cv;
  }
  return j;
}

inline Json semigroup_to_json(const ValueSemigroup& sg,
                              const std::vector<MinimalRelation>& rels) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json gens = Json::array();
  for (const GroupElement& g : sg.gens) gens.push_back(group_element_to_json(g, sg.spec));
  j["generators"] = gens;
  Json rj = Json::array();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    Json one;
    one["index"] = i + 1;  // relation of gamma_{i+1}
    one["order"] = int_to_json(rels[i].order);
    one["ncoef"] = ivec_to_json(rels[i].ncoef);
    one["ell"] = ivec_to_json(rels[i].ell);
    rj.push_back(one);
  }
  j["relations"] = rj;
  return j;
}

inline Json valuation_to_json(const Valuation& v) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["value"] = rat_to_json(v.value);
  j["monomial"] = ivec_to_json(v.monomial);
  j["normal_form"] = poly_to_json(v.nf);
  return j;
}

inline Json presentation_to_json(const PresentationCertificate& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["homogeneous"] = c.homogeneous;
  j["saturated"] = c.lattice_saturated;
  j["lambda_compatible"] = c.lambda_compatible;
  j["rank"] = c.rank;
  j["d"] = c.d;
  j["valid"] = c.homogeneous && c.lattice_saturated && c.lambda_compatible;
  return j;
}

// Canonical byte form: 2-space indent when pretty, compact otherwise, always
// newline-terminated.
inline std::string dump_json(const Json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace toric
