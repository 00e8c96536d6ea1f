// toric: command-line front end for the exact toric uniformization library.
//
// One subcommand per library capability; JSON in, JSON out (indented with
// --pretty), deterministic bytes for fixed input.  Exit status 0 on success,
// 2 on validation errors, 3 on computational errors.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toric/toric.hpp"

namespace {

using toric::Json;

// Inputs may be a file path or inline JSON (starts with '{' or '[').
Json load_input(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) toric::fail("parse-error", "cannot open input: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) toric::fail("parse-error", "input is not valid JSON");
  return j;
}

struct CommonFlags {
  std::string input;
  std::string out;
  bool pretty = false;
  std::size_t max_dim = 16;
  std::size_t cf_depth = 64;
  long search_bound = 4096;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_input = true) {
  if (with_input) cmd->add_option("input", f.input, "input file or inline JSON");
  cmd->add_option("--out", f.out, "write the report to this file instead of stdout");
  cmd->add_flag("--pretty", f.pretty, "indent the JSON report");
  cmd->add_option("--max-dim", f.max_dim, "largest ambient dimension accepted");
  cmd->add_option("--cf-depth", f.cf_depth, "continued-fraction comparison depth");
  cmd->add_option("--search-bound", f.search_bound, "semigroup search bound");
}

void emit(const CommonFlags& f, const Json& report) {
  std::string text = toric::dump_json(report, f.pretty);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.out);
    if (!out) toric::fail("parse-error", "cannot open output: " + f.out);
    out << text;
  }
}

// "1,[1;2,3,4],5/2" -> entries split at top-level commas only.
std::vector<toric::TauEntry> parse_tau(const std::string& text, std::size_t) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  std::vector<toric::TauEntry> tau;
  for (std::string& p : parts) {
    while (!p.empty() && p.front() == ' ') p.erase(p.begin());
    while (!p.empty() && p.back() == ' ') p.pop_back();
    toric::require(!p.empty(), "parse-error", "empty tau entry");
    if (p[0] == '[')
      tau.push_back(toric::TauEntry::irrational(toric::cf_from_text(p)));
    else
      tau.push_back(toric::TauEntry::rational(toric::rat_from_string(p)));
  }
  return tau;
}

std::vector<std::vector<std::pair<toric::Rat, toric::IntVec>>> parse_tails(const Json& j) {
  std::vector<std::vector<std::pair<toric::Rat, toric::IntVec>>> tails;
  for (const Json& row : j) {
    std::vector<std::pair<toric::Rat, toric::IntVec>> one;
    for (const Json& t : row)
      one.emplace_back(toric::rat_from_json(t.at("c")), toric::ivec_from_json(t.at("e")));
    tails.push_back(std::move(one));
  }
  return tails;
}

int run_resolve(const CommonFlags& f) {
  Json in = load_input(f.input);
  toric::BinomialIdeal I = toric::ideal_from_json(in);
  toric::ResolveOptions opts;
  opts.max_dim = f.max_dim;
  opts.search_bound = f.search_bound;
  toric::ResolutionReport rep = toric::resolve(I, opts);
  emit(f, toric::resolution_report_to_json(rep));
  return 0;
}

int run_transform(const CommonFlags& f) {
  Json in = load_input(f.input);
  toric::IntMat chart = toric::imat_from_json(in.at("chart"));
  toric::Binomial b = toric::binomial_from_json(in.at("binomial"));
  Json rep;
  rep["schema"] = toric::kSchemaVersion;
  if (in.contains("tails")) {
    toric::DeformedEquation eq{b, {}};
    auto tails = parse_tails(in.at("tails"));
    toric::require(tails.size() == 1, "shape-mismatch", "one tail list per equation");
    eq.tails = tails[0];
    toric::IntMat degrees = toric::imat_from_json(in.at("degrees"));
    rep["transform"] = toric::deformed_to_json(toric::strict_transform_deformed(eq, chart, degrees));
  } else {
    rep["transform"] =
        toric::transformed_binomial_to_json(toric::strict_transform_binomial(b, chart));
  }
  emit(f, rep);
  return 0;
}

int run_principalize(const CommonFlags& f) {
  Json in = load_input(f.input);
  std::vector<toric::IntVec> monomials;
  for (const Json& m : in.at("monomials")) monomials.push_back(toric::ivec_from_json(m));
  toric::OrderSpec spec = toric::OrderSpec::rational();
  spec.cf_depth = f.cf_depth;
  std::vector<toric::GroupElement> weights;
  for (const Json& w : in.at("weights")) {
    if (w.is_array())
      weights.push_back({toric::rvec_from_json(w)});
    else
      weights.push_back(toric::ge_rat(toric::rat_from_json(w)));
  }
  if (!weights.empty() && weights[0].coeffs.size() > 1)
    spec = toric::OrderSpec::lex(weights[0].coeffs.size());
  toric::PrincipalizationReport rep = toric::principalize_monomials(monomials, spec, weights);
  emit(f, toric::principalization_report_to_json(rep));
  return 0;
}

int run_curve(const CommonFlags& f) {
  Json in = load_input(f.input);
  toric::IntVec gens = toric::ivec_from_json(in.is_array() ? in : in.at("generators"));
  std::vector<std::vector<std::pair<toric::Rat, toric::IntVec>>> tails;
  if (in.is_object() && in.contains("tails")) tails = parse_tails(in.at("tails"));
  toric::ResolveOptions opts;
  opts.max_dim = f.max_dim;
  opts.search_bound = f.search_bound;
  std::vector<toric::Int> g(gens.begin(), gens.end());
  toric::CurveReport rep = toric::resolve_monomial_curve(g, tails, opts);
  emit(f, toric::curve_report_to_json(rep));
  return 0;
}

int run_perron(const CommonFlags& f, const std::string& tau_text, std::size_t steps) {
  std::vector<toric::TauEntry> tau;
  if (!tau_text.empty()) {
    tau = parse_tau(tau_text, f.cf_depth);
  } else {
    Json in = load_input(f.input);
    for (const Json& t : in.at("tau")) {
      if (t.is_object())
        tau.push_back(toric::TauEntry::irrational(toric::cf_from_json(t)));
      else
        tau.push_back(toric::TauEntry::rational(toric::rat_from_json(t)));
    }
    if (in.contains("steps")) steps = in.at("steps").get<std::size_t>();
  }
  toric::PerronResult res = toric::perron_run(tau, steps, f.cf_depth);
  emit(f, toric::perron_to_json(res));
  return 0;
}

int run_semigroup(const CommonFlags& f, const std::string& minimal_text) {
  toric::OrderSpec spec = toric::OrderSpec::rational();
  std::vector<toric::GroupElement> values;
  if (!minimal_text.empty()) {
    Json arr = Json::parse(minimal_text, nullptr, false);
    if (arr.is_discarded()) toric::fail("parse-error", "--minimal expects a JSON array");
    for (const Json& v : arr) values.push_back(toric::ge_rat(toric::rat_from_json(v)));
  } else {
    Json in = load_input(f.input);
    if (in.is_object() && in.contains("exzar")) {
      std::vector<toric::Int> s;
      for (const Json& x : in.at("exzar").at("s")) s.push_back(toric::int_from_json(x));
      std::size_t count = in.at("exzar").contains("count")
                              ? in.at("exzar").at("count").get<std::size_t>()
                              : s.size();
      toric::ValueSemigroup sg = toric::exzar_semigroup(s, count);
      std::vector<toric::MinimalRelation> rels;
      for (std::size_t i = 1; i < sg.gens.size(); ++i)
        rels.push_back(toric::minimal_relation(sg, i, toric::Int(f.search_bound)));
      emit(f, toric::semigroup_to_json(sg, rels));
      return 0;
    }
    for (const Json& v : in.is_array() ? in : in.at("values"))
      values.push_back(toric::ge_rat(toric::rat_from_json(v)));
  }
  toric::ValueSemigroup sg{spec,
                           toric::minimal_generators(spec, values, toric::Int(f.search_bound))};
  std::vector<toric::MinimalRelation> rels;
  for (std::size_t i = 1; i < sg.gens.size(); ++i)
    rels.push_back(toric::minimal_relation(sg, i, toric::Int(f.search_bound)));
  emit(f, toric::semigroup_to_json(sg, rels));
  return 0;
}

int run_valuate(const CommonFlags& f) {
  Json in = load_input(f.input);
  toric::RewriteSystem sys = toric::rewrite_from_json(in.at("system"));
  toric::Poly p = toric::poly_from_json(in.at("polynomial"));
  toric::Valuation v = toric::valuate(sys, p);
  emit(f, toric::valuation_to_json(v));
  return 0;
}

int run_verify(const CommonFlags& f) {
  Json in = load_input(f.input);
  toric::BinomialIdeal I = toric::ideal_from_json(in);
  emit(f, toric::presentation_to_json(toric::verify_presentation(I)));
  return 0;
}

// Input-shape errors exit with 2, computational failures with 3.
int status_of(const std::string& code) {
  static const std::set<std::string> validation = {
      "parse-error",       "shape-mismatch", "empty-input", "index-out-of-range",
      "dimension-exceeded", "not-positive",  "lambda-zero", "too-large"};
  return validation.count(code) ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric local uniformization toolkit"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string tau_text, minimal_text;
  std::size_t steps = 12;

  CLI::App* c_resolve = app.add_subcommand("resolve", "resolve a binomial orbit closure");
  add_common(c_resolve, f);
  CLI::App* c_transform = app.add_subcommand("transform", "strict transform in one chart");
  add_common(c_transform, f);
  CLI::App* c_princ = app.add_subcommand("principalize", "principalize a monomial family");
  add_common(c_princ, f);
  CLI::App* c_curve = app.add_subcommand("curve", "resolve a monomial curve from its semigroup");
  add_common(c_curve, f);
  CLI::App* c_perron = app.add_subcommand("perron", "run the Perron transform");
  add_common(c_perron, f);
  c_perron->add_option("--tau", tau_text, "comma-separated entries, rationals or [a0;a1,...]");
  c_perron->add_option("--steps", steps, "number of Perron steps");
  c_perron->get_option("input")->required(false);
  CLI::App* c_semi = app.add_subcommand("semigroup", "minimal generators and relations");
  add_common(c_semi, f);
  c_semi->add_option("--minimal", minimal_text, "inline JSON array of semigroup values");
  c_semi->get_option("input")->required(false);
  CLI::App* c_val = app.add_subcommand("valuate", "abyssal rewriting valuation");
  add_common(c_val, f);
  CLI::App* c_verify = app.add_subcommand("verify", "check a binomial presentation");
  add_common(c_verify, f);

  for (CLI::App* c : {c_resolve, c_transform, c_princ, c_curve, c_val, c_verify})
    c->get_option("input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_resolve)) return run_resolve(f);
    if (app.got_subcommand(c_transform)) return run_transform(f);
    if (app.got_subcommand(c_princ)) return run_principalize(f);
    if (app.got_subcommand(c_curve)) return run_curve(f);
    if (app.got_subcommand(c_perron)) return run_perron(f, tau_text, steps);
    if (app.got_subcommand(c_semi)) return run_semigroup(f, minimal_text);
    if (app.got_subcommand(c_val)) return run_valuate(f);
    if (app.got_subcommand(c_verify)) return run_verify(f);
  } catch (const Json::exception& e) {
    Json err;
    err["error"] = "parse-error";
    err["detail"] = e.what();
    std::cerr << toric::dump_json(err, true);
    return 2;
  } catch (const toric::Error& e) {
    Json err;
    err["error"] = e.code();
    err["detail"] = e.what();
    std::cerr << toric::dump_json(err, true);
    return status_of(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "internal";
    err["detail"] = e.what();
    std::cerr << toric::dump_json(err, true);
    return 3;
  }
  return 2;
}
