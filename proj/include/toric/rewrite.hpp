#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordered_group.hpp"
#include "polynomial.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Abyssal rewriting: the truncated valuation of the limit-key construction.
// Variables u_2, ..., u_{p+1} (indices 0..p-1) carry the staircase weights
// gamma_1, ..., gamma_p; each u_j with j >= 3 rewrites by
//   u_j^{s_{j-1}}  ->  d_j * u^{l(j)}  +  u_{j+1}
// with the successor u_{p+2} truncated away at the system boundary.
// ---------------------------------------------------------------------------

struct RewriteRule {
  std::size_t var = 0;              // variable index being rewritten
  Int power = 0;                    // s_{j-1}
  Rat d = 1;                        // coefficient of the monomial branch
  IntVec ell;                       // exponent vector of u^{l(j)}
  std::optional<std::size_t> succ;  // successor variable, absent when truncated
};

struct RewriteSystem {
  std::vector<Int> s;        // s_1 .. s_p
  std::vector<Rat> weights;  // weight of each variable (rank-one values)
  std::vector<RewriteRule> rules;

  std::size_t nvars() const { return weights.size(); }
};

// Canonical representation of the rule value s_{j-1} gamma_{j-1} over the
// earlier weights: exponents of u_k bounded by s_{k} for k >= 2 (variable
// index >= 1), the exponent of u_2 unconstrained.
namespace detail {

inline IntVec staircase_monomial(const std::vector<Int>& s, const std::vector<Rat>& w,
                                 std::size_t t, const Rat& value) {
  IntVec ell(w.size(), 0);
  std::optional<IntVec> found;
  // enumerate the bounded coordinates u_3..u_{j-1} (indices 1..t-1)
  std::vector<Int> caps;
  for (std::size_t k = 1; k < t; ++k) caps.push_back(s[k]);
  IntVec e(caps.size(), 0);
  while (true) {
    Rat rest = value;
    for (std::size_t k = 0; k < e.size(); ++k) rest -= e[k] * w[k + 1];
    if (rest >= 0) {
      Rat q = rest / w[0];
      if (q.get_den() == 1) {
        IntVec cand(w.size(), 0);
        cand[0] = q.get_num();
        for (std::size_t k = 0; k < e.size(); ++k) cand[k + 1] = e[k];
        require(!found, "internal", "staircase representation not unique");
        found = cand;
      }
    }
    std::size_t k = 0;
    while (k < e.size()) {
      e[k] += 1;
      if (e[k] < caps[k]) break;
      e[k] = 0;
      ++k;
    }
    if (k == e.size()) break;
    if (e.empty()) break;
  }
  require(found.has_value(), "relation-not-found", "no staircase representation");
  return *found;
}

}  // namespace detail

// System with the staircase weights of exzar_semigroup(s) and the supplied
// rewrite coefficients d_3, d_4, ... (one per rule).
inline RewriteSystem build_staircase_system(const std::vector<Int>& s,
                                            const std::vector<Rat>& d) {
  const std::size_t p = s.size();
  require(p >= 2, "shape-mismatch", "need at least s_1, s_2");
  require(d.size() == p - 1, "shape-mismatch", "one d coefficient per rule");
  RewriteSystem sys;
  sys.s = s;
  ValueSemigroup sg = exzar_semigroup(s, p);
  for (const GroupElement& g : sg.gens) sys.weights.push_back(g.coeffs[0]);
  for (std::size_t t = 1; t < p; ++t) {
    RewriteRule rule;
    rule.var = t;
    rule.power = s[t];  // s_{j-1} for u_j with j = t + 2
    rule.d = d[t - 1];
    Rat value = Rat(s[t]) * sys.weights[t];
    rule.ell = detail::staircase_monomial(s, sys.weights, t, value);
    if (t + 1 < p) rule.succ = t + 1;
    sys.rules.push_back(std::move(rule));
  }
  return sys;
}

// Innermost-first normal form: repeatedly rewrite the highest-index variable
// power that matches a rule, until no monomial is reducible.
inline Poly normal_form(const RewriteSystem& sys, Poly p) {
  const std::size_t nv = sys.nvars();
  for (const auto& [e, c] : p)
    require(e.size() == nv, "shape-mismatch", "polynomial arity");
  std::size_t guard = 0;
  while (true) {
    require(++guard < 1000000, "rewrite-diverged", "rewrite did not terminate");
    const RewriteRule* rule = nullptr;
    IntVec mono;
    Rat coeff;
    for (const auto& [e, c] : p) {
      for (auto it = sys.rules.rbegin(); it != sys.rules.rend(); ++it) {
        if (e[it->var] >= it->power) {
          if (!rule || it->var > rule->var) {
            rule = &*it;
            mono = e;
            coeff = c;
          }
          break;
        }
      }
    }
    if (!rule) return p;
    p.erase(mono);
    IntVec base = mono;
    base[rule->var] -= rule->power;
    IntVec branch = vec_add(base, rule->ell);
    poly_add_term(p, branch, coeff * rule->d);
    if (rule->succ) {
      IntVec succ = base;
      succ[*rule->succ] += 1;
      poly_add_term(p, succ, coeff);
    }
  }
}

struct Valuation {
  Rat value;
  IntVec monomial;  // the unique minimal-weight monomial of the normal form
  Poly nf;
};

// Truncated valuation: weight of the minimal monomial of the normal form.
// The truncation is only faithful while s_2 * ... * s_p exceeds the degree.
inline Valuation valuate(const RewriteSystem& sys, const Poly& p) {
  require(!p.empty(), "empty-input", "valuation of the zero polynomial");
  Int budget = 1;
  for (std::size_t i = 1; i < sys.s.size(); ++i) budget *= sys.s[i];
  require(budget > poly_degree(p), "system-too-short",
          "degree " + std::to_string(poly_degree(p)) + " needs a deeper system");
  Poly nf = normal_form(sys, p);
  require(!nf.empty(), "system-too-short", "normal form collapsed to zero");
  std::optional<Rat> best;
  IntVec best_e;
  for (const auto& [e, c] : nf) {
    Rat w(0);
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * sys.weights[i];
    if (!best || w < *best) {
      best = w;
      best_e = e;
    } else if (w == *best) {
      fail("valuation-ambiguous", "two minimal monomials of equal weight");
    }
  }
  return {*best, best_e, std::move(nf)};
}

// ---------------------------------------------------------------------------
// Independent cross-check by substitution into the defining parameters:
//   u_1 = v_1,  u_2 = v_2,  v_i = v_{i+1}^{s_i} (c_i + v_{i+2}),
// expanding to a prescribed depth and reading weights off the deep pair.
// ---------------------------------------------------------------------------

struct VExpansion {
  std::vector<Poly> u;  // u_2, ..., u_{p+1} as polynomials in the deep pair
  Rat wx, wy;           // weights of the two remaining parameters
};

namespace detail {

// Substitute the pair (x, y) = (v_i, v_{i+1}) by x -> y'^{s}(c + x') keeping
// two variables: afterwards (x', y') = (v_{i+2}, v_{i+1}) reordered so the
// polynomial stays in (v_{i+1}, v_{i+2}).
inline Poly v_step(const Poly& p, const Int& s, const Rat& c) {
  Poly out;
  unsigned long su = to_ulong(s);
  // binomial coefficients of (c + v_{i+2})^a, built incrementally and shared
  // across all terms of p
  std::vector<std::vector<Rat>> pows{{Rat(1)}};
  for (const auto& [e, k] : p) {
    unsigned long a = to_ulong(e[0]);  // power of v_i
    unsigned long b = to_ulong(e[1]);  // power of v_{i+1}
    while (pows.size() <= a) {
      const std::vector<Rat>& prev = pows.back();
      std::vector<Rat> next(prev.size() + 1, Rat(0));
      for (std::size_t j = 0; j < prev.size(); ++j) {
        next[j] += c * prev[j];
        next[j + 1] += prev[j];
      }
      pows.push_back(std::move(next));
    }
    // v_i^a v_{i+1}^b -> v_{i+1}^{s a + b} (c + v_{i+2})^a
    Int head = Int(su) * Int(a) + Int(b);
    for (unsigned long j = 0; j <= a; ++j)
      poly_add_term(out, IntVec{head, Int(j)}, k * pows[a][j]);
  }
  return out;
}

inline std::pair<Rat, IntVec> initial_term(const Poly& p, const Rat& wx, const Rat& wy) {
  std::optional<Rat> best;
  IntVec best_e;
  Rat best_c;
  for (const auto& [e, c] : p) {
    Rat w = e[0] * wx + e[1] * wy;
    if (!best || w < *best) {
      best = w;
      best_e = e;
      best_c = c;
    } else if (w == *best) {
      fail("valuation-ambiguous", "initial term not unique");
    }
  }
  require(best.has_value(), "empty-input", "initial term of zero");
  return {best_c, best_e};
}

}  // namespace detail

// Expand the u-variables down to depth `depth` (the deep pair being
// (v_{depth+1}, v_{depth+2})), given the parameters c_i and the rewrite
// coefficients d (d_3, ...).  Needs s_1..s_{depth+1} defined; the s list is
// extended periodically when shorter.
inline VExpansion v_expand(const std::vector<Int>& s, const std::vector<Rat>& c,
                           const std::vector<Rat>& d, std::size_t nvars,
                           std::size_t depth) {
  require(c.size() >= depth, "shape-mismatch", "need c_1..c_depth");
  auto s_at = [&](std::size_t i) { return s[i % s.size()]; };
  // u_1, u_2 in the pair (v_1, v_2)
  std::vector<Poly> base{poly_var(2, 0), poly_var(2, 1)};  // u_1, u_2
  // u_{j+1} = u_j^{s_{j-1}} - d_j u^{l(j)} needs the u's as polynomials in
  // (v_1, v_2); build them first, then push the v-substitution through.
  std::vector<Int> ss(s.begin(), s.end());
  while (ss.size() < nvars) ss.push_back(s_at(ss.size()));
  RewriteSystem sys = build_staircase_system(ss, [&] {
    std::vector<Rat> dd = d;
    while (dd.size() + 1 < ss.size()) dd.push_back(1);
    dd.resize(ss.size() - 1);
    return dd;
  }());
  std::vector<Poly> u;            // u_2.. in (v_1, v_2)
  u.push_back(poly_var(2, 1));    // u_2 = v_2
  if (nvars >= 2) {
    // u_3 = u_2^{s_1} - c_1^{-1} u_1
    Poly u3 = poly_pow(u[0], to_ulong(s[0]));
    u3 = poly_sub(u3, poly_scale(1 / c[0], poly_var(2, 0)));
    u.push_back(std::move(u3));
  }
  for (std::size_t t = 2; t < nvars; ++t) {
    // u_{t+2} = u_{t+1}^{s_t} - d_{t+1} u^{l(t+1)} via the rule of u_{t+1}
    const RewriteRule& rule = sys.rules[t - 2];
    Poly next = poly_pow(u[t - 1], to_ulong(rule.power));
    Poly mono = poly_const(2, rule.d);
    for (std::size_t k = 0; k < rule.ell.size() && k < u.size(); ++k)
      if (rule.ell[k] != 0) mono = poly_mul(mono, poly_pow(u[k], to_ulong(rule.ell[k])));
    u.push_back(poly_sub(next, mono));
  }
  // substitute v_1 -> v_2^{s_1}(c_1 + v_3), then v_2 -> ..., down to depth
  for (std::size_t i = 0; i < depth; ++i)
    for (Poly& q : u) q = detail::v_step(q, s_at(i), c[i]);
  VExpansion out;
  out.u = std::move(u);
  Rat w(1);
  for (std::size_t i = 0; i < depth; ++i) w /= s_at(i);
  out.wx = w;               // weight of v_{depth+1}
  out.wy = w / s_at(depth); // weight of v_{depth+2}
  return out;
}

// Rewrite coefficients d_3, d_4, ... derived from the parameters c by
// matching initial coefficients of the v-expansions.
inline std::vector<Rat> derive_d(const std::vector<Int>& s, const std::vector<Rat>& c,
                                 std::size_t depth = 0) {
  const std::size_t p = s.size();
  if (depth == 0) depth = p + 2;
  std::vector<Rat> weights;
  for (const GroupElement& g : exzar_semigroup(s, p).gens) weights.push_back(g.coeffs[0]);
  std::vector<Rat> d;
  for (std::size_t t = 1; t < p; ++t) {
    // d for the rule of u_{t+2}: beta^{power} / prod beta_k^{l_k}
    VExpansion ve = v_expand(s, c, d, t + 1, depth);
    IntVec ell = detail::staircase_monomial(s, weights, t, Rat(s[t]) * weights[t]);
    Rat beta_top = detail::initial_term(ve.u[t], ve.wx, ve.wy).first;
    Rat denom(1);
    for (std::size_t k = 0; k < ell.size(); ++k)
      if (ell[k] != 0)
        denom *= pow_rat(detail::initial_term(ve.u[k], ve.wx, ve.wy).first,
                         to_long(ell[k]));
    d.push_back(pow_rat(beta_top, to_long(s[t])) / denom);
  }
  return d;
}

// Oracle valuation by direct substitution: expand P(u_2, ..., u_{p+1}) in the
// deep parameter pair and take the minimal weight.
inline Rat oracle_valuate(const std::vector<Int>& s, const std::vector<Rat>& c,
                          const std::vector<Rat>& d, const Poly& poly,
                          std::size_t depth) {
  std::size_t nv = 0;
  for (const auto& [e, k] : poly)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) nv = std::max(nv, i + 1);
  nv = std::max<std::size_t>(nv, 2);
  // substitute while still shallow, then push the whole sum down at once
  VExpansion shallow = v_expand(s, c, d, nv, 0);
  Poly total;
  for (const auto& [e, k] : poly) {
    Poly term = poly_const(2, k);
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i] != 0) term = poly_mul(term, poly_pow(shallow.u[i], to_ulong(e[i])));
    for (const auto& [e2, k2] : term) poly_add_term(total, e2, k2);
  }
  require(!total.empty(), "empty-input", "oracle expansion vanished");
  require(c.size() >= depth, "shape-mismatch", "need c_1..c_depth");
  auto s_at = [&](std::size_t i) { return s[i % s.size()]; };
  for (std::size_t i = 0; i < depth; ++i) total = detail::v_step(total, s_at(i), c[i]);
  Rat w(1);
  for (std::size_t i = 0; i < depth; ++i) w /= s_at(i);
  Rat wx = w, wy = w / s_at(depth);
  std::optional<Rat> best;
  for (const auto& [e, k] : total) {
    Rat tw = e[0] * wx + e[1] * wy;
    if (!best || tw < *best) best = tw;
  }
  return *best;
}

}  // namespace toric
