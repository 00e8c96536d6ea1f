#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "ordered_group.hpp"

namespace toric {

// An entry of the tau vector: an exact rational or a continued fraction.
struct TauEntry {
  CFReal cf;

  static TauEntry rational(const Rat& x) { return {CFReal::from_rational(x)}; }
  static TauEntry irrational(CFReal c) { return {std::move(c)}; }
  bool is_rational() const { return cf.is_rational(); }
};

struct PerronStep {
  IntVec quotients;               // a_2 .. a_m
  std::vector<IntVec> window;     // A^(h+1) .. A^(h+m) after the step
  Int window_det;                 // +-1
  IntMat inclusion;               // old window rows in terms of the new ones
};

struct PerronResult {
  std::size_t m = 0;
  std::vector<IntVec> avectors;               // A^(0), A^(1), ...
  std::vector<PerronStep> steps;
  bool terminated = false;                    // a zero entry appeared (rational tau)
  std::size_t termination_step = 0;
  std::vector<std::pair<Int, Int>> convergents;  // m == 2: reversed window vectors
};

namespace detail {

inline int tau_sign(const OrderSpec& spec, const IntVec& combo) {
  GroupElement g{RatVec(combo.size())};
  for (std::size_t i = 0; i < combo.size(); ++i) g.coeffs[i] = combo[i];
  return compare(spec, g, ge_zero(spec));
}

// floor(num / den) for two positive integer combinations of the tau basis.
inline Int tau_floor_div(const OrderSpec& spec, const IntVec& num, const IntVec& den) {
  // grow by doubling, then binary search for the last a with num - a*den >= 0
  Int lo = 0, hi = 1;
  while (tau_sign(spec, vec_sub(num, vec_scale(hi, den))) >= 0) {
    lo = hi;
    hi *= 2;
  }
  while (lo < hi) {
    Int mid = floor_div(lo + hi + 1, Int(2));
    if (tau_sign(spec, vec_sub(num, vec_scale(mid, den))) >= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace detail

// Perron's algorithm on a vector of positive reals: repeatedly divides by the
// first entry, rotates, and accumulates the A-vector window whose cones nest
// down onto the weight.  Exact arithmetic throughout; irrational entries are
// supported in the two-dimensional case.
inline PerronResult perron_run(const std::vector<TauEntry>& tau, std::size_t steps,
                               std::size_t cf_depth = 64) {
  const std::size_t m = tau.size();
  require(m >= 2, "shape-mismatch", "perron needs at least two entries");
  std::size_t n_irrational = 0;
  for (const TauEntry& t : tau)
    if (!t.is_rational()) ++n_irrational;
  require(n_irrational == 0 || m == 2, "unsupported-irrational-rank",
          "irrational entries are only supported for m = 2");
  std::vector<CFReal> ws;
  for (const TauEntry& t : tau) ws.push_back(t.cf);
  OrderSpec spec = OrderSpec::weighted(std::move(ws), cf_depth);

  // current tau entries as integer combinations of the original ones
  std::vector<IntVec> state;
  for (std::size_t i = 0; i < m; ++i) {
    IntVec e(m, 0);
    e[i] = 1;
    state.push_back(std::move(e));
    require(detail::tau_sign(spec, state.back()) > 0, "not-positive",
            "tau entries must be positive");
  }

  PerronResult res;
  res.m = m;
  std::deque<IntVec> window;
  for (std::size_t j = 0; j < m; ++j) {
    IntVec e(m, 0);
    e[j] = 1;
    res.avectors.push_back(e);
    window.push_back(e);
  }
  for (std::size_t h = 0; h < steps; ++h) {
    PerronStep st;
    std::vector<IntVec> next_state;
    bool hit_zero = false;
    for (std::size_t j = 1; j < m; ++j) {
      Int a = detail::tau_floor_div(spec, state[j], state[0]);
      st.quotients.push_back(a);
      IntVec rem = vec_sub(state[j], vec_scale(a, state[0]));
      if (detail::tau_sign(spec, rem) == 0) hit_zero = true;
      next_state.push_back(std::move(rem));
    }
    next_state.push_back(state[0]);
    // A^(h+m) = A^(h) + sum_j a_j A^(h+j-1)
    IntVec fresh = window.front();
    for (std::size_t j = 1; j < m; ++j)
      fresh = vec_add(fresh, vec_scale(st.quotients[j - 1], window[j]));
    window.pop_front();
    window.push_back(fresh);
    res.avectors.push_back(fresh);
    st.window.assign(window.begin(), window.end());
    st.window_det = det_int(IntMat(window.begin(), window.end()));
    // nesting witness: new window rows as nonnegative combinations of the
    // old ones (companion-style matrix)
    st.inclusion.assign(m, IntVec(m, 0));
    for (std::size_t j = 0; j + 1 < m; ++j) st.inclusion[j][j + 1] = 1;  // new_j = old_{j+1}
    st.inclusion[m - 1][0] = 1;
    for (std::size_t j = 1; j < m; ++j) st.inclusion[m - 1][j] = st.quotients[j - 1];
    res.steps.push_back(std::move(st));
    state = std::move(next_state);
    if (hit_zero) {
      res.terminated = true;
      res.termination_step = h + 1;
      break;
    }
  }
  if (m == 2)
    for (std::size_t i = m; i < res.avectors.size(); ++i)
      res.convergents.emplace_back(res.avectors[i][1], res.avectors[i][0]);
  return res;
}

// ---------------------------------------------------------------------------
// Appending one rationally dependent generator to a two-dimensional run:
// produces an integral basis of the relation hyperplane lattice whose cone
// contains the weight (tau_1, tau_2, rho_1 tau_1 + rho_2 tau_2).
// ---------------------------------------------------------------------------

struct AppendResult {
  IntVec relation;             // primitive integer relation vector
  std::vector<IntVec> rays;    // two lattice basis vectors spanning the cone
  std::size_t steps_used = 0;
};

inline AppendResult perron_append_dependent(const std::vector<TauEntry>& tau,
                                            const Rat& rho1, const Rat& rho2,
                                            std::size_t max_steps = 64,
                                            std::size_t cf_depth = 64) {
  require(tau.size() == 2, "unsupported-irrational-rank",
          "dependent append works on top of the m = 2 case");
  OrderSpec spec = OrderSpec::weighted({tau[0].cf, tau[1].cf}, cf_depth);
  {
    GroupElement t3{RatVec{rho1, rho2}};
    require(compare(spec, t3, ge_zero(spec)) > 0, "not-positive",
            "appended entry must be positive");
  }
  Int den = rho1.get_den() / gcd(rho1.get_den(), rho2.get_den()) * rho2.get_den();
  IntVec rel{Rat(rho1 * den).get_num(), Rat(rho2 * den).get_num(), -den};
  rel = primitive_vector(std::move(rel));
  IntMat B = kernel_lattice(IntMat{rel});  // rank-2 saturated lattice basis
  require(B.size() == 2, "internal", "relation hyperplane lattice");
  // coordinates of w = (tau_1, tau_2, rho_1 tau_1 + rho_2 tau_2) in basis B,
  // as rational combinations of (tau_1, tau_2)
  RatMat Wm = {{1, 0}, {0, 1}, {rho1, rho2}};
  RatMat theta(2, RatVec(2));
  {
    // pick two coordinates where B is invertible
    bool done = false;
    for (std::size_t i = 0; i < 3 && !done; ++i)
      for (std::size_t j = i + 1; j < 3 && !done; ++j) {
        RatMat M = {{Rat(B[0][i]), Rat(B[1][i])}, {Rat(B[0][j]), Rat(B[1][j])}};
        if (M[0][0] * M[1][1] - M[0][1] * M[1][0] == 0) continue;
        RatMat Minv = rat_inverse(M);
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t c = 0; c < 2; ++c)
            theta[k][c] = Minv[k][0] * Wm[i][c] + Minv[k][1] * Wm[j][c];
        done = true;
      }
    require(done, "internal", "degenerate relation basis");
  }
  for (std::size_t k = 0; k < 2; ++k) {
    GroupElement t{theta[k]};
    int s = compare(spec, t, ge_zero(spec));
    require(s != 0, "rational-dependence", "weight lies on a basis hyperplane");
    if (s < 0) {
      for (Rat& x : theta[k]) x = -x;
      for (Int& x : B[k]) x = -x;
    }
  }
  // scale theta to integer combinations and run perron steps until the
  // transported basis becomes nonnegative
  Int den2 = 1;
  for (const RatVec& row : theta)
    for (const Rat& x : row) den2 = den2 / gcd(den2, x.get_den()) * x.get_den();
  std::vector<IntVec> state(2, IntVec(2));
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t c = 0; c < 2; ++c) state[k][c] = Rat(theta[k][c] * den2).get_num();
  std::deque<IntVec> window;
  window.push_back({1, 0});
  window.push_back({0, 1});
  AppendResult out;
  out.relation = rel;
  for (std::size_t h = 0; h <= max_steps; ++h) {
    std::vector<IntVec> rays;
    bool ok = true;
    for (std::size_t k = 0; k < 2; ++k) {
      IntVec v(3, 0);
      for (std::size_t j = 0; j < 2; ++j) v = vec_add(v, vec_scale(window[k][j], B[j]));
      for (const Int& x : v) ok = ok && x >= 0;
      rays.push_back(std::move(v));
    }
    if (ok) {
      out.rays = rays;
      out.steps_used = h;
      return out;
    }
    require(h < max_steps, "append-failed", "cone did not reach the positive orthant");
    Int a = detail::tau_floor_div(spec, state[1], state[0]);
    IntVec rem = vec_sub(state[1], vec_scale(a, state[0]));
    require(detail::tau_sign(spec, rem) > 0, "rational-dependence",
            "weight coordinates hit an exact multiple");
    IntVec fresh = vec_add(window[0], vec_scale(a, window[1]));
    window.pop_front();
    window.push_back(fresh);
    state = {rem, state[0]};
  }
  fail("append-failed", "unreachable");
}

// ---------------------------------------------------------------------------
// Presentation streams: families of graded binomial presentations emitted
// relation by relation.
// ---------------------------------------------------------------------------

struct PresentationStream {
  OrderSpec spec;
  std::vector<std::string> names;      // materialized variables
  std::vector<GroupElement> degrees;   // one per variable
  std::vector<Binomial> binomials;     // over the materialized variables
};

// LexZ(d) stream: relations V^(i)_j - V^(i)_{j+1} V^(i+1)_0, emitted for
// j = 0, 1, ... cycling over i = 1..d-1.
inline PresentationStream stream_lex_Zd(std::size_t d, std::size_t count) {
  require(d >= 2, "shape-mismatch", "lex stream needs d >= 2");
  PresentationStream out;
  out.spec = OrderSpec::lex(d);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> vars;  // (i,j) -> index
  auto var = [&](std::size_t i, std::size_t j) {
    auto [it, fresh] = vars.emplace(std::make_pair(i, j), out.names.size());
    if (fresh) {
      out.names.push_back("V" + std::to_string(i) + "_" + std::to_string(j));
      GroupElement deg = ge_zero(out.spec);
      deg.coeffs[i - 1] = 1;
      if (i < d) deg.coeffs[i] = -Rat(static_cast<unsigned long>(j));
      out.degrees.push_back(std::move(deg));
    }
    return it->second;
  };
  std::vector<std::array<std::size_t, 3>> rel_vars;
  for (std::size_t j = 0; rel_vars.size() < count; ++j)
    for (std::size_t i = 1; i < d && rel_vars.size() < count; ++i)
      rel_vars.push_back({var(i, j), var(i, j + 1), var(i + 1, 0)});
  const std::size_t nv = out.names.size();
  for (const auto& [a, b, c] : rel_vars) {
    Binomial bin;
    bin.m.assign(nv, 0);
    bin.n.assign(nv, 0);
    bin.m[a] = 1;
    bin.n[b] += 1;
    bin.n[c] += 1;
    out.binomials.push_back(std::move(bin));
  }
  return out;
}

// Continued-fraction stream: V_i - V_{i+1}^{s_i} V_{i+2} with degrees in
// Z + Z*tau for tau = [s_1; s_2, ...].
inline PresentationStream stream_cf_tau(const std::vector<Int>& s, std::size_t count) {
  require(count >= 1 && count <= s.size(), "index-out-of-range", "need s_1..s_count");
  PresentationStream out;
  CFReal tau;
  tau.prefix = s;
  tau.tail = CFReal::Tail::Periodic;
  tau.period = s;
  out.spec = OrderSpec::weighted({CFReal::from_rational(Rat(1)), tau});
  const std::size_t nv = count + 2;
  std::vector<RatVec> deg(nv);          // coefficients over (1, tau)
  deg[0] = {Rat(0), Rat(1)};            // deg V_1 = tau
  deg[1] = {Rat(1), Rat(0)};            // deg V_2 = 1
  for (std::size_t i = 2; i < nv; ++i) {
    deg[i] = {deg[i - 2][0] - s[i - 2] * deg[i - 1][0],
              deg[i - 2][1] - s[i - 2] * deg[i - 1][1]};
  }
  for (std::size_t i = 0; i < nv; ++i) {
    out.names.push_back("V" + std::to_string(i + 1));
    out.degrees.push_back(GroupElement{deg[i]});
    require(ge_positive(out.spec, out.degrees.back()), "not-positive",
            "stream degree must be positive");
  }
  for (std::size_t i = 0; i < count; ++i) {
    Binomial bin;
    bin.m.assign(nv, 0);
    bin.n.assign(nv, 0);
    bin.m[i] = 1;
    bin.n[i + 1] = s[i];
    bin.n[i + 2] = 1;
    out.binomials.push_back(std::move(bin));
  }
  return out;
}

// Rational rank-one stream: V_i - c_i V_{i+1}^{s_i} with degrees
// 1/(s_1 ... s_{i-1}).
inline PresentationStream stream_zariski_Q(const std::vector<Int>& s,
                                           const std::vector<Rat>& c, std::size_t count) {
  require(count >= 1 && count <= s.size() && count <= c.size(), "index-out-of-range",
          "need s_1..s_count and c_1..c_count");
  PresentationStream out;
  out.spec = OrderSpec::rational();
  const std::size_t nv = count + 1;
  Rat w(1);
  for (std::size_t i = 0; i < nv; ++i) {
    out.names.push_back("V" + std::to_string(i + 1));
    out.degrees.push_back(ge_rat(w));
    if (i < s.size()) w /= s[i];
  }
  for (std::size_t i = 0; i < count; ++i) {
    require(c[i] != 0, "lambda-zero", "stream constant must be nonzero");
    Binomial bin;
    bin.m.assign(nv, 0);
    bin.n.assign(nv, 0);
    bin.m[i] = 1;
    bin.n[i + 1] = s[i];
    bin.lambda = c[i];
    out.binomials.push_back(std::move(bin));
  }
  return out;
}

}  // namespace toric
