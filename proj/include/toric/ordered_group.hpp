#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Continued fractions.
// ---------------------------------------------------------------------------

// A real number given by its continued fraction [c_0; c_1, c_2, ...].
// The prefix lists explicit partial quotients; the tail rule extends it:
//   terminated  - the number is the exact rational with those quotients
//   periodic    - the period repeats forever (quadratic irrational)
//   arithmetic  - quotients continue as start, start+step, start+2*step, ...
struct CFReal {
  enum class Tail { Terminated, Periodic, Arithmetic };

  std::vector<Int> prefix;
  Tail tail = Tail::Terminated;
  std::vector<Int> period;
  Int start = 0, step = 0;

  bool is_rational() const { return tail == Tail::Terminated; }

  Int quotient(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    switch (tail) {
      case Tail::Terminated:
        fail("cf-exhausted", "terminated continued fraction has no quotient " +
                                 std::to_string(i));
      case Tail::Periodic: {
        require(!period.empty(), "cf-exhausted", "empty period");
        return period[(i - prefix.size()) % period.size()];
      }
      case Tail::Arithmetic:
        return start + Int(static_cast<unsigned long>(i - prefix.size())) * step;
    }
    fail("cf-exhausted", "unreachable");
  }

  static CFReal from_rational(const Rat& x) {
    CFReal cf;
    Int p = x.get_num(), q = x.get_den();
    while (q != 0) {
      Int a = floor_div(p, q);
      cf.prefix.push_back(a);
      Int r = p - a * q;
      p = q;
      q = r;
    }
    return cf;
  }

  Rat rational_value() const {
    require(is_rational(), "cf-exhausted", "irrational continued fraction has no exact value");
    require(!prefix.empty(), "cf-exhausted", "empty continued fraction");
    Rat v = prefix.back();
    for (std::size_t i = prefix.size() - 1; i-- > 0;) {
      Rat t = prefix[i] + 1 / v;
      v = t;
    }
    return v;
  }
};

// First h convergents (p_1,q_1),...,(p_h,q_h) with p_1/q_1 = c_0 and the
// recurrence p_i = c_{i-1} p_{i-1} + p_{i-2}.  For a terminated fraction at
// most all of its convergents are produced.
inline std::vector<std::pair<Int, Int>> cf_convergents(const CFReal& cf, std::size_t h) {
  std::vector<std::pair<Int, Int>> out;
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // p_{-1}, p_0 seeds
  for (std::size_t i = 0; i < h; ++i) {
    if (cf.is_rational() && i >= cf.prefix.size()) break;
    Int c = cf.quotient(i);
    Int p = c * p1 + p0, q = c * q1 + q0;
    out.emplace_back(p, q);
    p0 = p1;
    q0 = q1;
    p1 = p;
    q1 = q;
  }
  return out;
}

// Open interval (or exact point) enclosing the value, from depth k.
struct CFInterval {
  Rat lo, hi;
  bool exact = false;
};

inline CFInterval cf_interval(const CFReal& cf, std::size_t k) {
  if (cf.is_rational()) {
    Rat v = cf.rational_value();
    return {v, v, true};
  }
  auto conv = cf_convergents(cf, k + 1);
  require(conv.size() >= 2, "cf-exhausted", "need at least two convergents");
  Rat a(conv[conv.size() - 2].first, conv[conv.size() - 2].second);
  Rat b(conv[conv.size() - 1].first, conv[conv.size() - 1].second);
  a.canonicalize();
  b.canonicalize();
  if (a > b) std::swap(a, b);
  return {a, b, false};
}

// ---------------------------------------------------------------------------
// Ordered abelian groups of finite rational rank.
// ---------------------------------------------------------------------------

enum class OrderKind { LexZ, RationalLine, WeightedLine };

// LexZ(d):        Z^d ordered lexicographically (coeffs are the coordinates).
// RationalLine:   Q with its usual order (rank 1).
// WeightedLine:   sums a_1 w_1 + ... + a_r w_r inside R, with the w_i given by
//                 continued fractions and assumed rationally independent.
struct OrderSpec {
  OrderKind kind = OrderKind::RationalLine;
  std::size_t rank = 1;
  std::vector<CFReal> weights;  // WeightedLine only
  std::size_t cf_depth = 64;

  static OrderSpec lex(std::size_t d) { return {OrderKind::LexZ, d, {}, 64}; }
  static OrderSpec rational() { return {OrderKind::RationalLine, 1, {}, 64}; }
  static OrderSpec weighted(std::vector<CFReal> ws, std::size_t depth = 64) {
    std::size_t r = ws.size();
    return {OrderKind::WeightedLine, r, std::move(ws), depth};
  }
};

struct GroupElement {
  RatVec coeffs;
};

inline GroupElement ge_zero(const OrderSpec& spec) {
  return {RatVec(spec.rank, Rat(0))};
}

inline GroupElement ge_rat(const Rat& x) { return {RatVec{x}}; }

inline GroupElement ge_add(const GroupElement& a, const GroupElement& b) {
  require(a.coeffs.size() == b.coeffs.size(), "shape-mismatch", "group element sum");
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

inline GroupElement ge_sub(const GroupElement& a, const GroupElement& b) {
  require(a.coeffs.size() == b.coeffs.size(), "shape-mismatch", "group element difference");
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

inline GroupElement ge_scale(const Rat& c, const GroupElement& a) {
  GroupElement r = a;
  for (Rat& x : r.coeffs) x *= c;
  return r;
}

inline bool ge_is_zero(const GroupElement& a) {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                     [](const Rat& x) { return x == 0; });
}

// Sign of sum a_i w_i where the w_i are rationally independent reals known by
// continued fractions.  Decided by refining convergent intervals; if the sign
// is still ambiguous at the depth cap the independence assumption is suspect.
inline int weighted_sign(const OrderSpec& spec, const RatVec& a) {
  Rat exact(0);
  std::vector<std::size_t> irr;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (spec.weights[i].is_rational())
      exact += a[i] * spec.weights[i].rational_value();
    else
      irr.push_back(i);
  }
  if (irr.empty()) return sgn(exact);
  for (std::size_t depth = 1; depth <= spec.cf_depth; ++depth) {
    Rat lo = exact, hi = exact;
    for (std::size_t i : irr) {
      CFInterval iv = cf_interval(spec.weights[i], depth);
      if (a[i] > 0) {
        lo += a[i] * iv.lo;
        hi += a[i] * iv.hi;
      } else {
        lo += a[i] * iv.hi;
        hi += a[i] * iv.lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  fail("independence-violation-suspected",
       "sign of weighted combination undecided at depth " + std::to_string(spec.cf_depth));
}

// Three-way comparison: -1, 0, +1 for a < b, a == b, a > b.
inline int compare(const OrderSpec& spec, const GroupElement& a, const GroupElement& b) {
  require(a.coeffs.size() == spec.rank && b.coeffs.size() == spec.rank, "shape-mismatch",
          "group element rank");
  switch (spec.kind) {
    case OrderKind::LexZ:
      for (std::size_t i = 0; i < spec.rank; ++i) {
        if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::RationalLine: {
      Rat d = a.coeffs[0] - b.coeffs[0];
      return sgn(d);
    }
    case OrderKind::WeightedLine: {
      RatVec d(spec.rank);
      bool all_zero = true;
      for (std::size_t i = 0; i < spec.rank; ++i) {
        d[i] = a.coeffs[i] - b.coeffs[i];
        if (d[i] != 0) all_zero = false;
      }
      if (all_zero) return 0;
      return weighted_sign(spec, d);
    }
  }
  fail("internal", "unknown order kind");
}

inline bool ge_positive(const OrderSpec& spec, const GroupElement& a) {
  return compare(spec, a, ge_zero(spec)) > 0;
}

// ---------------------------------------------------------------------------
// Value semigroups.
// ---------------------------------------------------------------------------

struct ValueSemigroup {
  OrderSpec spec;
  std::vector<GroupElement> gens;
};

namespace detail {

// Depth-first search for a nonnegative integer combination of gens[0..k)
// equal to target, every coefficient bounded by `bound`.
inline bool representable(const OrderSpec& spec, const std::vector<GroupElement>& gens,
                          std::size_t k, const GroupElement& target, const Int& bound) {
  if (ge_is_zero(target)) return true;
  if (k == 0) return false;
  const GroupElement& g = gens[k - 1];
  GroupElement rest = target;
  for (Int c = 0; c <= bound; ++c) {
    int cmp = compare(spec, rest, ge_zero(spec));
    if (cmp < 0) break;  // generators are positive: once below zero, stop
    if (representable(spec, gens, k - 1, rest, bound)) return true;
    rest = ge_sub(rest, g);
  }
  return false;
}

}  // namespace detail

// Minimal generating set of the semigroup generated by `values`: sorted
// ascending, keeping each value not representable by the earlier keepers.
inline std::vector<GroupElement> minimal_generators(const OrderSpec& spec,
                                                    std::vector<GroupElement> values,
                                                    const Int& bound = 4096) {
  for (const GroupElement& v : values)
    require(ge_positive(spec, v), "not-positive", "semigroup values must be positive");
  std::sort(values.begin(), values.end(), [&](const GroupElement& a, const GroupElement& b) {
    return compare(spec, a, b) < 0;
  });
  std::vector<GroupElement> kept;
  for (const GroupElement& v : values) {
    if (!kept.empty() && compare(spec, kept.back(), v) == 0) continue;
    if (!detail::representable(spec, kept, kept.size(), v, bound)) kept.push_back(v);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Minimal relations  n_i * g_i + sum n_k g_k = sum l_k g_k  (k < i).
// ---------------------------------------------------------------------------

struct MinimalRelation {
  Int order;     // n_i
  IntVec ncoef;  // extra left-hand coefficients n_k, k < i
  IntVec ell;    // right-hand coefficients l_k, k < i
};

namespace detail {

// Integer matrix whose columns are the coefficient vectors of gens[0..count),
// scaled by the common denominator (returned through `den`).
inline IntMat coeff_columns(const std::vector<GroupElement>& gens, std::size_t count,
                            std::size_t rank, Int& den) {
  den = 1;
  for (std::size_t k = 0; k < count; ++k)
    for (const Rat& c : gens[k].coeffs) den = den / gcd(den, c.get_den()) * c.get_den();
  IntMat A(rank, IntVec(count, 0));
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < rank; ++i) {
      Rat scaled = gens[k].coeffs[i] * den;
      A[i][k] = scaled.get_num();
    }
  return A;
}

// All integer solutions c of A c = rhs with kernel coordinates in a box
// around the particular solution closest to the origin.
inline std::vector<IntVec> solutions_in_box(const IntMat& A, const IntVec& rhs,
                                            const Int& box) {
  std::vector<IntVec> out;
  auto sol = integer_solve(A, rhs);
  if (!sol) return out;
  const std::size_t f = sol->kernel.size();
  if (f > 0) {
    // pull the particular solution near the origin: round the rational
    // least-squares kernel coordinates (normal equations G y = -K x0)
    RatMat G(f, RatVec(f));
    RatVec r0(f);
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = 0; j < f; ++j) G[i][j] = Rat(dot(sol->kernel[i], sol->kernel[j]));
      r0[i] = -Rat(dot(sol->kernel[i], sol->particular));
    }
    if (auto y = rat_solve(G, r0)) {
      for (std::size_t i = 0; i < f; ++i) {
        Int yi = floor_rat((*y)[i] + Rat(1, 2));
        if (yi != 0) sol->particular = vec_add(sol->particular, vec_scale(yi, sol->kernel[i]));
      }
    }
  }
  IntVec y(f, -box);
  while (true) {
    IntVec c = sol->particular;
    for (std::size_t i = 0; i < f; ++i)
      if (y[i] != 0) c = vec_add(c, vec_scale(y[i], sol->kernel[i]));
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < f && y[i] == box) {
      y[i] = -box;
      ++i;
    }
    if (i == f) break;
    y[i] += 1;
  }
  return out;
}

}  // namespace detail

// The minimal relation of gens[i] (0-based index) over gens[0..i): the least
// n >= 1 with n*g_i in the group generated by the earlier generators, the
// witnessing coefficients chosen deterministically:
//   - representations with l_{i-1} < n_{i-1} preferred when the predecessor
//     itself satisfies a relation (its order n_{i-1});
//   - purely nonnegative right-hand sides preferred;
//   - then minimal total sum of l; then lexicographically least.
inline MinimalRelation minimal_relation(const ValueSemigroup& S, std::size_t i,
                                        const Int& bound = 4096, const Int& box = 128) {
  require(i >= 1 && i < S.gens.size(), "index-out-of-range", "minimal_relation index");
  Int den;
  IntMat A = detail::coeff_columns(S.gens, i, S.spec.rank, den);
  // order of the predecessor, when it has a relation of its own
  std::optional<Int> pred_order;
  if (i >= 2) {
    Int dummy;
    IntMat Ap = detail::coeff_columns(S.gens, i - 1, S.spec.rank, dummy);
    if (rank_int(transpose(A)) == rank_int(transpose(Ap))) {
      // predecessor rationally dependent: reuse this routine
      pred_order = minimal_relation(S, i - 1, bound, box).order;
    }
  }
  for (Int n = 1; n <= bound; ++n) {
    IntVec rhs(S.spec.rank);
    bool integral = true;
    for (std::size_t r = 0; r < S.spec.rank; ++r) {
      Rat scaled = S.gens[i].coeffs[r] * n * den;
      if (scaled.get_den() != 1) {
        integral = false;  // n*g_i is not in the lattice scale of the earlier gens
        break;
      }
      rhs[r] = scaled.get_num();
    }
    if (!integral) continue;
    std::vector<IntVec> sols = detail::solutions_in_box(A, rhs, box);
    if (sols.empty()) continue;
    // rank by: predecessor constraint, purity, total l sum, lex
    auto pos_part = [](const IntVec& c) {
      IntVec l(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) l[k] = c[k] > 0 ? c[k] : Int(0);
      return l;
    };
    auto pred_ok = [&](const IntVec& c) {
      if (!pred_order) return true;
      Int l_pred = c[i - 1] > 0 ? c[i - 1] : Int(0);
      return l_pred < *pred_order;
    };
    auto pure = [](const IntVec& c) {
      return std::all_of(c.begin(), c.end(), [](const Int& x) { return x >= 0; });
    };
    std::vector<IntVec> pool;
    for (IntVec& c : sols)
      if (pred_ok(c)) pool.push_back(std::move(c));
    if (pool.empty()) pool = std::move(sols);
    bool any_pure = std::any_of(pool.begin(), pool.end(), pure);
    const IntVec* best = nullptr;
    Int best_sum = 0;
    for (const IntVec& c : pool) {
      if (any_pure && !pure(c)) continue;
      Int s = 0;
      for (const Int& l : pos_part(c)) s += l;
      if (!best || s < best_sum || (s == best_sum && c < *best)) {
        best = &c;
        best_sum = s;
      }
    }
    MinimalRelation rel;
    rel.order = n;
    rel.ncoef.assign(i, 0);
    rel.ell.assign(i, 0);
    for (std::size_t k = 0; k < i; ++k) {
      if ((*best)[k] >= 0)
        rel.ell[k] = (*best)[k];
      else
        rel.ncoef[k] = -(*best)[k];
    }
    return rel;
  }
  fail("relation-not-found", "no relation for generator " + std::to_string(i) +
                                 " within bound " + to_string(bound));
}

// ---------------------------------------------------------------------------
// The staircase semigroups  g_1 = 1/s_1,  g_2 = 1 + 1/(s_1 s_2),
// g_{i+1} = s_i g_i + 1/(s_1 ... s_{i+1}).
// ---------------------------------------------------------------------------

inline ValueSemigroup exzar_semigroup(const std::vector<Int>& s, std::size_t count) {
  require(count >= 1 && count <= s.size(), "index-out-of-range", "need s_1..s_{count}");
  ValueSemigroup S{OrderSpec::rational(), {}};
  Rat prod = s[0];  // s_1 ... s_k running product
  S.gens.push_back(ge_rat(Rat(1) / prod));
  if (count >= 2) {
    require(s.size() >= 2, "index-out-of-range", "need s_2");
    prod *= s[1];
    S.gens.push_back(ge_rat(1 + Rat(1) / prod));
  }
  for (std::size_t i = 2; i < count; ++i) {
    require(s.size() >= i + 1, "index-out-of-range", "need s_" + std::to_string(i + 1));
    prod *= s[i];
    Rat next = Rat(s[i - 1]) * S.gens.back().coeffs[0] + Rat(1) / prod;
    S.gens.push_back(ge_rat(next));
  }
  return S;
}

}  // namespace toric
