#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace toric {

// Sparse multivariate polynomial over Q, exponent vector -> coefficient.
// Zero coefficients are never stored.
using Poly = std::map<IntVec, Rat>;

inline void poly_add_term(Poly& p, const IntVec& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline Poly poly_const(std::size_t nvars, const Rat& c) {
  Poly p;
  poly_add_term(p, IntVec(nvars, 0), c);
  return p;
}

inline Poly poly_var(std::size_t nvars, std::size_t i) {
  IntVec e(nvars, 0);
  e[i] = 1;
  Poly p;
  p[e] = 1;
  return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) poly_add_term(r, e, c);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) poly_add_term(r, e, -c);
  return r;
}

inline Poly poly_scale(const Rat& c, const Poly& a) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [e, k] : a) r[e] = c * k;
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      IntVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      poly_add_term(r, e, ca * cb);
    }
  return r;
}

inline Poly poly_pow(const Poly& a, unsigned long k) {
  std::size_t nvars = a.empty() ? 0 : a.begin()->first.size();
  Poly r = poly_const(nvars, 1);
  Poly base = a;
  while (k) {
    if (k & 1) r = poly_mul(r, base);
    k >>= 1;
    if (k) base = poly_mul(base, base);
  }
  return r;
}

// Substitute variable i by q (a polynomial in the same variable set).
inline Poly poly_subst(const Poly& p, std::size_t i, const Poly& q) {
  Poly r;
  for (const auto& [e, c] : p) {
    unsigned long k = to_ulong(e[i]);
    IntVec rest = e;
    rest[i] = 0;
    Poly term;
    term[rest] = c;
    if (k) term = poly_mul(term, poly_pow(q, k));
    for (const auto& [e2, c2] : term) poly_add_term(r, e2, c2);
  }
  return r;
}

// Total degree (max of exponent sums); -1 for the zero polynomial.
inline long poly_degree(const Poly& p) {
  long d = -1;
  for (const auto& [e, c] : p) {
    Int s = 0;
    for (const Int& x : e) s += x;
    d = std::max(d, to_long(s));
  }
  return d;
}

}  // namespace toric
