#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail("parse-error", "not an integer: " + s);
  }
}

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail("parse-error", "not a rational: " + s);
  }
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// floor(a / b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& a) {
  return floor_div(a.get_num(), a.get_den());
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int num = pow_int(base.get_num(), k), den = pow_int(base.get_den(), k);
  require(!inv || num != 0, "division-by-zero", "0 raised to negative power");
  Rat r = inv ? Rat(den, num) : Rat(num, den);
  r.canonicalize();
  return r;
}

inline unsigned long to_ulong(const Int& a) {
  require(a >= 0 && a.fits_ulong_p(), "overflow", "integer does not fit machine word");
  return a.get_ui();
}

inline long to_long(const Int& a) {
  require(a.fits_slong_p(), "overflow", "integer does not fit machine word");
  return a.get_si();
}

}  // namespace toric
