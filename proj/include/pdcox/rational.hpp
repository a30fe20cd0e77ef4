#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pdcox/errors.hpp"

namespace pdcox {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// floor division (gmp's fdiv), used by the normal-form reductions
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// round-to-nearest division, used by the Smith pivot reduction.
// After floor division the remainder r has the sign of b; bump q whenever
// |r| exceeds |b|/2 so that |a - q*b| <= |b|/2.
inline Int rdiv(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (b > 0) {
    if (2 * r > b) q += 1;
  } else {
    if (2 * r < b) q += 1;
  }
  return q;
}

inline Int numer(const Rat& q) { return Int(q.get_num()); }
inline Int denom(const Rat& q) { return Int(q.get_den()); }

// smallest positive integer k with k*v integral
inline Int denominator_lcm(const RatVec& v) {
  Int d = 1;
  for (const auto& q : v) d = lcm(d, denom(q));
  return d;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

// canonical "a/b" (plain "a" when b = 1)
inline std::string to_string(const Rat& q) {
  if (denom(q) == 1) return numer(q).get_str();
  return numer(q).get_str() + "/" + denom(q).get_str();
}

inline RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& a : v) out.emplace_back(a);
  return out;
}

// parse "a" or "a/b"; throws SchemaError on malformed input
inline Rat parse_rational(const std::string& s, int line = 0) {
  if (s.empty()) throw SchemaError("empty rational literal", line);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw SchemaError("zero denominator in '" + s + "'", line);
    Rat q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw SchemaError("malformed rational '" + s + "'", line);
  }
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// divide an integer vector by the gcd of its entries; zero vector stays zero
inline IntVec primitive(IntVec v) {
  Int g = 0;
  for (const auto& a : v) g = gcd(g, a);
  if (g > 1)
    for (auto& a : v) a /= g;
  return v;
}

// clear denominators and make primitive: the unique primitive integer vector
// on the ray spanned by v (v must be nonzero)
inline IntVec primitive_direction(const RatVec& v) {
  Int d = denominator_lcm(v);
  IntVec w;
  w.reserve(v.size());
  for (const auto& q : v) w.push_back(numer(q * Rat(d)));
  return primitive(w);
}

inline bool is_zero(const IntVec& v) {
  for (const auto& a : v)
    if (a != 0) return false;
  return true;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& a : v)
    if (a != 0) return false;
  return true;
}

}  // namespace pdcox
