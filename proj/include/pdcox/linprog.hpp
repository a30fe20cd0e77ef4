#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "pdcox/errors.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

enum class Rel { GE, GT, EQ };  // coeffs . x  (>= | > | =)  rhs

struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
  Rel rel = Rel::GE;
};

namespace lpdetail {

// Fourier-Motzkin blows up combinatorially; everything at paper scale has few
// free variables once equalities are substituted away, so the guard is tight.
constexpr size_t kMaxFreeVars = 12;
constexpr size_t kMaxConstraints = 200000;

struct Ineq {
  RatVec a;
  Rat b;
  bool strict;
};

// canonical scaling: multiply by the positive rational making (a, b) a
// primitive integer vector, so duplicates can be merged
inline void canonicalize(Ineq& q) {
  Int den = 1;
  for (const auto& c : q.a) den = lcm(den, denom(c));
  den = lcm(den, denom(q.b));
  Int g = 0;
  for (const auto& c : q.a) g = gcd(g, numer(c * Rat(den)));
  g = gcd(g, numer(q.b * Rat(den)));
  if (g == 0) g = 1;
  Rat scale(den, g);
  for (auto& c : q.a) c *= scale;
  q.b *= scale;
}

}  // namespace lpdetail

// Exact feasibility over Q. Equalities are eliminated by substitution first;
// the remaining inequalities go through Fourier-Motzkin. Throws
// DimensionGuardError when more than kMaxFreeVars variables survive
// substitution.
inline bool lp_feasible(std::vector<LinearConstraint> cons, size_t dim) {
  using lpdetail::Ineq;

  for (const auto& c : cons)
    if (c.coeffs.size() != dim) throw Error("lp_feasible: constraint arity mismatch");

  // --- substitute equalities ------------------------------------------------
  std::vector<bool> eliminated(dim, false);
  for (size_t e = 0; e < cons.size(); ++e) {
    if (cons[e].rel != Rel::EQ) continue;
    size_t piv = dim;
    for (size_t j = 0; j < dim; ++j)
      if (!eliminated[j] && cons[e].coeffs[j] != 0) {
        piv = j;
        break;
      }
    if (piv == dim) {
      if (cons[e].rhs != 0) return false;  // 0 = nonzero
      continue;                            // trivially true
    }
    Rat p = cons[e].coeffs[piv];
    for (size_t k = 0; k < cons.size(); ++k) {
      if (k == e || cons[k].coeffs[piv] == 0) continue;
      Rat f = cons[k].coeffs[piv] / p;
      for (size_t j = 0; j < dim; ++j) cons[k].coeffs[j] -= f * cons[e].coeffs[j];
      cons[k].rhs -= f * cons[e].rhs;
    }
    eliminated[piv] = true;
    cons[e].rel = Rel::GE;  // mark consumed: it is now 0 >= 0 against others
    cons[e].coeffs.assign(dim, Rat(0));
    cons[e].rhs = 0;
  }

  // --- collect inequalities over the free variables --------------------------
  std::vector<size_t> free_vars;
  for (size_t j = 0; j < dim; ++j)
    if (!eliminated[j]) free_vars.push_back(j);
  if (free_vars.size() > lpdetail::kMaxFreeVars)
    throw DimensionGuardError("lp_feasible: " + std::to_string(free_vars.size()) +
                              " free variables exceed the Fourier-Motzkin guard");

  std::vector<Ineq> sys;
  for (const auto& c : cons) {
    Ineq q;
    q.strict = (c.rel == Rel::GT);
    q.b = c.rhs;
    for (size_t j : free_vars) q.a.push_back(c.coeffs[j]);
    bool zero = is_zero(q.a);
    if (zero) {
      if (q.strict ? !(Rat(0) > q.b) : !(Rat(0) >= q.b)) return false;
      continue;
    }
    lpdetail::canonicalize(q);
    sys.push_back(q);
  }

  size_t nvars = free_vars.size();

  auto dedupe = [&](std::vector<Ineq>& v) {
    // keep, per coefficient vector, the tightest bound (largest rhs; strict
    // beats non-strict at equal rhs)
    std::map<std::vector<std::string>, Ineq> best;
    for (auto& q : v) {
      std::vector<std::string> key;
      key.reserve(q.a.size());
      for (const auto& c : q.a) key.push_back(to_string(c));
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), q);
      } else {
        Ineq& cur = it->second;
        if (q.b > cur.b || (q.b == cur.b && q.strict && !cur.strict)) cur = q;
      }
    }
    v.clear();
    for (auto& [k, q] : best) v.push_back(q);
  };

  dedupe(sys);

  // --- Fourier-Motzkin --------------------------------------------------------
  for (size_t round = 0; round < nvars; ++round) {
    if (sys.empty()) break;
    // eliminate the variable minimizing the pos*neg product
    size_t var = 0;
    size_t bestcost = SIZE_MAX;
    const size_t width = sys[0].a.size();
    for (size_t j = 0; j < width; ++j) {
      size_t pos = 0, neg = 0;
      for (const auto& q : sys) {
        if (q.a[j] > 0) ++pos;
        if (q.a[j] < 0) ++neg;
      }
      size_t cost = pos * neg + pos + neg;
      if (cost < bestcost) {
        bestcost = cost;
        var = j;
      }
    }

    std::vector<Ineq> pos, neg, rest;
    for (auto& q : sys) {
      if (q.a[var] > 0)
        pos.push_back(q);
      else if (q.a[var] < 0)
        neg.push_back(q);
      else
        rest.push_back(q);
    }
    std::vector<Ineq> next = rest;
    for (auto& q : next) q.a.erase(q.a.begin() + static_cast<long>(var));
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // p: a.x >= b with a[var] > 0  ->  x_var >= (b - rest)/a[var]
        // n: a.x >= b with a[var] < 0  ->  x_var <= ...
        // combine: n.a[var] * p  -  p.a[var] * n  (coefficient on var cancels)
        Ineq q;
        q.strict = p.strict || n.strict;
        Rat cp = -n.a[var];  // > 0
        Rat cn = p.a[var];   // > 0
        q.a.resize(p.a.size());
        for (size_t j = 0; j < p.a.size(); ++j) q.a[j] = cp * p.a[j] + cn * n.a[j];
        q.b = cp * p.b + cn * n.b;
        q.a.erase(q.a.begin() + static_cast<long>(var));
        if (is_zero(q.a)) {
          if (q.strict ? !(Rat(0) > q.b) : !(Rat(0) >= q.b)) return false;
          continue;
        }
        lpdetail::canonicalize(q);
        next.push_back(q);
        if (next.size() > lpdetail::kMaxConstraints)
          throw SizeGuardError("lp_feasible: constraint blowup in Fourier-Motzkin");
      }
    dedupe(next);
    sys = std::move(next);
  }

  for (const auto& q : sys)
    if (q.strict ? !(Rat(0) > q.b) : !(Rat(0) >= q.b)) return false;
  return true;
}

}  // namespace pdcox
