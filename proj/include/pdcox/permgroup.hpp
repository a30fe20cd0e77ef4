#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pdcox/abelian.hpp"
#include "pdcox/hermite.hpp"

namespace pdcox {

using Perm = std::vector<long>;

inline Perm identity_perm(size_t n) {
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[i] = static_cast<long>(i);
  return p;
}

// apply a first, then b
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<size_t>(a[i])];
  return out;
}

inline Perm inverse_perm(const Perm& a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[static_cast<size_t>(a[i])] = static_cast<long>(i);
  return out;
}

inline Perm perm_commutator(const Perm& a, const Perm& b) {
  return compose(compose(inverse_perm(a), inverse_perm(b)), compose(a, b));
}

inline bool is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<long>(i)) return false;
  return true;
}

inline Int perm_order(const Perm& a) {
  Perm p = a;
  Int n = 1;
  while (!is_identity(p)) {
    p = compose(p, a);
    ++n;
  }
  return n;
}

// finite permutation group materialized from generators by breadth-first
// closure; element list order is deterministic
class PermGroup {
 public:
  static PermGroup generated_by(size_t degree, std::vector<Perm> gens,
                                size_t max_elements = 200000) {
    PermGroup g;
    g.degree_ = degree;
    for (auto& p : gens) {
      if (p.size() != degree) throw Error("generator degree mismatch");
      if (!is_identity(p)) g.gens_.push_back(p);
    }
    Perm id = identity_perm(degree);
    g.elements_.push_back(id);
    g.index_.insert(id);
    for (size_t head = 0; head < g.elements_.size(); ++head) {
      Perm cur = g.elements_[head];
      for (const auto& gen : g.gens_) {
        Perm nxt = compose(cur, gen);
        if (g.index_.insert(nxt).second) {
          g.elements_.push_back(nxt);
          if (g.elements_.size() > max_elements)
            throw SizeGuardError("permutation group larger than " +
                                 std::to_string(max_elements) + " elements");
        }
      }
    }
    return g;
  }

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  Int order() const { return Int(elements_.size()); }
  bool trivial() const { return elements_.size() == 1; }
  bool contains(const Perm& p) const { return index_.count(p) > 0; }

  bool is_subgroup_of(const PermGroup& g) const {
    for (const auto& x : gens_)
      if (!g.contains(x)) return false;
    return true;
  }

  bool is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
    return true;
  }

 private:
  size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::set<Perm> index_;
};

// smallest subgroup containing the pairwise commutators of `gens` and closed
// under conjugation by them; only the subgroup is materialized, so this is
// safe even when the enclosing group is far larger than max_elements
inline PermGroup derived_subgroup_of(size_t degree, const std::vector<Perm>& gens,
                                     size_t max_elements = 200000) {
  std::vector<Perm> seed;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = perm_commutator(gens[i], gens[j]);
      if (!is_identity(c)) seed.push_back(c);
    }
  for (;;) {
    PermGroup h = PermGroup::generated_by(degree, seed, max_elements);
    std::vector<Perm> added;
    for (const auto& gen : gens) {
      Perm gi = inverse_perm(gen);
      for (const auto& t : seed) {
        Perm c = compose(compose(gi, t), gen);
        if (!h.contains(c)) added.push_back(c);
      }
    }
    if (added.empty()) return h;
    for (auto& c : added) seed.push_back(std::move(c));
  }
}

inline PermGroup derived_subgroup(const PermGroup& g, size_t max_elements = 200000) {
  return derived_subgroup_of(g.degree(), g.generators(), max_elements);
}

// reference implementation on all element pairs, for cross checking
inline PermGroup derived_subgroup_elementwise(const PermGroup& g, size_t max_elements = 200000) {
  std::set<Perm> comms;
  for (const auto& x : g.elements())
    for (const auto& y : g.elements()) {
      Perm c = perm_commutator(x, y);
      if (!is_identity(c)) comms.insert(c);
    }
  return PermGroup::generated_by(g.degree(), {comms.begin(), comms.end()}, max_elements);
}

inline std::vector<PermGroup> derived_series(const PermGroup& g, size_t max_elements = 200000) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = derived_subgroup(series.back(), max_elements);
    if (next.order() == series.back().order()) return series;
    series.push_back(next);
    if (series.back().trivial()) return series;
  }
}

inline bool is_perfect(const PermGroup& g) {
  return derived_subgroup(g).order() == g.order();
}

inline bool is_solvable(const PermGroup& g, size_t max_elements = 200000) {
  return derived_series(g, max_elements).back().trivial();
}

// solvability from generators alone: a group is solvable exactly when its
// derived subgroup is, and the derived subgroup is usually much smaller, so
// the group itself is never materialized
inline bool is_solvable_of(size_t degree, const std::vector<Perm>& gens,
                           size_t max_elements = 200000) {
  PermGroup n = derived_subgroup_of(degree, gens, max_elements);
  bool perfect = true;
  for (const auto& g : gens)
    if (!n.contains(g)) {
      perfect = false;
      break;
    }
  if (perfect) return n.trivial();
  return is_solvable(n, max_elements);
}

// invariant factors of an abelian group from the relation lattice of its
// generators: a spanning tree of the Cayley graph assigns each element an
// exponent vector, and the off-tree edges span the full relation lattice
inline FGAbelianGroup abelian_invariants(const PermGroup& g) {
  if (!g.is_abelian()) throw NotAbelianError("group is not abelian");
  size_t k = g.generators().size();
  if (k == 0) return FGAbelianGroup{0, {}};
  std::map<Perm, IntVec> vec;
  std::vector<Perm> queue;
  Perm id = identity_perm(g.degree());
  vec[id] = IntVec(k, Int(0));
  queue.push_back(id);
  std::vector<IntVec> collisions;
  for (size_t head = 0; head < queue.size(); ++head) {
    Perm cur = queue[head];
    IntVec v = vec[cur];
    for (size_t i = 0; i < k; ++i) {
      Perm nxt = compose(cur, g.generators()[i]);
      IntVec w = v;
      w[i] += 1;
      auto it = vec.find(nxt);
      if (it == vec.end()) {
        vec[nxt] = w;
        queue.push_back(nxt);
      } else {
        IntVec c(k);
        bool zero = true;
        for (size_t t = 0; t < k; ++t) {
          c[t] = w[t] - it->second[t];
          if (c[t] != 0) zero = false;
        }
        if (!zero) collisions.push_back(c);
      }
    }
  }
  IntMatrix rel(k, collisions.size());
  for (size_t j = 0; j < collisions.size(); ++j)
    for (size_t i = 0; i < k; ++i) rel(i, j) = collisions[j][i];
  return cokernel(rel);
}

namespace pgdetail {

// invariant factors of a finite abelian group from its element order
// statistics: the number of x with x^(p^j) = 1 is p^(sum_i min(part_i, j)),
// so the count ratios recover the p-part partition. `scale` divides the raw
// counts (1 for a plain group, |h1| when the orders describe cosets of h1).
inline FGAbelianGroup invariants_from_orders(const std::vector<Int>& orders, Int n,
                                             const Int& scale) {
  std::map<Int, std::vector<int>> ppart;  // prime -> partition, descending
  Int m = n;
  for (Int p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    std::vector<Int> counts{1};
    for (int j = 1;; ++j) {
      Int pj = 1;
      for (int t = 0; t < j; ++t) pj *= p;
      Int cnt = 0;
      for (const auto& o : orders)
        if (pj % o == 0) ++cnt;
      cnt /= scale;
      counts.push_back(cnt);
      if (cnt == counts[static_cast<size_t>(j - 1)]) break;
    }
    std::vector<int> part;
    for (size_t j = 1; j < counts.size(); ++j) {
      Int ratio = counts[j] / counts[j - 1];
      int mult = 0;  // number of cyclic p factors with exponent >= j
      while (ratio > 1) {
        ratio /= p;
        ++mult;
      }
      for (int t = 0; t < mult; ++t) {
        if (part.size() <= static_cast<size_t>(t)) part.push_back(0);
        part[static_cast<size_t>(t)] += 1;
      }
    }
    if (!part.empty()) ppart[p] = part;
  }
  size_t width = 0;
  for (const auto& [p, part] : ppart) width = std::max(width, part.size());
  IntVec factors(width, Int(1));
  for (const auto& [p, part] : ppart)
    for (size_t t = 0; t < part.size(); ++t) {
      Int pe = 1;
      for (int j = 0; j < part[t]; ++j) pe *= p;
      factors[t] *= pe;
    }
  // factors run largest first; invariant factor lists ascend
  std::reverse(factors.begin(), factors.end());
  FGAbelianGroup out;
  out.free_rank = 0;
  out.invariant_factors = factors;
  return out;
}

}  // namespace pgdetail

// same invariants read off from order statistics, for cross checking
inline FGAbelianGroup abelian_invariants_by_counting(const PermGroup& g) {
  if (!g.is_abelian()) throw NotAbelianError("group is not abelian");
  std::vector<Int> orders;
  for (const auto& x : g.elements()) orders.push_back(perm_order(x));
  return pgdetail::invariants_from_orders(orders, g.order(), 1);
}

// invariant factors of the abelian quotient h0/h1 (h1 normal in h0 with
// abelian quotient assumed), via order statistics of the cosets
inline FGAbelianGroup quotient_invariants(const PermGroup& h0, const PermGroup& h1) {
  std::vector<Int> orders;
  for (const auto& x : h0.elements()) {
    Perm p = x;
    Int o = 1;
    while (!h1.contains(p)) {
      p = compose(p, x);
      ++o;
    }
    orders.push_back(o);
  }
  return pgdetail::invariants_from_orders(orders, h0.order() / h1.order(), h1.order());
}

// Invariant factors of G/N for a group G acting regularly, given only the
// generators of G and a materialized normal subgroup N with abelian quotient.
// In a regular action the right coset Nx occupies exactly the image of N's
// point set under x, and distinct cosets occupy disjoint point sets, so the
// cosets can be walked without ever listing the elements of G.  As in
// abelian_invariants, the collision vectors of the walk span the relation
// lattice of the generator images.
inline FGAbelianGroup regular_quotient_abelianization(size_t degree,
                                                      const std::vector<Perm>& gens,
                                                      const PermGroup& n) {
  std::vector<long> base;
  base.reserve(n.elements().size());
  for (const auto& p : n.elements()) base.push_back(p[0]);
  std::sort(base.begin(), base.end());
  if (std::adjacent_find(base.begin(), base.end()) != base.end())
    throw Error("coset walk needs a regular action");
  size_t k = gens.size();
  std::vector<std::vector<long>> sets{base};
  std::vector<IntVec> exps{IntVec(k, Int(0))};
  std::map<long, size_t> at;  // smallest point of a coset -> coset id
  at[base.front()] = 0;
  std::vector<IntVec> collisions;
  for (size_t head = 0; head < sets.size(); ++head)
    for (size_t i = 0; i < k; ++i) {
      std::vector<long> img(sets[head].size());
      for (size_t t = 0; t < img.size(); ++t)
        img[t] = gens[i][static_cast<size_t>(sets[head][t])];
      std::sort(img.begin(), img.end());
      IntVec w = exps[head];
      w[i] += 1;
      auto it = at.find(img.front());
      if (it == at.end()) {
        at[img.front()] = sets.size();
        sets.push_back(std::move(img));
        exps.push_back(std::move(w));
      } else {
        if (sets[it->second] != img) throw Error("coset walk needs a regular action");
        IntVec c(k);
        bool zero = true;
        for (size_t t = 0; t < k; ++t) {
          c[t] = w[t] - exps[it->second][t];
          if (c[t] != 0) zero = false;
        }
        if (!zero) collisions.push_back(std::move(c));
      }
    }
  if (Int(sets.size()) * n.order() != Int(degree))
    throw Error("coset walk needs a regular action");
  IntMatrix rel(k, collisions.size());
  for (size_t j = 0; j < collisions.size(); ++j)
    for (size_t i = 0; i < k; ++i) rel(i, j) = collisions[j][i];
  FGAbelianGroup out = cokernel(rel);
  if (out.free_rank != 0 || out.torsion_order() != Int(sets.size()))
    throw Error("coset walk does not match the quotient order");
  return out;
}

struct JordanDecomposition {
  FGAbelianGroup normal_part;  // structure of the designated abelian normal subgroup
  long rank = 0;               // number of invariant factors
  Int index = 1;               // index in the whole group
};

// the designated subgroup must be abelian and normal; both are checked
inline JordanDecomposition jordan_decomposition(const PermGroup& g,
                                                const std::vector<Perm>& abelian_gens,
                                                size_t max_elements = 200000) {
  PermGroup a = PermGroup::generated_by(g.degree(), abelian_gens, max_elements);
  if (!a.is_abelian()) throw NotAbelianError("designated subgroup is not abelian");
  for (const auto& gen : g.generators()) {
    Perm gi = inverse_perm(gen);
    for (const auto& x : a.generators())
      if (!a.contains(compose(compose(gi, x), gen)))
        throw NotNormalError("designated subgroup is not normal");
  }
  JordanDecomposition out;
  out.normal_part = abelian_invariants(a);
  out.rank = static_cast<long>(out.normal_part.invariant_factors.size());
  out.index = g.order() / a.order();
  return out;
}

}  // namespace pdcox
