#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "pdcox/cone.hpp"
#include "pdcox/smith.hpp"

namespace pdcox {

namespace ddetail {

// cone represented as span(lin) + cone(rays) during double description
struct DDState {
  std::vector<IntVec> lin;
  std::vector<IntVec> rays;
};

inline Rat rdot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rat(s);
}

// drop generators that already lie in the cone spanned by the others
inline void reduce_rays(DDState& st, size_t ambient) {
  for (size_t i = 0; i < st.rays.size();) {
    std::vector<LinearConstraint> cons;
    size_t nvar = st.lin.size() * 2 + st.rays.size() - 1;
    for (size_t k = 0; k < ambient; ++k) {
      LinearConstraint c;
      c.rel = Rel::EQ;
      c.rhs = Rat(st.rays[i][k]);
      for (const auto& l : st.lin) {
        c.coeffs.emplace_back(l[k]);
        c.coeffs.emplace_back(-l[k]);
      }
      for (size_t j = 0; j < st.rays.size(); ++j)
        if (j != i) c.coeffs.emplace_back(st.rays[j][k]);
      cons.push_back(c);
    }
    for (size_t v = st.lin.size() * 2; v < nvar; ++v) {
      LinearConstraint c;
      c.rel = Rel::GE;
      c.rhs = 0;
      c.coeffs.assign(nvar, Rat(0));
      c.coeffs[v] = 1;
      cons.push_back(c);
    }
    if (lp_feasible(cons, nvar))
      st.rays.erase(st.rays.begin() + static_cast<long>(i));
    else
      ++i;
  }
}

// intersect the state with the halfspace {x : <a, x> >= 0}
inline void dd_insert(DDState& st, const IntVec& a, size_t ambient) {
  // first use a lineality vector not orthogonal to a, if any
  size_t l0 = st.lin.size();
  for (size_t i = 0; i < st.lin.size(); ++i)
    if (dot(a, st.lin[i]) != 0) {
      l0 = i;
      break;
    }
  if (l0 < st.lin.size()) {
    IntVec pivot = st.lin[l0];
    Int pa = dot(a, pivot);
    if (pa < 0) {
      for (auto& x : pivot) x = -x;
      pa = -pa;
    }
    std::vector<IntVec> newlin;
    for (size_t i = 0; i < st.lin.size(); ++i) {
      if (i == l0) continue;
      Int ca = dot(a, st.lin[i]);
      IntVec w(ambient);
      for (size_t k = 0; k < ambient; ++k) w[k] = pa * st.lin[i][k] - ca * pivot[k];
      if (!is_zero(w)) newlin.push_back(primitive(w));
    }
    for (auto& r : st.rays) {
      Int ca = dot(a, r);
      IntVec w(ambient);
      for (size_t k = 0; k < ambient; ++k) w[k] = pa * r[k] - ca * pivot[k];
      r = is_zero(w) ? w : primitive(w);
    }
    st.rays.erase(std::remove_if(st.rays.begin(), st.rays.end(),
                                 [](const IntVec& v) { return is_zero(v); }),
                  st.rays.end());
    st.lin = newlin;
    st.rays.push_back(primitive(pivot));
    std::sort(st.rays.begin(), st.rays.end());
    st.rays.erase(std::unique(st.rays.begin(), st.rays.end()), st.rays.end());
    reduce_rays(st, ambient);
    return;
  }

  std::vector<IntVec> keep, pos, neg;
  for (const auto& r : st.rays) {
    Int v = dot(a, r);
    if (v > 0)
      pos.push_back(r);
    else if (v < 0)
      neg.push_back(r);
    else
      keep.push_back(r);
  }
  if (neg.empty()) return;  // nothing cut off
  std::vector<IntVec> next = keep;
  for (const auto& p : pos) next.push_back(p);
  for (const auto& p : pos)
    for (const auto& n : neg) {
      Int cp = dot(a, p), cn = dot(a, n);
      IntVec w(ambient);
      for (size_t k = 0; k < ambient; ++k) w[k] = cp * n[k] - cn * p[k];
      if (!is_zero(w)) next.push_back(primitive(w));
    }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  st.rays = next;
  reduce_rays(st, ambient);
}

}  // namespace ddetail

// minimal generators (lineality basis + extreme rays) of the dual cone
// {u : <rho, u> >= 0 for all rays rho of c}
struct DualDescription {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

inline DualDescription dual_description(const Cone& c) {
  size_t n = c.ambient_rank();
  ddetail::DDState st;
  for (size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    st.lin.push_back(e);
  }
  for (const auto& r : c.rays()) ddetail::dd_insert(st, r, n);
  std::sort(st.rays.begin(), st.rays.end());
  std::sort(st.lin.begin(), st.lin.end());
  return {st.lin, st.rays};
}

// face of a cone: the subset of rays orthogonal to some supporting functional
struct Face {
  Cone cone;
  std::vector<size_t> ray_indices;  // sorted, into the parent's ray list

  bool operator<(const Face& o) const {
    if (ray_indices.size() != o.ray_indices.size())
      return ray_indices.size() < o.ray_indices.size();
    return ray_indices < o.ray_indices;
  }
  bool operator==(const Face& o) const { return ray_indices == o.ray_indices; }
};

// all faces (including the zero face and the cone itself), enumerated by
// double description: facet normals first, then faces as intersections of
// facet subsets
inline std::vector<Face> faces(const Cone& c) {
  if (c.ambient_rank() > 8)
    throw DimensionGuardError("face enumeration limited to ambient rank <= 8");
  DualDescription dd = dual_description(c);
  if (dd.rays.size() > 20)
    throw SizeGuardError("face enumeration: too many facets");

  const auto& rays = c.rays();
  std::set<std::vector<size_t>> seen;
  std::vector<Face> out;
  size_t m = dd.rays.size();
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < rays.size(); ++i) {
      bool on = true;
      for (size_t j = 0; j < m && on; ++j)
        if (mask & (size_t(1) << j))
          if (dot(dd.rays[j], rays[i]) != 0) on = false;
      if (on) idx.push_back(i);
    }
    if (!seen.insert(idx).second) continue;
    Face f;
    f.ray_indices = idx;
    std::vector<IntVec> sub;
    for (size_t i : idx) sub.push_back(rays[i]);
    f.cone = Cone::from_rays(c.ambient_rank(), sub);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// rays form part of a Z-basis: linearly independent and the generated
// sublattice is saturated (all Smith invariant factors 1)
inline bool is_smooth(const std::vector<IntVec>& rays) {
  if (rays.empty()) return true;  // the zero face
  SmithForm f = snf(IntMatrix::from_rows(rays));
  size_t n = std::min(f.s.rows(), f.s.cols());
  size_t nonzero = 0;
  for (size_t i = 0; i < n; ++i)
    if (f.s(i, i) != 0) {
      if (f.s(i, i) != 1) return false;
      ++nonzero;
    }
  return nonzero == rays.size();
}

inline bool is_smooth(const Face& f) { return is_smooth(f.cone.rays()); }

}  // namespace pdcox
