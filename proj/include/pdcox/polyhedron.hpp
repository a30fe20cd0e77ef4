#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pdcox/cone.hpp"
#include "pdcox/faces.hpp"

namespace pdcox {

// polyhedron conv(vertices) + recession cone, with the vertex list reduced to
// the extreme points and lex-sorted (canonical, so == is meaningful)
class SigmaPolyhedron {
 public:
  SigmaPolyhedron() = default;

  SigmaPolyhedron(std::vector<RatVec> verts, Cone rec) : rec_(std::move(rec)) {
    if (verts.empty()) throw InputError("polyhedron needs at least one vertex");
    for (const auto& v : verts)
      if (v.size() != rec_.ambient_rank())
        throw InputError("polyhedron vertex has wrong ambient rank");
    vertices_ = reduce_to_extreme(std::move(verts), rec_);
    std::sort(vertices_.begin(), vertices_.end());
  }

  const std::vector<RatVec>& vertices() const { return vertices_; }
  const Cone& recession_cone() const { return rec_; }
  size_t ambient_rank() const { return rec_.ambient_rank(); }

  bool operator==(const SigmaPolyhedron& o) const {
    return vertices_ == o.vertices_ && rec_ == o.rec_;
  }

  bool contains(const RatVec& x) const {
    std::vector<LinearConstraint> cons = member_system(x);
    return lp_feasible(cons, vertices_.size() + rec_.rays().size());
  }

  // all vertices and recession rays inside the cone
  bool subset_of(const Cone& c) const {
    for (const auto& v : vertices_)
      if (!c.contains(v)) return false;
    for (const auto& r : rec_.rays())
      if (!c.contains(r)) return false;
    return true;
  }

  // translate by a rational vector
  SigmaPolyhedron translated(const RatVec& t) const {
    std::vector<RatVec> verts = vertices_;
    for (auto& v : verts)
      for (size_t k = 0; k < v.size(); ++k) v[k] += t[k];
    return SigmaPolyhedron(verts, rec_);
  }

  // dilate by a positive rational (recession cone unchanged)
  SigmaPolyhedron scaled(const Rat& s) const {
    std::vector<RatVec> verts = vertices_;
    for (auto& v : verts)
      for (auto& x : v) x *= s;
    return SigmaPolyhedron(verts, rec_);
  }

  // lambda/nu encoding of "x in P" used by the intersection tests as well
  std::vector<LinearConstraint> member_system(const RatVec& x) const {
    size_t nv = vertices_.size(), nr = rec_.rays().size();
    std::vector<LinearConstraint> cons;
    for (size_t k = 0; k < ambient_rank(); ++k) {
      LinearConstraint c;
      c.rel = Rel::EQ;
      c.rhs = x[k];
      for (const auto& v : vertices_) c.coeffs.push_back(v[k]);
      for (const auto& r : rec_.rays()) c.coeffs.emplace_back(r[k]);
      cons.push_back(c);
    }
    LinearConstraint sum;
    sum.rel = Rel::EQ;
    sum.rhs = 1;
    sum.coeffs.assign(nv + nr, Rat(0));
    for (size_t i = 0; i < nv; ++i) sum.coeffs[i] = 1;
    cons.push_back(sum);
    for (size_t i = 0; i < nv + nr; ++i) {
      LinearConstraint c;
      c.rel = Rel::GE;
      c.rhs = 0;
      c.coeffs.assign(nv + nr, Rat(0));
      c.coeffs[i] = 1;
      cons.push_back(c);
    }
    return cons;
  }

 private:
  static std::vector<RatVec> reduce_to_extreme(std::vector<RatVec> verts, const Cone& rec) {
    // drop duplicates first
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    // v is redundant iff v in conv(others) + rec
    for (size_t i = 0; i < verts.size() && verts.size() > 1;) {
      std::vector<RatVec> others;
      for (size_t j = 0; j < verts.size(); ++j)
        if (j != i) others.push_back(verts[j]);
      SigmaPolyhedron tmp;
      tmp.rec_ = rec;
      tmp.vertices_ = others;  // not reduced, membership test is still exact
      if (tmp.contains(verts[i]))
        verts.erase(verts.begin() + static_cast<long>(i));
      else
        ++i;
    }
    return verts;
  }

  std::vector<RatVec> vertices_;
  Cone rec_;
};

// support value min_{x in P} <x, u>; nullopt when unbounded below
inline std::optional<Rat> support_eval(const SigmaPolyhedron& p, const RatVec& u) {
  for (const auto& r : p.recession_cone().rays())
    if (dot(r, u) < 0) return std::nullopt;
  std::optional<Rat> best;
  for (const auto& v : p.vertices()) {
    Rat s = dot(v, u);
    if (!best || s < *best) best = s;
  }
  return best;
}

inline SigmaPolyhedron minkowski_sum(const SigmaPolyhedron& p, const SigmaPolyhedron& q) {
  if (p.ambient_rank() != q.ambient_rank())
    throw Error("minkowski_sum: ambient rank mismatch");
  std::vector<IntVec> recrays = p.recession_cone().rays();
  for (const auto& r : q.recession_cone().rays()) recrays.push_back(r);
  Cone rec = Cone::from_rays(p.ambient_rank(), recrays);
  std::vector<RatVec> verts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVec s(a.size());
      for (size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
      verts.push_back(s);
    }
  return SigmaPolyhedron(verts, rec);
}

// smallest positive integer k with k*v in the lattice
inline Int vertex_denominator(const RatVec& v) { return denominator_lcm(v); }

// max over the vertices; 1 for a lattice polyhedron
inline Int polyhedron_mu(const SigmaPolyhedron& p) {
  Int m = 1;
  for (const auto& v : p.vertices()) m = std::max(m, vertex_denominator(v));
  return m;
}

// nonempty intersection of a polyhedron with a cone (typically a face)
inline bool intersects(const SigmaPolyhedron& p, const Cone& f) {
  size_t nv = p.vertices().size(), nr = p.recession_cone().rays().size(),
         nf = f.rays().size();
  size_t amb = p.ambient_rank();
  // sum lambda_i v_i + sum nu_j rho_j = sum kappa_k r_k, lambda in simplex
  std::vector<LinearConstraint> cons;
  size_t nvar = nv + nr + nf;
  for (size_t k = 0; k < amb; ++k) {
    LinearConstraint c;
    c.rel = Rel::EQ;
    c.rhs = 0;
    for (const auto& v : p.vertices()) c.coeffs.push_back(v[k]);
    for (const auto& r : p.recession_cone().rays()) c.coeffs.emplace_back(r[k]);
    for (const auto& r : f.rays()) c.coeffs.emplace_back(-r[k]);
    cons.push_back(c);
  }
  LinearConstraint sum;
  sum.rel = Rel::EQ;
  sum.rhs = 1;
  sum.coeffs.assign(nvar, Rat(0));
  for (size_t i = 0; i < nv; ++i) sum.coeffs[i] = 1;
  cons.push_back(sum);
  for (size_t i = 0; i < nvar; ++i) {
    LinearConstraint c;
    c.rel = Rel::GE;
    c.rhs = 0;
    c.coeffs.assign(nvar, Rat(0));
    c.coeffs[i] = 1;
    cons.push_back(c);
  }
  return lp_feasible(cons, nvar);
}

// nonzero intersection of a single ray with a polyhedron: some positive
// multiple of rho lies in P
inline bool ray_meets(const SigmaPolyhedron& p, const IntVec& rho) {
  size_t nv = p.vertices().size(), nr = p.recession_cone().rays().size();
  size_t amb = p.ambient_rank();
  size_t nvar = nv + nr + 1;  // lambda, nu, t with t*rho in P, t > 0
  std::vector<LinearConstraint> cons;
  for (size_t k = 0; k < amb; ++k) {
    LinearConstraint c;
    c.rel = Rel::EQ;
    c.rhs = 0;
    for (const auto& v : p.vertices()) c.coeffs.push_back(v[k]);
    for (const auto& r : p.recession_cone().rays()) c.coeffs.emplace_back(r[k]);
    c.coeffs.emplace_back(-rho[k]);
    cons.push_back(c);
  }
  LinearConstraint sum;
  sum.rel = Rel::EQ;
  sum.rhs = 1;
  sum.coeffs.assign(nvar, Rat(0));
  for (size_t i = 0; i < nv; ++i) sum.coeffs[i] = 1;
  cons.push_back(sum);
  for (size_t i = 0; i < nv + nr; ++i) {
    LinearConstraint c;
    c.rel = Rel::GE;
    c.rhs = 0;
    c.coeffs.assign(nvar, Rat(0));
    c.coeffs[i] = 1;
    cons.push_back(c);
  }
  LinearConstraint strict;
  strict.rel = Rel::GT;
  strict.rhs = 0;
  strict.coeffs.assign(nvar, Rat(0));
  strict.coeffs[nvar - 1] = 1;
  cons.push_back(strict);
  return lp_feasible(cons, nvar);
}

// cone over P x {1}: rays (mu(v) v, mu(v)) for vertices and (rho, 0) for
// recession rays, stored primitively
inline Cone cone_over(const SigmaPolyhedron& p) {
  size_t amb = p.ambient_rank();
  std::vector<IntVec> rays;
  for (const auto& v : p.vertices()) {
    Int mu = vertex_denominator(v);
    IntVec w(amb + 1);
    for (size_t k = 0; k < amb; ++k) w[k] = numer(v[k] * Rat(mu));
    w[amb] = mu;
    rays.push_back(primitive(w));
  }
  for (const auto& r : p.recession_cone().rays()) {
    IntVec w(amb + 1, Int(0));
    for (size_t k = 0; k < amb; ++k) w[k] = r[k];
    rays.push_back(w);
  }
  return Cone::from_rays(amb + 1, rays);
}

}  // namespace pdcox
