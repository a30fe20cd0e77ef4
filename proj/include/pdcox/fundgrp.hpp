#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdcox/pdiv.hpp"
#include "pdcox/permgroup.hpp"
#include "pdcox/todd_coxeter.hpp"

namespace pdcox {

// rays of the smooth faces of the tail cone that are disjoint from the
// degree polyhedron span the sublattice of torus directions that die in the
// fundamental group of the regular locus; rows of the returned basis are in
// hermite form
inline std::vector<IntVec> torus_relation_lattice(const Cone& sigma, const SigmaPolyhedron& deg) {
  std::vector<IntVec> gens;
  for (const Face& f : faces(sigma)) {
    if (f.ray_indices.empty()) continue;
    if (!is_smooth(f)) continue;
    if (intersects(deg, f.cone)) continue;
    for (const auto& rho : f.cone.rays()) gens.push_back(rho);
  }
  return lattice_basis(gens);
}

// same for one marked point, working in the cone over its coefficient inside
// N x Z: a smooth face qualifies when its height-zero part (a face of the
// tail cone) misses the degree polyhedron
inline std::vector<IntVec> mark_relation_lattice(const SigmaPolyhedron& coeff,
                                                 const SigmaPolyhedron& deg) {
  size_t r = coeff.ambient_rank();
  Cone delta = cone_over(coeff);
  std::vector<IntVec> gens;
  for (const Face& f : faces(delta)) {
    if (f.ray_indices.empty()) continue;
    if (!is_smooth(f)) continue;
    std::vector<IntVec> tail_rays;
    for (const auto& rho : f.cone.rays())
      if (rho[r] == 0) tail_rays.push_back(IntVec(rho.begin(), rho.begin() + static_cast<long>(r)));
    if (!tail_rays.empty()) {
      Cone tail_face = Cone::from_rays(r, tail_rays);
      if (intersects(deg, tail_face)) continue;
    }
    for (const auto& rho : f.cone.rays()) gens.push_back(rho);
  }
  std::vector<IntVec> basis = lattice_basis(gens);
  // normalize each row to nonnegative height so the loop exponent at the
  // mark comes out nonnegative (replacing a relator by its inverse)
  for (auto& row : basis)
    if (row[r] < 0)
      for (auto& x : row) x = -x;
  return basis;
}

// presentation of the fundamental group of the regular locus: one central
// generator per torus direction, one loop generator per marked point
inline Presentation pi1_presentation(const PolyhedralDivisor& d) {
  d.require_proper();
  size_t r = d.rank();
  size_t s = d.marks().size();
  SigmaPolyhedron deg = d.degree_polyhedron();

  Presentation p;
  for (size_t i = 1; i <= r; ++i) p.generators.push_back("t" + std::to_string(i));
  for (size_t j = 1; j <= s; ++j) p.generators.push_back("b" + std::to_string(j));

  auto tword = [&](const IntVec& n) {
    Word w;
    for (size_t i = 0; i < r; ++i) {
      Word part = generator_power(i, n[i]);
      w.insert(w.end(), part.begin(), part.end());
    }
    return w;
  };

  Word prod;
  for (size_t j = 0; j < s; ++j) prod.push_back(static_cast<int>(r + j) + 1);
  p.relators.push_back(prod);

  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      p.relators.push_back(commutator(Word{static_cast<int>(i) + 1}, Word{static_cast<int>(j) + 1}));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < s; ++j)
      p.relators.push_back(
          commutator(Word{static_cast<int>(i) + 1}, Word{static_cast<int>(r + j) + 1}));

  for (const auto& n : torus_relation_lattice(d.tail(), deg)) p.relators.push_back(tword(n));

  for (size_t j = 0; j < s; ++j)
    for (const auto& v : mark_relation_lattice(d.marks()[j].coefficient, deg)) {
      IntVec n(v.begin(), v.begin() + static_cast<long>(r));
      Word w = tword(n);
      Word bpart = generator_power(r + j, v[r]);
      w.insert(w.end(), bpart.begin(), bpart.end());
      p.relators.push_back(free_reduce(w));
    }
  return p;
}

struct Pi1Report {
  Presentation presentation;
  FGAbelianGroup abelianization;
  bool klt = false;
  std::optional<Int> order;  // set when the group is finite (klt case)
  std::optional<bool> solvable;
  std::optional<JordanDecomposition> jordan;
};

inline Pi1Report pi1_report(const PolyhedralDivisor& d, size_t max_cosets = 200000) {
  Pi1Report rep;
  rep.presentation = pi1_presentation(d);
  rep.abelianization = rep.presentation.abelianization();
  rep.klt = klt_certificate(d).is_klt;
  if (!rep.klt) return rep;  // group is infinite, quotients are still reported

  CosetTable table = todd_coxeter(rep.presentation, max_cosets);
  rep.order = Int(table.order());
  size_t r = d.rank();

  std::vector<Perm> tperms, allperms;
  for (size_t i = 0; i < rep.presentation.generators.size(); ++i) {
    Perm p = table.generator_permutation(i);
    allperms.push_back(p);
    if (i < r) tperms.push_back(p);
  }

  // the torus generators are central, so they span an abelian normal
  // subgroup; its structure and index give the linearization data
  PermGroup a = PermGroup::generated_by(table.order(), tperms);
  JordanDecomposition jd;
  jd.normal_part = abelian_invariants(a);
  jd.rank = static_cast<long>(jd.normal_part.invariant_factors.size());
  jd.index = Int(table.order()) / a.order();
  rep.jordan = jd;

  rep.solvable = is_solvable_of(table.order(), allperms);
  return rep;
}

}  // namespace pdcox
