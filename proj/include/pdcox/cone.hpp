#pragma once

#include <algorithm>
#include <vector>

#include "pdcox/errors.hpp"
#include "pdcox/hermite.hpp"
#include "pdcox/linprog.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

// strongly convex rational polyhedral cone, stored by its primitive ray
// generators (deduped, lex-sorted). A cone with no rays is the origin.
class Cone {
 public:
  Cone() : ambient_(0) {}

  static Cone from_rays(size_t ambient, const std::vector<IntVec>& gens) {
    Cone c;
    c.ambient_ = ambient;
    for (const auto& g : gens) {
      if (g.size() != ambient) throw InputError("cone ray has wrong ambient rank");
      if (is_zero(g)) throw InputError("zero vector is not a valid ray generator");
      c.rays_.push_back(primitive(g));
    }
    std::sort(c.rays_.begin(), c.rays_.end());
    c.rays_.erase(std::unique(c.rays_.begin(), c.rays_.end()), c.rays_.end());
    c.validate_strongly_convex();
    return c;
  }

  static Cone from_rational_rays(size_t ambient, const std::vector<RatVec>& gens) {
    std::vector<IntVec> w;
    for (const auto& g : gens) {
      if (is_zero(g)) throw InputError("zero vector is not a valid ray generator");
      w.push_back(primitive_direction(g));
    }
    // sizes checked in from_rays
    return from_rays(ambient, w);
  }

  size_t ambient_rank() const { return ambient_; }
  const std::vector<IntVec>& rays() const { return rays_; }

  // dimension of the linear span
  size_t dim() const { return lattice_basis(rays_).size(); }

  bool is_full_dimensional() const { return dim() == ambient_; }

  bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && rays_ == o.rays_; }

  // membership x in cone: exists lambda >= 0 with sum lambda_i rho_i = x
  bool contains(const RatVec& x) const {
    if (x.size() != ambient_) throw Error("cone membership: wrong ambient rank");
    if (rays_.empty()) return is_zero(x);
    std::vector<LinearConstraint> cons;
    for (size_t k = 0; k < ambient_; ++k) {
      LinearConstraint c;
      c.rel = Rel::EQ;
      c.rhs = x[k];
      for (const auto& r : rays_) c.coeffs.emplace_back(r[k]);
      cons.push_back(c);
    }
    for (size_t i = 0; i < rays_.size(); ++i) {
      LinearConstraint c;
      c.rel = Rel::GE;
      c.rhs = 0;
      c.coeffs.assign(rays_.size(), Rat(0));
      c.coeffs[i] = 1;
      cons.push_back(c);
    }
    return lp_feasible(cons, rays_.size());
  }

  bool contains(const IntVec& x) const { return contains(to_rat(x)); }

 private:
  void validate_strongly_convex() const {
    if (rays_.empty()) return;
    // pointed <=> 0 is not a convex combination of the ray generators
    std::vector<LinearConstraint> cons;
    for (size_t k = 0; k < ambient_; ++k) {
      LinearConstraint c;
      c.rel = Rel::EQ;
      c.rhs = 0;
      for (const auto& r : rays_) c.coeffs.emplace_back(r[k]);
      cons.push_back(c);
    }
    LinearConstraint sum;
    sum.rel = Rel::EQ;
    sum.rhs = 1;
    sum.coeffs.assign(rays_.size(), Rat(1));
    cons.push_back(sum);
    for (size_t i = 0; i < rays_.size(); ++i) {
      LinearConstraint c;
      c.rel = Rel::GE;
      c.rhs = 0;
      c.coeffs.assign(rays_.size(), Rat(0));
      c.coeffs[i] = 1;
      cons.push_back(c);
    }
    if (lp_feasible(cons, rays_.size()))
      throw InputError("cone is not strongly convex");
  }

  size_t ambient_;
  std::vector<IntVec> rays_;
};

}  // namespace pdcox
