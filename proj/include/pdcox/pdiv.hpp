#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdcox/p1point.hpp"
#include "pdcox/polyhedron.hpp"

namespace pdcox {

// one summand coefficient x point of the divisor
struct Mark {
  P1Point point;
  SigmaPolyhedron coefficient;

  bool operator==(const Mark& o) const {
    return point == o.point && coefficient == o.coefficient;
  }
};

// divisor with polyhedral coefficients on the projective line
class PolyhedralDivisor {
 public:
  PolyhedralDivisor(Cone tail, std::vector<Mark> marks)
      : tail_(std::move(tail)), marks_(std::move(marks)) {
    if (!tail_.is_full_dimensional())
      throw NonFullDimensionalConeError("tail cone is not full dimensional");
    if (marks_.empty()) throw InputError("divisor needs at least one mark");
    for (const auto& m : marks_)
      if (!(m.coefficient.recession_cone() == tail_))
        throw RecessionMismatchError("coefficient at " + m.point.to_string() +
                                     " does not have the tail cone as recession cone");
    std::sort(marks_.begin(), marks_.end(),
              [](const Mark& a, const Mark& b) { return a.point < b.point; });
    for (size_t i = 1; i < marks_.size(); ++i)
      if (marks_[i].point == marks_[i - 1].point)
        throw DuplicatePointError("two coefficients at point " + marks_[i].point.to_string());
  }

  const Cone& tail() const { return tail_; }
  const std::vector<Mark>& marks() const { return marks_; }
  size_t rank() const { return tail_.ambient_rank(); }

  // Minkowski sum of all coefficients
  SigmaPolyhedron degree_polyhedron() const {
    SigmaPolyhedron d = marks_[0].coefficient;
    for (size_t i = 1; i < marks_.size(); ++i)
      d = minkowski_sum(d, marks_[i].coefficient);
    return d;
  }

  // divisor of support values at u; defined only for u where every
  // coefficient is bounded below
  std::vector<std::pair<P1Point, Rat>> evaluate(const RatVec& u) const {
    std::vector<std::pair<P1Point, Rat>> out;
    for (const auto& m : marks_) {
      std::optional<Rat> s = support_eval(m.coefficient, u);
      if (!s) throw UnboundedError("evaluation is unbounded at the given functional");
      out.emplace_back(m.point, *s);
    }
    return out;
  }

  // the two geometric conditions for the orbit space construction to produce
  // an affine variety: degree inside the tail cone, and degree missing 0
  bool is_proper() const {
    SigmaPolyhedron deg = degree_polyhedron();
    if (!deg.subset_of(tail_)) return false;
    RatVec zero(rank(), Rat(0));
    return !deg.contains(zero);
  }

  void require_proper() const {
    SigmaPolyhedron deg = degree_polyhedron();
    if (!deg.subset_of(tail_))
      throw NotProperError("degree polyhedron is not contained in the tail cone");
    RatVec zero(rank(), Rat(0));
    if (deg.contains(zero))
      throw NotProperError("degree polyhedron contains the origin");
  }

  bool operator==(const PolyhedralDivisor& o) const {
    return tail_ == o.tail_ && marks_ == o.marks_;
  }

 private:
  Cone tail_;
  std::vector<Mark> marks_;
};

// per-point denominator data
struct MuRecord {
  P1Point point;
  Int mu;
};

inline std::vector<MuRecord> mu_data(const PolyhedralDivisor& d) {
  std::vector<MuRecord> out;
  for (const auto& m : d.marks()) out.push_back({m.point, polyhedron_mu(m.coefficient)});
  return out;
}

// fractional boundary divisor on the line: coefficient 1 - 1/mu_p at p
inline std::vector<std::pair<P1Point, Rat>> boundary_divisor(const PolyhedralDivisor& d) {
  std::vector<std::pair<P1Point, Rat>> out;
  for (const auto& rec : mu_data(d))
    if (rec.mu > 1) out.emplace_back(rec.point, Rat(rec.mu - 1) / Rat(rec.mu));
  return out;
}

// the five families of branch index triples with 1/a + 1/b + 1/c > 1
enum class TripleFamily { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

inline const char* family_name(TripleFamily f) {
  switch (f) {
    case TripleFamily::Cyclic: return "cyclic";
    case TripleFamily::Dihedral: return "dihedral";
    case TripleFamily::Tetrahedral: return "tetrahedral";
    case TripleFamily::Octahedral: return "octahedral";
    case TripleFamily::Icosahedral: return "icosahedral";
  }
  return "?";
}

// expects a >= b >= c >= 1
inline std::optional<TripleFamily> classify_platonic(const Int& a, const Int& b, const Int& c) {
  if (a < b || b < c || c < 1) throw Error("classify_platonic: triple must be sorted descending");
  if (c == 1) return TripleFamily::Cyclic;
  if (b == 2 && c == 2) return TripleFamily::Dihedral;
  if (c == 2 && b == 3) {
    if (a == 3) return TripleFamily::Tetrahedral;
    if (a == 4) return TripleFamily::Octahedral;
    if (a == 5) return TripleFamily::Icosahedral;
  }
  return std::nullopt;
}

inline bool is_platonic_triple(const Int& a, const Int& b, const Int& c) {
  return classify_platonic(a, b, c).has_value();
}

enum class KltReason {
  AtMostTwoNontrivial,
  PlatonicTriple,
  NonPlatonicTriple,
  TooManyNontrivialPoints,
};

struct KltCertificate {
  bool is_klt = false;
  KltReason reason = KltReason::AtMostTwoNontrivial;
  // all mu_p sorted descending, padded with 1s to length three when possible
  std::vector<Int> triple;
  std::optional<TripleFamily> family;
  std::vector<MuRecord> nontrivial;
};

inline KltCertificate klt_certificate(const PolyhedralDivisor& d) {
  KltCertificate cert;
  for (const auto& rec : mu_data(d))
    if (rec.mu > 1) cert.nontrivial.push_back(rec);
  for (const auto& rec : cert.nontrivial) cert.triple.push_back(rec.mu);
  std::sort(cert.triple.begin(), cert.triple.end(), std::greater<Int>());
  if (cert.triple.size() > 3) {
    cert.is_klt = false;
    cert.reason = KltReason::TooManyNontrivialPoints;
    return cert;
  }
  bool padded = cert.triple.size() < 3;
  while (cert.triple.size() < 3) cert.triple.emplace_back(1);
  cert.family = classify_platonic(cert.triple[0], cert.triple[1], cert.triple[2]);
  cert.is_klt = cert.family.has_value();
  if (padded)
    cert.reason = KltReason::AtMostTwoNontrivial;
  else
    cert.reason = cert.is_klt ? KltReason::PlatonicTriple : KltReason::NonPlatonicTriple;
  return cert;
}

inline void require_klt(const PolyhedralDivisor& d) {
  KltCertificate c = klt_certificate(d);
  if (!c.is_klt) {
    std::string msg = "branch indices (";
    for (size_t i = 0; i < c.triple.size(); ++i)
      msg += (i ? "," : "") + c.triple[i].get_str();
    msg += ") do not satisfy 1/a + 1/b + 1/c > 1";
    throw NotKltError(msg);
  }
}

// rays of the tail cone meeting the degree polyhedron get contracted in the
// orbit space; the remaining ones carry their own homogeneous generators
struct RaySplit {
  std::vector<IntVec> contracted;
  std::vector<IntVec> free_rays;
};

inline RaySplit split_rays(const PolyhedralDivisor& d) {
  RaySplit out;
  SigmaPolyhedron deg = d.degree_polyhedron();
  for (const auto& rho : d.tail().rays()) {
    if (ray_meets(deg, rho))
      out.contracted.push_back(rho);
    else
      out.free_rays.push_back(rho);
  }
  return out;
}

}  // namespace pdcox
