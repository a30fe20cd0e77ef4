#pragma once

#include <string>
#include <vector>

#include "pdcox/pdiv.hpp"

namespace pdcox {

// branching of a degree-d cover of the line over one point: every preimage
// has the same ramification order (all covers used here are quotient maps)
struct BranchEntry {
  P1Point point;
  Int ram = 1;    // ramification order e at each preimage
  Int count = 1;  // number of preimages
};

struct BranchData {
  Int degree = 1;
  std::vector<BranchEntry> entries;

  void validate() const {
    if (degree < 1) throw BranchMismatchError("cover degree must be positive");
    Int rh = 0;
    for (const auto& e : entries) {
      if (e.ram < 1 || e.count < 1)
        throw BranchMismatchError("branch entry at " + e.point.to_string() +
                                  " must have positive ramification and count");
      if (e.ram * e.count != degree)
        throw BranchMismatchError("branch entry at " + e.point.to_string() +
                                  " does not partition the fiber: " + e.count.get_str() +
                                  " * " + e.ram.get_str() + " != " + degree.get_str());
      rh += e.count * (e.ram - 1);
    }
    for (size_t i = 0; i < entries.size(); ++i)
      for (size_t j = i + 1; j < entries.size(); ++j)
        if (entries[i].point == entries[j].point)
          throw BranchMismatchError("two branch entries at " + entries[i].point.to_string());
    if (rh != 2 * degree - 2)
      throw BranchMismatchError("branch data violates the genus count: total ramification " +
                                rh.get_str() + " expected " + Int(2 * degree - 2).get_str());
  }

  // ramification over a given point (1 if the point is not listed)
  Int ram_at(const P1Point& p) const {
    for (const auto& e : entries)
      if (e.point == p) return e.ram;
    return 1;
  }

  Int count_at(const P1Point& p) const {
    for (const auto& e : entries)
      if (e.point == p) return e.count;
    return degree;
  }
};

// pullback of the divisor along a cover with the given branch data: a mark
// with coefficient P at p turns into count_at(p) marks with coefficient
// ram_at(p) * P at fresh symbolic preimage points
inline PolyhedralDivisor pullback(const PolyhedralDivisor& d, const BranchData& f) {
  f.validate();
  if (f.degree == 1) return d;
  std::vector<Mark> marks;
  for (const auto& m : d.marks()) {
    Int e = f.ram_at(m.point);
    Int n = f.count_at(m.point);
    SigmaPolyhedron coeff = e == 1 ? m.coefficient : m.coefficient.scaled(Rat(e));
    for (Int k = 1; k <= n; ++k)
      marks.push_back({P1Point::symbolic(m.point.to_string() + "_" + k.get_str()), coeff});
  }
  return PolyhedralDivisor(d.tail(), marks);
}

}  // namespace pdcox
