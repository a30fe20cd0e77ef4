#pragma once

#include <string>
#include <vector>

#include "pdcox/smith.hpp"

namespace pdcox {

// finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k
struct FGAbelianGroup {
  long free_rank = 0;
  IntVec invariant_factors;

  bool operator==(const FGAbelianGroup& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
  bool operator!=(const FGAbelianGroup& o) const { return !(*this == o); }

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int torsion_order() const {
    Int t = 1;
    for (const auto& d : invariant_factors) t *= d;
    return t;
  }

  FGAbelianGroup torsion() const { return {0, invariant_factors}; }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    auto app = [&](const std::string& part) {
      if (!s.empty()) s += " + ";
      s += part;
    };
    if (free_rank == 1) app("Z");
    if (free_rank > 1) app("Z^" + std::to_string(free_rank));
    for (const auto& d : invariant_factors) app("Z/" + d.get_str());
    return s;
  }
};

// structure of Z^rows / (column span of A), plus the normal-form coordinates
// of the standard generators (images of e_i under the row transform U)
struct CokernelData {
  FGAbelianGroup group;
  // one entry per generator e_i of Z^rows: first the torsion coordinates
  // (reduced mod d_j, aligned with invariant_factors), then the free ones
  std::vector<IntVec> generator_degrees;
};

inline Int mod_reduce(const Int& a, const Int& d) {
  Int r = a % d;
  if (r < 0) r += d;
  return r;
}

inline CokernelData cokernel_data(const IntMatrix& a) {
  SmithForm f = snf(a);
  size_t n = std::min(f.s.rows(), f.s.cols());
  IntVec diag;
  for (size_t i = 0; i < n; ++i) diag.push_back(f.s(i, i));

  // coordinates i with d_i = 1 are killed, d_i > 1 give torsion, d_i = 0 and
  // the rows beyond the diagonal give free summands
  std::vector<size_t> torsion_rows, free_rows;
  IntVec factors;
  for (size_t i = 0; i < n; ++i) {
    if (diag[i] == 0)
      free_rows.push_back(i);
    else if (diag[i] > 1) {
      torsion_rows.push_back(i);
      factors.push_back(diag[i]);
    }
  }
  for (size_t i = n; i < f.s.rows(); ++i) free_rows.push_back(i);

  CokernelData out;
  out.group.free_rank = static_cast<long>(free_rows.size());
  out.group.invariant_factors = factors;
  for (size_t g = 0; g < a.rows(); ++g) {
    IntVec deg;
    for (size_t k = 0; k < torsion_rows.size(); ++k)
      deg.push_back(mod_reduce(f.u(torsion_rows[k], g), factors[k]));
    for (size_t r : free_rows) deg.push_back(f.u(r, g));
    out.generator_degrees.push_back(deg);
  }
  return out;
}

inline FGAbelianGroup cokernel(const IntMatrix& a) { return cokernel_data(a).group; }

// quotient of Z^generators by the span of the given coefficient rows
inline CokernelData cokernel_data(size_t generators, const std::vector<IntVec>& relation_rows) {
  IntMatrix a(generators, relation_rows.size());
  for (size_t j = 0; j < relation_rows.size(); ++j) {
    if (relation_rows[j].size() != generators)
      throw Error("relation row length does not match the generator count");
    for (size_t i = 0; i < generators; ++i) a(i, j) = relation_rows[j][i];
  }
  return cokernel_data(a);
}

}  // namespace pdcox
