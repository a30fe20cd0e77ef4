#pragma once

#include <optional>
#include <vector>

#include "pdcox/matrix.hpp"

namespace pdcox {

// Row-style Hermite normal form of the lattice spanned by the given rows:
// pivots positive and strictly to the right as we go down, entries below a
// pivot zero, entries above reduced into [0, pivot). Zero rows are dropped,
// so the result is a canonical basis of the span.
inline std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens) {
  if (gens.empty()) return {};
  IntMatrix a = IntMatrix::from_rows(gens);
  size_t r = 0;  // next pivot row
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // euclidean elimination in column c among rows r..end
    for (;;) {
      size_t piv = a.rows();
      Int best = 0;
      for (size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Int v = abs(a(i, c));
        if (piv == a.rows() || v < best) {
          piv = i;
          best = v;
        }
      }
      if (piv == a.rows()) break;  // column clear
      a.swap_rows(r, piv);
      bool done = true;
      for (size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Int q = fdiv(a(i, c), a(r, c));
        a.add_row(i, r, -q);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    ++r;
  }
  // reduce entries above each pivot, top pivot first: row i only touches
  // columns >= its pivot, so columns already reduced stay reduced
  for (size_t i = 1; i < r; ++i) {
    size_t c = 0;
    while (c < a.cols() && a(i, c) == 0) ++c;
    for (size_t k = 0; k < i; ++k) {
      Int q = fdiv(a(k, c), a(i, c));
      if (q != 0) a.add_row(k, i, -q);
    }
  }
  std::vector<IntVec> out;
  for (size_t i = 0; i < r; ++i) out.push_back(a.row(i));
  return out;
}

// reduce v modulo the HNF basis; the remainder is zero iff v lies in the lattice
// (pivot columns are hit by exactly one row each, so floor reduction is exact
// whenever v is a lattice member)
inline IntVec hnf_reduce(IntVec v, const std::vector<IntVec>& hnf) {
  for (const auto& row : hnf) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    Int q = fdiv(v[c], row[c]);
    if (q != 0)
      for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

inline bool in_lattice(const IntVec& v, const std::vector<IntVec>& hnf) {
  return is_zero(hnf_reduce(v, hnf));
}

// integer coordinates of v in the HNF basis, if any
inline std::optional<IntVec> lattice_coordinates(IntVec v, const std::vector<IntVec>& hnf) {
  IntVec coef(hnf.size(), Int(0));
  for (size_t i = 0; i < hnf.size(); ++i) {
    const auto& row = hnf[i];
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    if (v[c] % row[c] != 0) return std::nullopt;
    Int q = v[c] / row[c];
    coef[i] = q;
    if (q != 0)
      for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  if (!is_zero(v)) return std::nullopt;
  return coef;
}

// basis of the integral kernel {x : A x = 0} via SNF of A
inline std::vector<IntVec> integral_kernel(const IntMatrix& a);

}  // namespace pdcox

#include "pdcox/smith.hpp"

namespace pdcox {

inline std::vector<IntVec> integral_kernel(const IntMatrix& a) {
  if (a.cols() == 0) return {};
  if (a.rows() == 0) {
    std::vector<IntVec> basis;
    for (size_t j = 0; j < a.cols(); ++j) {
      IntVec e(a.cols(), Int(0));
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithForm f = snf(a);
  size_t n = std::min(f.s.rows(), f.s.cols());
  size_t rank = 0;
  for (size_t i = 0; i < n; ++i)
    if (f.s(i, i) != 0) ++rank;
  // kernel = V * span(e_rank..e_{cols-1})
  std::vector<IntVec> basis;
  for (size_t j = rank; j < a.cols(); ++j) basis.push_back(f.v.col(j));
  return lattice_basis(basis);
}

}  // namespace pdcox
