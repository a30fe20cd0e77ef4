#pragma once

#include <cstddef>

#include "pdcox/matrix.hpp"

namespace pdcox {

// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ..., d_i >= 0,
// zero diagonal entries last.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
};

namespace detail {

// position of an entry of minimal nonzero absolute value in A[t.., t..],
// scanning row-major so the choice is deterministic
inline bool min_pivot(const IntMatrix& a, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  Int best = 0;
  for (size_t i = t; i < a.rows(); ++i)
    for (size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

// Classic elimination with minimal-|pivot| selection. Termination: every
// reduction round strictly shrinks |pivot| or clears a row/column.
inline SmithForm snf(const IntMatrix& a0) {
  SmithForm f{a0, IntMatrix::identity(a0.rows()), IntMatrix::identity(a0.cols())};
  IntMatrix& a = f.s;
  size_t n = std::min(a.rows(), a.cols());

  for (size_t t = 0; t < n; ++t) {
    size_t pi = 0, pj = 0;
    if (!detail::min_pivot(a, t, pi, pj)) break;  // the rest is zero
    a.swap_rows(t, pi);
    f.u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    f.v.swap_cols(t, pj);

    for (;;) {
      // clear column t below/above the pivot
      bool touched = false;
      for (size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q = rdiv(a(i, t), a(t, t));
        if (q != 0) {
          a.add_row(i, t, -q);
          f.u.add_row(i, t, -q);
        }
        if (a(i, t) != 0) {
          // remainder smaller than pivot: swap it up and restart
          a.swap_rows(t, i);
          f.u.swap_rows(t, i);
          touched = true;
          break;
        }
      }
      if (touched) continue;
      for (size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q = rdiv(a(t, j), a(t, t));
        if (q != 0) {
          a.add_col(j, t, -q);
          f.v.add_col(j, t, -q);
        }
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          f.v.swap_cols(t, j);
          touched = true;
          break;
        }
      }
      if (touched) continue;

      // row and column are clear; enforce divisibility d_t | everything below
      bool fixed = true;
      for (size_t i = t + 1; i < a.rows() && fixed; ++i)
        for (size_t j = t + 1; j < a.cols() && fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            f.u.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
  }

  for (size_t t = 0; t < n; ++t)
    if (a(t, t) < 0) {
      a.negate_row(t);
      f.u.negate_row(t);
    }
  return f;
}

inline IntVec smith_diagonal(const SmithForm& f) {
  size_t n = std::min(f.s.rows(), f.s.cols());
  IntVec d;
  for (size_t i = 0; i < n; ++i) d.push_back(f.s(i, i));
  return d;
}

}  // namespace pdcox
