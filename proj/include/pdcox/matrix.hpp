#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pdcox/rational.hpp"

namespace pdcox {

// dense integer matrix, row-major
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), nc);
    for (size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == nc);
      for (size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_cols(const std::vector<IntVec>& cols) {
    size_t nr = cols.empty() ? 0 : cols[0].size();
    IntMatrix m(nr, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == nr);
      for (size_t i = 0; i < nr; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(size_t i) const {
    IntVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  IntVec col(size_t j) const {
    IntVec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(size_t i, size_t k) {
    if (i == k) return;
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  void swap_cols(size_t j, size_t k) {
    if (j == k) return;
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  // row_i += c * row_k
  void add_row(size_t i, size_t k, const Int& c) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) += c * (*this)(k, j);
  }

  // col_j += c * col_k
  void add_col(size_t j, size_t k, const Int& c) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) += c * (*this)(i, k);
  }

  void negate_row(size_t i) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  void negate_col(size_t j) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  IntMatrix operator*(const IntMatrix& b) const {
    assert(cols_ == b.rows_);
    IntMatrix c(rows_, b.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Int& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  bool operator==(const IntMatrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + (*this)(i, j).get_str();
    }
    return s + "]";
  }

 private:
  size_t rows_, cols_;
  std::vector<Int> a_;
};

}  // namespace pdcox
