#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "reeb/abelian.hpp"

namespace reeb {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Throws InputError unless entries.size() == rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  std::vector<Integer> diagonal;  // positive, d_1 | d_2 | ... | d_rank
  std::size_t rank = 0;
};

// Unimodular diagonalization by row/column elimination, always pivoting on
// the entry of least absolute value in the remaining block.
SmithForm smith_normal_form(IntMatrix a);

// Cellular chain complex C_0 <- C_1 <- ... <- C_d with free chain groups.
class ChainComplex {
 public:
  // boundaries[k - 1] is the matrix of d_k : C_k -> C_{k-1}, shape
  // dims[k-1] x dims[k]. Throws InputError on a shape mismatch or when some
  // d_k * d_{k+1} is nonzero.
  ChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries);

  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
  std::size_t cells(int k) const;
  // d_k; a zero matrix of the proper shape for k = 0 and k = top + 1.
  IntMatrix boundary(int k) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> boundaries_;
};

// H_k for k = 0..d.
std::vector<AbelianGroup> homology(const ChainComplex& c);

// Graded tensor product with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
// Basis of degree k is ordered by |x| ascending, then x, then y.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);

// Minimal CW model of S^d: one 0-cell, one d-cell. d = 0 yields a point.
ChainComplex sphere_complex(int d);

}  // namespace reeb
