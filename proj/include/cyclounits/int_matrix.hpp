#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclounits/int_poly.hpp"

namespace cyclounits {

/// Row-major dense matrix of big integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt bareiss_determinant(IntMatrix m);

/// Solves m x = rhs over Z when det m = +-1; returns nothing otherwise.
std::optional<std::vector<BigInt>> solve_unimodular(const IntMatrix& m, const std::vector<BigInt>& rhs);

/// Matrix of multiplication by f on Z[X]/(X^n - a) in the basis 1, X, ..., X^(n-1).
/// Column j holds the coefficients of X^j f mod (X^n - a).
IntMatrix multiplication_matrix(const IntPoly& f, std::size_t n, const BigInt& a);

}  // namespace cyclounits
