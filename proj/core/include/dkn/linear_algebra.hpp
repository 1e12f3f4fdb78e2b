#pragma once

/// \file linear_algebra.hpp
/// Exact Gaussian elimination over Q.

#include <cstddef>
#include <vector>

#include "dkn/rational.hpp"

namespace dkn {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Appends a row of length cols().
  void push_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that
/// column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

}  // namespace dkn
