#pragma once

// Exact linear algebra over Q, used at sampled parameter points.

#include <cstddef>
#include <vector>

#include "djqla/scalar.hpp"
#include "djqla/tensor.hpp"

namespace djqla {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Every entry must be a rational constant.
  static RationalMatrix from(const ScalarMatrix& m);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  /// Appends a row; the row length must equal cols().
  void append_row(const std::vector<Rational>& row);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<size_t> pivot_cols;
};

RowEchelon row_reduce(RationalMatrix m);
size_t rank(const RationalMatrix& m);
/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

}  // namespace djqla
