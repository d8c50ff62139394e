#pragma once

#include <vector>

#include "schurkit/numeric.hpp"

namespace schurkit {

// Dense matrix with exact rational entries.  No floating point anywhere.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool operator==(const RationalMatrix&) const = default;

  // Exact rank by fraction-free elimination on a denominator-cleared copy.
  int rank() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace schurkit
