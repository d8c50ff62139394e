#include "schurkit/ratmat.hpp"

#include <algorithm>

#include "schurkit/errors.hpp"

namespace schurkit {

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x == 0; });
}

int RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators per row, then run Bareiss elimination over integers.
  std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
  for (int r = 0; r < rows_; ++r) {
    Int lcm = 1;
    for (int c = 0; c < cols_; ++c) {
      Int d = denominator(at(r, c));
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    for (int c = 0; c < cols_; ++c) {
      const Rational& x = at(r, c);
      m[r][c] = numerator(x) * exact_div(lcm, denominator(x));
    }
  }
  int rank = 0;
  Int prev = 1;
  int pivot_col = 0;
  for (int row = 0; row < rows_ && pivot_col < cols_; ++pivot_col) {
    int pivot_row = -1;
    for (int r = row; r < rows_; ++r)
      if (m[r][pivot_col] != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) continue;
    std::swap(m[row], m[pivot_row]);
    for (int r = row + 1; r < rows_; ++r) {
      for (int c = pivot_col + 1; c < cols_; ++c)
        m[r][c] = exact_div(m[r][c] * m[row][pivot_col] - m[r][pivot_col] * m[row][c],
                            prev);
      m[r][pivot_col] = 0;
    }
    prev = m[row][pivot_col];
    ++rank;
    ++row;
  }
  return rank;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw ValidationError("matrix dimensions do not match for multiplication");
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

}  // namespace schurkit
