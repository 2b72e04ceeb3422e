#include "djqla/linalg.hpp"

#include "djqla/errors.hpp"

namespace djqla {

RationalMatrix RationalMatrix::from(const ScalarMatrix& m) {
  RationalMatrix r(m.size(), m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) r(i, j) = m(i, j).rational_value();
  }
  return r;
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (row.size() != cols_) throw DimensionMismatch("row length " + std::to_string(row.size()));
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  size_t lead_row = 0;
  for (size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    size_t piv = lead_row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead_row) {
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(lead_row, c));
    }
    Rational inv = 1 / m(lead_row, col);
    for (size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(lead_row, c)) != 0) m(r, c) -= f * m(lead_row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

size_t rank(const RationalMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace djqla
