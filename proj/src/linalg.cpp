#include "ovf/linalg.hpp"

#include <stdexcept>

namespace ovf {

Rational exact_det(MatrixQ m) {
  const auto n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("exact_det: matrix must be square");
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

int exact_rank(MatrixQ m) {
  const auto rows = m.rows(), cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace ovf
