#pragma once

#include "calabi/rational.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

namespace calabi {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form over the rationals; returns the pivot
/// column of each nonzero row in order.
inline std::vector<int> rref(MatrixQ& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(row).swap(m.row(pivot));
    const Rational lead = m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) /= lead;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the null space of m, computed exactly.
inline std::vector<VectorQ> rational_kernel(MatrixQ m) {
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<VectorQ> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorQ v = VectorQ::Zero(m.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int rational_rank(MatrixQ m) { return int(rref(m).size()); }

}  // namespace calabi
