#include "gpd/linalg.hpp"

namespace gpd {

/* Plain Gaussian elimination over Q; records which columns produce pivots.
 * Sizes stay in the hundreds, so no pivoting strategy is needed beyond
 * "first nonzero". */
static std::vector<int> eliminate(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    for (int i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_exact(QMat m) {
  return static_cast<int>(eliminate(m).size());
}

std::vector<int> pivot_columns(QMat m) {
  return eliminate(m);
}

CMat to_eigen(const Mat<CD>& m) {
  CMat e(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) e(i, j) = m.at(i, j);
  return e;
}

double operator_norm(const CMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

double min_hermitian_eigenvalue(const CMat& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_abs_entry(const CMat& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

}  // namespace gpd
