#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

/* Dense matrix over an arbitrary scalar; the exact kernels instantiate S = CQ
 * (complex rational) where equality checks must be literal, float paths use
 * Eigen directly. */
template <class S>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  S& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const S& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const S& xik = x.at(i, k);
        if (scalar_ops<S>::exactly_zero(xik)) continue;
        for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
      }
    return z;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

using CQMat = Mat<CQ>;

/* Rational matrix with exact elimination; rank and column-space extraction
 * back the cohomology dimensions and the fullness / nondegeneracy flags. */
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

int rank_exact(QMat m);  // destructive on the copy

/* Indices of a maximal independent column set (pivot columns, in order). */
std::vector<int> pivot_columns(QMat m);

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

CMat to_eigen(const Mat<CD>& m);

double operator_norm(const CMat& m);            // largest singular value
double min_hermitian_eigenvalue(const CMat& m); // smallest eigenvalue, m Hermitian
double max_abs_entry(const CMat& m);

}  // namespace gpd
