#include "gpd/algebra.hpp"

#include <cmath>

namespace gpd {

CMat regular_rep_orthonormal(const Groupoid& g, const HaarSystem& h, const Fn<CD>& f, int up) {
  Mat<CD> m = regular_rep_matrix(g, h, f, up);
  const auto& basis = g.fiber_s[up];
  CMat e = to_eigen(m);
  for (int i = 0; i < e.rows(); ++i) {
    double si = std::sqrt(to_double(fiber_weight(g, h, basis[i])));
    for (int j = 0; j < e.cols(); ++j) {
      double sj = std::sqrt(to_double(fiber_weight(g, h, basis[j])));
      e(i, j) *= si / sj;
    }
  }
  return e;
}

double cstar_norm(const Groupoid& g, const HaarSystem& h, const Fn<CD>& f) {
  check_carrier(f, arrows_carrier(g), g.n);
  double norm = 0.0;
  for (size_t up = 0; up < g.units.size(); ++up)
    norm = std::max(norm, operator_norm(regular_rep_orthonormal(g, h, f, static_cast<int>(up))));
  return norm;
}

PositivityResult positivity_check(const Groupoid& g, const HaarSystem& h,
                                  const Fn<CD>& psi, double tol) {
  check_carrier(psi, arrows_carrier(g), g.n);
  Fn<CD> star = involution(g, psi);
  double sa_res = 0.0;
  for (Idx a = 0; a < g.n; ++a) sa_res = std::max(sa_res, std::abs(star.v[a] - psi.v[a]));
  if (sa_res > tol)
    throw Error(ErrorCode::NotSelfAdjoint,
                "element differs from its involution by " + std::to_string(sa_res));

  PositivityResult r;
  r.positive = true;
  r.min_eigenvalue = 0.0;
  bool first = true;
  for (size_t up = 0; up < g.units.size(); ++up) {
    if (g.fiber_s[up].empty()) continue;
    double ev = min_hermitian_eigenvalue(regular_rep_orthonormal(g, h, psi, static_cast<int>(up)));
    if (first || ev < r.min_eigenvalue) {
      r.min_eigenvalue = ev;
      r.witness_unit = g.name(g.units[up]);
      first = false;
    }
  }
  r.positive = r.min_eigenvalue >= -tol;
  return r;
}

double cstar_identity_residual(const Groupoid& g, const HaarSystem& h, const Fn<CD>& f) {
  double n1 = cstar_norm(g, h, f);
  double n2 = cstar_norm(g, h, convolve(g, h, involution(g, f), f));
  return std::abs(n2 - n1 * n1) / std::max(1.0, n1 * n1);
}

}  // namespace gpd
