#pragma once

#include "gpd/fn.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"

namespace gpd {

/* Convolution (f * g)(a) = sum over z in the range fiber of rng(a) of
 * f(z) g(inv(z) a) weight(z), and involution f*(a) = conj(f(inv a)).
 * Both are exact for S = CQ. */
template <class S>
Fn<S> convolve(const Groupoid& g, const HaarSystem& h, const Fn<S>& f1, const Fn<S>& f2) {
  check_carrier(f1, arrows_carrier(g), g.n);
  check_carrier(f2, arrows_carrier(g), g.n);
  Fn<S> out = zero_fn<S>(arrows_carrier(g), g.n);
  for (Idx a = 0; a < g.n; ++a) {
    S acc{};
    for (Idx z : g.fiber_r[g.upos(g.rng[a])]) {
      if (scalar_ops<S>::exactly_zero(f1.v[z])) continue;
      Idx b = g.compose(g.inv[z], a);
      acc += f1.v[z] * f2.v[b] * scalar_ops<S>::from_rational(h.w(z));
    }
    out.v[a] = acc;
  }
  return out;
}

template <class S>
Fn<S> involution(const Groupoid& g, const Fn<S>& f) {
  check_carrier(f, arrows_carrier(g), g.n);
  Fn<S> out = zero_fn<S>(arrows_carrier(g), g.n);
  for (Idx a = 0; a < g.n; ++a) out.v[a] = scalar_ops<S>::conjugate(f.v[g.inv[a]]);
  return out;
}

/* Regular representation of C_c(G) on the source fiber over the unit at
 * position up.  Basis: arrows b with src(b) = u; matrix entry (row b, col b')
 * is f(b inv(b')) weight(b inv(b')).  The fiber carries the weighted inner
 * product <x, y> = sum conj(x_b) y_b m(b) with m(b) = weight(rng b), which is
 * the unique family (up to scale) making the involution the adjoint; for a
 * counting Haar system it is the plain counting inner product. */
template <class S>
Mat<S> regular_rep_matrix(const Groupoid& g, const HaarSystem& h, const Fn<S>& f, int up) {
  check_carrier(f, arrows_carrier(g), g.n);
  const auto& basis = g.fiber_s[up];
  Mat<S> m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      Idx z = g.compose(basis[i], g.inv[basis[j]]);
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          f.v[z] * scalar_ops<S>::from_rational(h.w(z));
    }
  return m;
}

inline Rational fiber_weight(const Groupoid& g, const HaarSystem& h, Idx arrow) {
  return h.weight[g.rng[arrow]];
}

/* Same matrix conjugated into an orthonormal basis of the weighted fiber,
 * so operator norms and eigenvalues come from standard Eigen solvers. */
CMat regular_rep_orthonormal(const Groupoid& g, const HaarSystem& h, const Fn<CD>& f, int up);

/* Sup over units of the fiberwise operator norm.  For the finite groupoids
 * here the regular representations exhaust the C*-norm: finite groupoids are
 * amenable (they are bounded-orbit, hence measurewise amenable), so the full
 * and reduced norms coincide and the max over unit fibers is the C*-norm,
 * not just a lower bound. */
double cstar_norm(const Groupoid& g, const HaarSystem& h, const Fn<CD>& f);

struct PositivityResult {
  bool positive = false;
  double min_eigenvalue = 0.0;
  std::string witness_unit;  // unit attaining the minimum
};

/* psi must be self-adjoint (checked; NotSelfAdjoint).  Positive iff every
 * fiber representation has spectrum >= -tol; reports the minimum eigenvalue
 * and the unit attaining it. */
PositivityResult positivity_check(const Groupoid& g, const HaarSystem& h,
                                  const Fn<CD>& psi, double tol);

/* |  ||f* x f|| - ||f||^2  | / max(1, ||f||^2), the C*-identity residual. */
double cstar_identity_residual(const Groupoid& g, const HaarSystem& h, const Fn<CD>& f);

}  // namespace gpd
