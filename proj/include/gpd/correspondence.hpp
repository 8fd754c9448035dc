#pragma once

#include <array>
#include <memory>

#include "gpd/algebra.hpp"
#include "gpd/bispace.hpp"

namespace gpd {

/* Sparse structure tables of the module on the delta-function basis.
 * gram holds the inner products of basis deltas: <d_x, d_y> is the function
 * mass(x) . d_eta exactly when x.eta = y, so one entry per composable
 * (point, arrow) pair.  leftrep holds the left action of arrow deltas:
 * d_gamma . d_x = sqrt(Delta(gamma, x)) weight(gamma) . d_{gamma x}. */
struct HilbertModuleData {
  std::vector<std::string> basis;  // point names

  struct GramEntry {
    Idx x, y, eta;
    Rational value;
  };
  std::vector<GramEntry> gram;

  struct LeftRepEntry {
    Idx arrow, from, to;
    double coeff;
  };
  std::vector<LeftRepEntry> leftrep;
};

/* The full bundle: both groupoids with Haar systems, the bispace, the
 * family of measures along s_X and the adjoining function computed from
 * them, plus caches the kernels need.  Built by build_correspondence, which
 * runs every structural validator first; the H-action properness demanded
 * of the right side is automatic at finite scale (point fibers are finite),
 * the measure-side properness is part of the family validator.
 *
 * Square roots of Delta are irrational in general, so the left action
 * evaluates in floats.  When every on-fiber Delta value is a perfect square
 * of a rational the exact caches are filled and the CQ kernels are allowed;
 * squares_correspondence synthesizes such instances from arbitrary data. */
struct Correspondence {
  Groupoid g, h;
  HaarSystem alpha, beta;
  Bispace x;
  MeasureFamily lam;
  AdjoiningFn delta;

  bool exact_sqrt = false;
  std::vector<Rational> sqrt_delta_q;         // g.n * npts, exact mode only
  std::vector<double> sqrt_delta;             // g.n * npts
  std::vector<std::vector<Idx>> points_by_sunit;  // H unit pos -> points
  std::shared_ptr<const HilbertModuleData> eager_module;  // filled when small

  double sd(Idx a, Idx p) const { return sqrt_delta[static_cast<size_t>(a) * x.npts + p]; }
  const Rational& sdq(Idx a, Idx p) const {
    return sqrt_delta_q[static_cast<size_t>(a) * x.npts + p];
  }
};

Correspondence build_correspondence(const Groupoid& g, const HaarSystem& alpha,
                                    const Groupoid& h, const HaarSystem& beta,
                                    const Bispace& x, const MeasureFamily& lam);

/* Same data with the left Haar unit weights and the point masses squared;
 * the adjoining function of the result is the square of the original one,
 * so the exact-mode kernels apply. */
Correspondence squares_correspondence(const Groupoid& g, const HaarSystem& alpha,
                                      const Groupoid& h, const HaarSystem& beta,
                                      const Bispace& x, const MeasureFamily& lam);

/* Copy with one adjoining value multiplied by the given positive factor.
 * The pair must be composable.  The result deliberately fails the
 * compatibility identity between masses and Delta; fault-injection tests
 * feed it to the verifiers. */
Correspondence with_perturbed_delta(const Correspondence& c, Idx arrow, Idx point,
                                    const Rational& factor);

/* (phi.f)(x)  = sum over gamma with rng(gamma) = rX(x) of
 *               phi(gamma) f(inv(gamma) x) sqrt(Delta(gamma, inv(gamma) x)) w_a(gamma)
 * (f.psi)(x)  = sum over eta with rng(eta) = sX(x) of f(x eta) psi(inv eta) w_b(eta)
 * <f, g>(eta) = sum over x with sX(x) = rng(eta) of conj(f(x)) g(x eta) mass(x)
 * S is CQ (exact; requires exact_sqrt for the left action) or CD. */
template <class S>
Fn<S> left_action(const Correspondence& c, const Fn<S>& phi, const Fn<S>& f);
template <class S>
Fn<S> right_action(const Correspondence& c, const Fn<S>& f, const Fn<S>& psi);
template <class S>
Fn<S> inner_product(const Correspondence& c, const Fn<S>& f, const Fn<S>& g);

/* The unweighted left action (no adjoining factor); with Delta identically 1
 * it coincides bit for bit with left_action. */
template <class S>
Fn<S> left_action_unweighted(const Correspondence& c, const Fn<S>& phi, const Fn<S>& f);

/* The seven bimodule identities on random rational-valued inputs:
 *   1  (phi * phi') f        = phi (phi' f)
 *   2  f (psi * psi')        = (f psi) psi'
 *   3  (phi f) psi           = phi (f psi)
 *   4  <f, g + g'>           = <f, g> + <f, g'>
 *   5  <f, g>*               = <g, f>
 *   6  <f, g> * psi          = <f, g psi>
 *   7  <phi f, g>            = <f, phi* g>
 * Exact mode runs over CQ and demands zero residual; float mode compares
 * against the tolerance. */
struct BimoduleReport {
  bool exact = false;
  int trials = 0;
  std::array<double, 7> max_residual{};
  bool ok = false;

  std::string str() const;
};
BimoduleReport verify_bimodule_identities(const Correspondence& c, int trials,
                                          uint64_t seed, double tol = 1e-8);

/* <f, f> >= 0 in every fiber representation of H. */
bool positivity_certificate(const Correspondence& c, const Fn<CD>& f, double tol = 1e-8);

/* ||zeta||^2 <f, f> - <zeta f, zeta f> >= 0; the norm is the C*-norm of
 * zeta in C*(G, alpha). */
bool bounded_action_check(const Correspondence& c, const Fn<CD>& zeta, const Fn<CD>& f,
                          double tol = 1e-7);

/* <f, g>* * <f, g>  <=  ||<f, f>|| <g, g>. */
bool cauchy_schwarz_check(const Correspondence& c, const Fn<CD>& f, const Fn<CD>& g,
                          double tol = 1e-7);

/* The span of  d_gamma . d_x  over composable pairs hits the coordinate of
 * every point whose range fiber in G is nonempty (each product is a single
 * positively-weighted spike at gamma x, so the span is a coordinate
 * subspace).  Points with an empty fiber are reported, not counted against
 * nondegeneracy; with total momentum maps the fiber always contains the
 * unit, so excluded stays empty for every instance built here. */
struct NondegeneracyResult {
  bool ok = false;
  int rank = 0;
  std::vector<std::string> excluded;
};
NondegeneracyResult nondegeneracy_check(const Correspondence& c);

/* Computed flags, no requirement either way: full when every arrow of H is
 * hit by an inner product of basis deltas with positive mass; proper always
 * holds here because the left action is a finite matrix, hence compact. */
struct CorrespondenceFlags {
  bool full = false;
  bool proper = true;
};
CorrespondenceFlags correspondence_flags(const Correspondence& c);

HilbertModuleData module_data(const Correspondence& c);

}  // namespace gpd
