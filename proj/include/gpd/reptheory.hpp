#pragma once

#include "gpd/correspondence.hpp"

namespace gpd {

/* Representation of (H, beta) on a finite-dimensional Hilbert bundle: one
 * space C^{dims[u]} per unit position and one unitary per arrow, contravariant
 * shapes dims(rng) x dims(src), functorial on the composition table. */
struct RepBundle {
  std::string groupoid_id;
  std::vector<int> dims;      // per unit position
  std::vector<CMat> unitary;  // per arrow
};

RepBundle trivial_rep_bundle(const Groupoid& h);

/* Permutation bundle on the range fibers: the space at u is C[H^u] in fiber
 * list order, and an arrow eta acts by gamma -> eta gamma. */
RepBundle regular_rep_bundle(const Groupoid& h);

ValidationReport validate_representation(const Groupoid& h, const RepBundle& rep,
                                         double tol = 1e-10);

/* Radon-Nikodym package for a pair (mu on H^0, nu on X/H).
 *
 * The two global measures on X are (mu o lambda)({x}) = mu(sX x) mass(x) and
 * (nu o beta_X)({x}) = nu([x]) stabw(x), where stabw(x) sums the beta weights
 * of the arrows stabilizing x (the orbit-map family evaluated at x itself).
 * Their supports must coincide pointwise; M is the ratio on the common
 * support and 1 off it.  delta(eta) = mu(src eta) c(rng eta) / (mu(rng eta)
 * c(src eta)) is the derivative of mu o beta^{-1} by mu o beta, evaluated on
 * singletons; it inverts the modular function and satisfies
 * M(x eta) = M(x) delta(eta) exactly on supports. */
struct RNData {
  UnitMeasure mu;             // on H^0
  std::vector<Rational> nu;   // per orbit of X/H
  OrbitSpace orbits;          // right_orbits(h, x)
  std::vector<Rational> stabw;     // per point
  std::vector<Rational> m;         // per point, 1 off support
  std::vector<char> m_on;          // per point
  std::vector<Rational> delta;     // per H arrow, 1 off support
  std::vector<char> delta_on;      // per H arrow
};

/* Throws IncompatibleMeasures naming the first point where exactly one of
 * the two global measures vanishes. */
RNData rn_data(const Groupoid& h, const HaarSystem& beta, const Bispace& x,
               const MeasureFamily& lam, const UnitMeasure& mu,
               const std::vector<Rational>& nu);

/* mu = 1 on every unit, nu = 1 on every orbit; compatible whenever every
 * point mass is positive. */
RNData uniform_rn(const Correspondence& c);

/* delta of the pair (beta, mu) alone, for the L representation. */
std::vector<Rational> beta_delta(const Groupoid& h, const HaarSystem& beta,
                                 const UnitMeasure& mu);

/* Dense coordinates for sections of the bundle over H^0: the block of unit
 * position u starts at offset[u]. */
struct SectionLayout {
  std::vector<int> dims, offset;
  int total = 0;
};
SectionLayout unit_layout(const Groupoid& h, const RepBundle& rep);

/* Coordinates for the induced bundle over X/H.  A section assigns to each
 * point x a vector in the space at sX(x) with pi_eta(zeta(x eta)) = zeta(x);
 * it is determined by its values at the orbit representatives, and the value
 * at a representative must be fixed by the stabilizer.  basis[orbit] holds
 * orthonormal columns spanning that fixed subspace (possibly none), and
 * transport[x] is an arrow carrying the representative of [x] to x, so
 * zeta(x) = U(inv transport[x]) zeta(rep). */
struct OrbitLayout {
  OrbitSpace orbits;
  std::vector<Idx> transport;  // per point
  std::vector<CMat> basis;     // per orbit, dims(sX(rep)) x k
  std::vector<int> offset;     // per orbit
  int total = 0;
};
OrbitLayout orbit_layout(const Groupoid& h, const Bispace& x, const RepBundle& rep,
                         double tol = 1e-10);

/* The ket integral evaluated at one point p (the value of the section
 * |f>> xi there):
 *   sum over eta in H^{sX(p)} of f(p eta) U(eta) xi(src eta)
 *                                sqrt(M(p eta)) w_beta(eta).
 * The beta weight realizes the measure beta^{sX(p)} on singletons. */
CVec ket_value_at(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                  const SectionLayout& ul, const Fn<CD>& f, const CVec& xi, Idx p);

/* |f>> as a matrix from unit-layout to orbit-layout coordinates, and <<f| the
 * other way:
 *   (<<f| zeta)(u) = sum over x in X_u of conj(f(x)) zeta(x)
 *                                         (1 / sqrt(M(x))) mass(x).
 * The formal adjointness is weighted: nu([a]) K[a,b] = conj(B[b,a]) mu(u(b)). */
CMat ket_matrix(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                const SectionLayout& ul, const OrbitLayout& ol, const Fn<CD>& f);
CMat bra_matrix(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                const SectionLayout& ul, const OrbitLayout& ol, const Fn<CD>& f);

/* The *-representation of C_c(H, beta) on sections over H^0:
 *   L(psi) xi(u) = sum over eta in H^u of psi(eta) U(eta) xi(src eta)
 *                                         sqrt(delta(eta)) w_beta(eta).
 * Multiplicative for the convolution, and *-preserving for the mu-weighted
 * inner product <xi, zeta> = sum mu(u) <xi(u), zeta(u)>. */
CMat l_matrix(const Groupoid& h, const HaarSystem& beta, const UnitMeasure& mu,
              const RepBundle& rep, const SectionLayout& ul, const Fn<CD>& psi);

/* The four checks behind the positivity of the inner product:
 *   1  nu o beta_X is H-invariant: nbx(x) w(eta) = nbx(x eta) w(inv eta)
 *      for every composable pair, exactly;
 *   2  M(x eta) = M(x) delta(eta) exactly on supports, supports invariant;
 *   3  <<f| is formally adjoint to |f>>, against exhaustive basis sections;
 *   4  <<f| o |f>> = L(<f, f>) in operator norm, plus the norm bound
 *      ||  |f>> xi ||^2 <= || <f,f> || ||xi||^2.
 * Checks 3 and 4 run over `trials` random f. */
struct PositivityLemmasReport {
  bool measure_invariance = false;
  std::string invariance_witness;
  bool rn_cocycle = false;
  std::string cocycle_witness;
  double adjoint_residual = 0.0;
  double keystone_residual = 0.0;
  double norm_bound_excess = 0.0;
  int trials = 0;
  bool ok = false;

  std::string str() const;
};
PositivityLemmasReport verify_positivity_lemmas(const Correspondence& c,
                                                const RepBundle& rep, const RNData& rn,
                                                int trials, uint64_t seed,
                                                double tol = 1e-9,
                                                double norm_tol = 1e-7);

}  // namespace gpd
