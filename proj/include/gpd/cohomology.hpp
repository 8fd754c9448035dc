#pragma once

#include "gpd/bispace.hpp"
#include "gpd/linalg.hpp"

namespace gpd {

// ---------------------------------------------------------------------------
// groupoid-on-groupoid actions

/* Left action of one finite groupoid (the actor) on another (the target):
 * momentum sends target arrows to actor units and act(e, t) is defined
 * exactly when src_actor(e) = momentum(t).  Axioms: acting distributes over
 * target composition, actor units act as the identity on their fiber, and
 * composing in the actor composes the actions. */
struct GpdAction {
  std::string id;
  std::string actor_id, target_id;
  int an = 0, tn = 0;        // arrow counts of actor / target
  std::vector<Idx> momentum; // target arrow -> actor unit arrow
  std::vector<Idx> act_;     // an * tn, kUndef off the fiber

  Idx act(Idx e, Idx t) const { return act_[static_cast<size_t>(e) * tn + t]; }
  bool can(Idx e, Idx t) const { return act(e, t) != kUndef; }
};

/* Builder taking momentum and the action as callables; the action callable
 * is consulted only on composable input. */
GpdAction make_gpd_action(const std::string& id, const Groupoid& actor,
                          const Groupoid& target,
                          const std::function<Idx(Idx)>& momentum,
                          const std::function<Idx(Idx, Idx)>& act);

ValidationReport validate_gpd_action(const Groupoid& actor, const Groupoid& target,
                                     const GpdAction& a);

/* One-point actor acting trivially; the identity coefficient system. */
struct TrivialAction {
  Groupoid actor;
  GpdAction action;
};
TrivialAction trivial_action(const Groupoid& target);

/* For a finite *group* actor, every arrow acts as a bijective functor on the
 * target and the assignment is a homomorphism into the functor group:
 * phi(e0 e1) = phi(e0) . phi(e1), phi(inv e) = phi(e)^{-1}.  Exhaustive. */
CheckResult group_action_functor_check(const Groupoid& actor, const Groupoid& target,
                                       const GpdAction& a);

/* The two readings of the induced action on a bispace's transformation
 * groupoids.  They are genuinely different actions (different actor, carrier
 * and momentum), so both are built and both are validated:
 *   - the left groupoid acting on X x| H by gamma.(x, eta) = (gamma x, eta);
 *   - the opposite of the right groupoid acting on G |x X by
 *     eta.(gamma, x) = (gamma, x eta). */
struct TransformationActions {
  TransformationGroupoid xh;  // X x| H, acted on by G
  TransformationGroupoid gx;  // G |x X, acted on by the opposite of H
  Groupoid h_op;
  GpdAction g_on_xh;
  GpdAction hop_on_gx;
};
TransformationActions transformation_action(const Groupoid& g, const Groupoid& h,
                                            const Bispace& x);

// ---------------------------------------------------------------------------
// invariant cochain complex with rational coefficients

/* Composable tuple enumerations; adjacent arrows compose. */
std::vector<std::array<Idx, 2>> composable_pairs(const Groupoid& g);
std::vector<std::array<Idx, 3>> composable_triples(const Groupoid& g);

/* A cochain of degree n on the target groupoid, rational coefficients under
 * addition.  Storage per degree: 0 -> one value per unit position, 1 -> per
 * arrow, 2 -> per composable pair, 3 -> per composable triple (degree 3 only
 * ever appears as coboundary output).  Degree > 0 cochains are normalized:
 * zero on tuples containing a unit. */
struct Cochain {
  std::string groupoid_id;
  int degree = 0;
  std::vector<Rational> values;
};

Cochain zero_cochain(const Groupoid& g, int degree);

ValidationReport validate_cochain(const Groupoid& actor, const Groupoid& target,
                                  const GpdAction& a, const Cochain& f);

/* d^0(f)(g) = f(src g) - f(rng g); higher degrees get the alternating sum of
 * dropping the first arrow, composing adjacent pairs, dropping the last.
 * Input degree <= 2. */
Cochain coboundary(const Groupoid& g, const Cochain& f);

/* Coboundary vanishes identically.  Degree 0 is cross-checked against
 * constancy on the target's unit orbits, degree 1 against the additive
 * homomorphism identity. */
bool is_cocycle(const Groupoid& actor, const Groupoid& target, const GpdAction& a,
                const Cochain& f);

/* Basis bookkeeping for the invariant cochain space in one degree: tuples
 * are grouped into actor-invariance classes, tuples containing a unit are
 * excluded (class -1) in degree > 0. */
struct CochainBasis {
  int degree = 0;
  std::vector<int> class_of;  // tuple index -> class, -1 for excluded
  std::vector<Idx> reps;      // class -> tuple index of a representative
  int count = 0;
};
CochainBasis cochain_basis(const Groupoid& actor, const Groupoid& target,
                           const GpdAction& a, int degree);

/* Kernel, image and quotient dimensions of the complex at degree n over the
 * rationals, by exact rank computation.  n is 0 or 1. */
struct CohomologyDims {
  int z = 0, b = 0, h = 0;
};
CohomologyDims cohomology_dim(const Groupoid& actor, const Groupoid& target,
                              const GpdAction& a, int n);

// ---------------------------------------------------------------------------
// multiplicative degree-1 cocycles

/* Positive rational-valued functions on arrows that are homomorphisms into
 * the multiplicative rationals, checked exactly on a support mask: the mask
 * must contain every unit it touches with value 1, be closed under
 * composition, and the product identity must hold within it.  This is the
 * exact-arithmetic substitute for transporting through log. */
CheckResult is_multiplicative_cocycle(const Groupoid& g, const std::vector<Rational>& v,
                                      const std::vector<char>& support);
CheckResult is_multiplicative_cocycle(const Groupoid& g, const std::vector<Rational>& v);

struct MultiplicativeCocycle {
  std::vector<Rational> value;
  std::vector<char> support;
};

/* The adjoining function as a function on the left transformation groupoid,
 * supported where the point masses are positive. */
MultiplicativeCocycle adjoining_cocycle(const TransformationGroupoid& ltg,
                                        const Bispace& x, const MeasureFamily& lam,
                                        const AdjoiningFn& d);

/* The modular function of (g, haar, mu), supported where both endpoint
 * masses are positive. */
MultiplicativeCocycle modular_cocycle(const Groupoid& g, const HaarSystem& haar,
                                      const UnitMeasure& mu);

}  // namespace gpd
