#pragma once

#include "gpd/fn.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

/* Left-G right-H bispace on a finite point set.  rX / sX are the momentum
 * maps into the unit spaces; lact is dense over (arrow, point) with kUndef
 * where src_G(arrow) != rX(point), ract likewise for sX(point) != rng_H(arrow).
 * The two groupoids are referenced by id; validators take them explicitly. */
struct Bispace {
  std::string id;
  std::string left_id, right_id;
  int npts = 0;
  std::vector<std::string> points;
  std::vector<Idx> rx, sx;   // point -> unit arrow of G resp. H
  std::vector<Idx> lact_;    // G.n * npts
  std::vector<Idx> ract_;    // npts * H.n
  int gn = 0, hn = 0;        // arrow counts the tables were built against

  Idx lact(Idx gamma, Idx x) const { return lact_[static_cast<size_t>(gamma) * npts + x]; }
  Idx ract(Idx x, Idx eta) const { return ract_[static_cast<size_t>(x) * hn + eta]; }
  bool can_l(Idx gamma, Idx x) const { return lact(gamma, x) != kUndef; }
  bool can_r(Idx x, Idx eta) const { return ract(x, eta) != kUndef; }
  Idx point_by_name(const std::string& s) const;
};

/* Builder taking the partial actions as callables; composability is derived
 * from the momentum maps, the callables are consulted only on composable
 * input. */
Bispace make_bispace(const std::string& id, const Groupoid& g, const Groupoid& h,
                     std::vector<std::string> points,
                     const std::function<Idx(Idx)>& rx,
                     const std::function<Idx(Idx)>& sx,
                     const std::function<Idx(Idx, Idx)>& lact,
                     const std::function<Idx(Idx, Idx)>& ract);

ValidationReport validate_bispace(const Groupoid& g, const Groupoid& h, const Bispace& x);

inline std::string points_carrier(const Bispace& x) { return "points:" + x.id; }

/* Family of measures along sX: one mass per point, lambda_u({x}) = mass[x] on
 * the fiber X_u = sX^{-1}(u).  H-invariance is mass(x eta) = mass(x);
 * properness asks each nonempty fiber over the image of sX for positive total
 * mass. */
struct MeasureFamily {
  std::string bispace_id;
  std::vector<Rational> mass;

  const Rational& at(Idx x) const { return mass[x]; }
};

ValidationReport validate_measure_family(const Groupoid& h, const Bispace& x,
                                         const MeasureFamily& lam);
MeasureFamily counting_family(const Bispace& x);

/* Adjoining function on composable (arrow of G, point) pairs; off-support
 * entries (mass zero) hold the conventional value 1 and kernels only ever
 * multiply them against vanishing masses. */
struct AdjoiningFn {
  std::string bispace_id;
  int gn = 0, npts = 0;
  std::vector<Rational> value_;    // dense gn * npts, 1 where not composable
  std::vector<char> on_support_;

  const Rational& value(Idx gamma, Idx x) const {
    return value_[static_cast<size_t>(gamma) * npts + x];
  }
  Rational& value(Idx gamma, Idx x) { return value_[static_cast<size_t>(gamma) * npts + x]; }
  bool on_support(Idx gamma, Idx x) const {
    return on_support_[static_cast<size_t>(gamma) * npts + x] != 0;
  }
};

/* Delta(gamma, x) = weight(rng gamma) mass(x) / (weight(src gamma) mass(gamma x)).
 * Requires the support of lambda to be invariant under the left action
 * (SupportNotInvariant names the first violating pair otherwise). */
AdjoiningFn compute_adjoining(const Groupoid& g, const HaarSystem& alpha,
                              const Bispace& x, const MeasureFamily& lam);

struct CheckResult {
  bool ok = true;
  std::string witness;
};

/* Exhaustive transcription of the defining identity of the adjoining
 * function: for every unit u of H and every point-mass test function F at a
 * composable pair (gamma, y),
 *   mass(y) weight(rng gamma)  =  mass(gamma y) Delta(gamma, y) weight(src gamma)
 * restricted to sX(y) = u.  Point masses span all F, so this is the full
 * integral identity. */
CheckResult verify_condition_iv(const Groupoid& g, const HaarSystem& alpha,
                                const Bispace& x, const MeasureFamily& lam,
                                const AdjoiningFn& delta);

// ---------------------------------------------------------------------------
// quotients

struct OrbitSpace {
  std::vector<int> orbit_of;  // element -> orbit index
  std::vector<Idx> reps;      // orbit -> first element
  int count = 0;
};

OrbitSpace right_orbits(const Groupoid& h, const Bispace& x);   // points / H
OrbitSpace unit_orbits(const Groupoid& h);                      // H^0 / H (unit positions)

/* Quotient family [lambda] on X/H along the induced map X/H -> H^0/H:
 * [lambda]^{[u]}({orbit}) = sum of mass over orbit intersected with the fiber
 * X_u.  Stored per unit; well-definedness (independence of the representative
 * u within its H^0-orbit) is part of validate result below. */
struct QuotientFamily {
  OrbitSpace xorbits;
  OrbitSpace uorbits;
  std::vector<std::vector<Rational>> mass_by_unit;  // [unit pos][orbit]
};

QuotientFamily quotient_measure_family(const Groupoid& h, const Bispace& x,
                                       const MeasureFamily& lam);
CheckResult quotient_family_well_defined(const Groupoid& h, const Bispace& x,
                                         const QuotientFamily& q);

/* beta_X from the Haar system of H: the family along the orbit map with
 * beta_X^{[x]}({y}) = sum of weight(eta) over eta with x eta = y.  Evaluated
 * at an explicit representative; representative independence is a property
 * tested separately. */
std::vector<Rational> beta_x_at(const Groupoid& h, const HaarSystem& beta,
                                const Bispace& x, Idx rep);

struct BetaX {
  OrbitSpace orbits;
  std::vector<std::vector<Rational>> mass;  // [orbit][point]
};

BetaX beta_x(const Groupoid& h, const HaarSystem& beta, const Bispace& x);

// ---------------------------------------------------------------------------
// transformation groupoids

/* G |x X (left) or X x| H (right) as a groupoid together with the pair
 * decoding tables.  Haar weights are inherited from the acting groupoid
 * (weight of (gamma, x) is weight_alpha(gamma), resp. weight_beta(eta) for
 * (x, eta)); that is left invariant because the source unit of a pair arrow
 * determines the source unit of its groupoid part. */
struct TransformationGroupoid {
  Groupoid gpd;
  std::vector<std::pair<Idx, Idx>> arrow_pair;  // arrow -> (gamma, x) resp. (x, eta)
  std::vector<Idx> unit_of_point;               // point -> unit arrow
  std::vector<Idx> pair_index_;                 // dense decode table

  Idx pair_index(Idx a, Idx b, int bsize) const {
    return pair_index_[static_cast<size_t>(a) * bsize + b];
  }
};

TransformationGroupoid left_transformation_groupoid(const Groupoid& g, const Bispace& x);
TransformationGroupoid right_transformation_groupoid(const Groupoid& h, const Bispace& x);

HaarSystem left_transformation_haar(const TransformationGroupoid& tg, const HaarSystem& alpha);
HaarSystem right_transformation_haar(const TransformationGroupoid& tg, const HaarSystem& beta);

}  // namespace gpd
