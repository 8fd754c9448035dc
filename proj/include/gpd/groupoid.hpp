#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gpd/common.hpp"
#include "gpd/rational.hpp"

namespace gpd {

using Idx = int;
constexpr Idx kUndef = -1;

/* Finite groupoid on a dense arrow table.  Units are a subset of the arrows;
 * src/rng map every arrow to a unit arrow.  comp is the full n*n composition
 * table with kUndef where src(first) != rng(second); composition follows the
 * function convention, comp(a, b) = "a after b", defined iff src(a) = rng(b).
 * The struct is plain data plus derived lookup tables; validate_groupoid
 * checks the axioms and is the only place that enforces them. */
struct Groupoid {
  std::string id;
  int n = 0;
  std::vector<std::string> names;
  std::vector<Idx> units;      // indices of unit arrows, ascending
  std::vector<Idx> src, rng;   // arrow -> unit arrow index
  std::vector<Idx> inv;        // arrow -> arrow
  std::vector<Idx> comp;       // dense n*n, row = first factor

  // derived (finalize)
  std::vector<int> unit_pos;   // arrow -> position in units, -1 otherwise
  std::vector<std::vector<Idx>> fiber_r;  // per units position: { a : rng(a) = u }
  std::vector<std::vector<Idx>> fiber_s;  // per units position: { a : src(a) = u }

  Idx compose(Idx a, Idx b) const { return comp[static_cast<size_t>(a) * n + b]; }
  bool composable(Idx a, Idx b) const { return compose(a, b) != kUndef; }
  bool is_unit(Idx a) const { return unit_pos[a] >= 0; }
  int upos(Idx unit_arrow) const { return unit_pos[unit_arrow]; }
  const std::string& name(Idx a) const { return names[a]; }
  Idx arrow_by_name(const std::string& s) const;

  void finalize();  // builds unit_pos and the fibers; idempotent
};

ValidationReport validate_groupoid(const Groupoid& g);

/* Haar system: one positive rational weight per arrow, alpha^u({a}) = weight[a]
 * on the range fiber over u.  Left invariance of the family is equivalent to
 * weight(a) = weight(src(a)) for every arrow (weights are a function of the
 * source unit); validate_haar checks the invariance identity on the whole
 * composition table and reports the characterization when it fails. */
struct HaarSystem {
  std::string groupoid_id;
  std::vector<Rational> weight;

  const Rational& w(Idx a) const { return weight[a]; }
};

ValidationReport validate_haar(const Groupoid& g, const HaarSystem& h);
HaarSystem counting_haar(const Groupoid& g);
HaarSystem haar_from_unit_weights(const Groupoid& g, const std::vector<Rational>& unit_w);

/* Measure on the unit space; mass indexed by units position. */
struct UnitMeasure {
  std::string groupoid_id;
  std::vector<Rational> mass;

  const Rational& at(const Groupoid& g, Idx unit_arrow) const {
    return mass[g.upos(unit_arrow)];
  }
};

UnitMeasure uniform_unit_measure(const Groupoid& g);

/* mu is quasi-invariant iff the induced measure on arrows and its image under
 * inversion have identical supports; finitely that is
 * mu(src a) > 0 <=> mu(rng a) > 0 for every arrow. */
bool is_quasi_invariant(const Groupoid& g, const HaarSystem& h, const UnitMeasure& mu);

/* Modular function D(a) = mu(rng a) * weight(src a) / (mu(src a) * weight(rng a))
 * on the support of mu; off-support arrows get the conventional value 1.
 * Throws SupportMismatch naming the arrow when exactly one endpoint mass
 * vanishes.  D is an exact homomorphism into the positive rationals on the
 * support: D(ab) = D(a) D(b), D(inv a) = 1/D(a). */
std::vector<Rational> modular_function(const Groupoid& g, const HaarSystem& h,
                                       const UnitMeasure& mu);

// ---------------------------------------------------------------------------
// small construction kit (used by tests, the gallery and the CLI)

/* Group as a one-unit groupoid: element 0 is the identity; mult(i, j) gives
 * the product.  Arrow names are e, g1, g2, ... unless names are passed. */
Groupoid group_groupoid(const std::string& id, int order,
                        const std::function<int(int, int)>& mult,
                        std::vector<std::string> names = {});
Groupoid cyclic_group(const std::string& id, int order);

/* Space: units only, no nontrivial arrows. */
Groupoid space_groupoid(const std::string& id, const std::vector<std::string>& points);

/* Pair groupoid on k points: arrows (i,j) named "i.j", src (i,j) = j,
 * rng (i,j) = i, (i,j)(j,k) = (i,k). */
Groupoid pair_groupoid(const std::string& id, int k);

Groupoid disjoint_union(const std::string& id, const Groupoid& a, const Groupoid& b);

/* Opposite groupoid: same arrows, src/rng swapped, comp flipped.  Used to
 * recast right actions as left actions. */
Groupoid opposite_groupoid(const Groupoid& g);

}  // namespace gpd
