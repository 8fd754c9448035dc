#pragma once

#include <array>

#include "gpd/correspondence.hpp"

namespace gpd {

/* Ready-made correspondences.  Each constructor assembles one of the classic
 * situations (space maps, quivers, group homomorphisms, measured group
 * actions, canonical quotient families, equivalences, generalised morphisms,
 * subgroup sandwiches, induction from a subgroupoid) as a fully validated
 * Correspondence, and the registry at the bottom names one instance of each
 * for the CLI and the verification suites. */

/* Subset of arrows closed under composition and inverse and containing the
 * end units of its members, reindexed as a groupoid of its own.  Names are
 * inherited.  Throws InputError naming the first closure violation. */
Groupoid subgroupoid(const std::string& id, const Groupoid& g, std::vector<Idx> arrows);

// ---------------------------------------------------------------------------
// space maps and quivers

/* A finite map f: X -> Y joins the two spaces into a bimodule on functions
 * on X: Y acts (trivially) through f on the left, X through the identity on
 * the right, so both module actions are pointwise products and the adjoining
 * function is identically 1.  masses re-weights the family of point measures
 * (one singleton fiber per point; all ones by default). */
Correspondence space_map_correspondence(const std::string& id,
                                        const std::vector<std::string>& xpts,
                                        const std::vector<std::string>& ypts,
                                        const std::vector<Idx>& f,
                                        std::vector<Rational> masses = {});

/* A finite quiver as a self-correspondence of its vertex space: functions on
 * the edge set, r feeding the left momentum, s the right one, and the
 * measure family along s (counting by default).  The inner-product table of
 * the module is the mass-weighted adjacency data of the graph.  A mass
 * vector that kills a whole nonempty s-fiber violates properness and is
 * rejected by the family validator. */
Correspondence quiver_correspondence(const std::string& id,
                                     const std::vector<std::string>& verts,
                                     const std::vector<std::string>& edges,
                                     const std::vector<Idx>& smap,
                                     const std::vector<Idx>& rmap,
                                     std::vector<Rational> masses = {});

// ---------------------------------------------------------------------------
// group homomorphisms

/* A homomorphism phi: H -> G of finite groups turns the arrow set of G into
 * a bimodule from H to G: H acts by phi-twisted left multiplication, G by
 * right multiplication, and the measure is the inverted Haar of G (a single
 * fiber; mass(x) = alpha(inv x)).  The adjoining function is the modular
 * ratio delta_G(phi(eta)) / delta_H(eta); both modular functions are
 * recomputed here through modular_function and the computed adjoining
 * function is checked against the ratio, which collapses to 1 because finite
 * groups are unimodular.  Throws InputError when phi is not a homomorphism. */
Correspondence group_hom_correspondence(const std::string& id, const Groupoid& h,
                                        const HaarSystem& beta, const Groupoid& g,
                                        const HaarSystem& alpha,
                                        const std::vector<Idx>& phi);

/* The mirror of the same data (phi is proper for free at finite scale):
 * G becomes a bimodule from G to H, G acting by left multiplication and H by
 * phi-twisted right multiplication.  The adjoining function is identically
 * 1, which is checked exactly after the build. */
Correspondence proper_group_hom_correspondence(const std::string& id, const Groupoid& g,
                                               const HaarSystem& alpha, const Groupoid& h,
                                               const HaarSystem& beta,
                                               const std::vector<Idx>& phi);

// ---------------------------------------------------------------------------
// measured group actions over a point

/* A finite group acting on a weighted finite set, seen from the one-point
 * space on the right: the module is the weighted l2 space of (points,
 * masses) and the adjoining function is the derivative
 * Delta(g, x) = masses(x) / masses(g x) of the translated measure.  The
 * support of masses must be invariant (SupportNotInvariant otherwise). */
Correspondence strong_quasi_invariant_correspondence(
    const std::string& id, const Groupoid& g, const HaarSystem& alpha,
    const std::vector<std::string>& points, const std::function<Idx(Idx, Idx)>& act,
    std::vector<Rational> masses);

// ---------------------------------------------------------------------------
// canonical quotient family

/* The canonical family on a bispace whose left orbit space matches the right
 * unit space: lambda^{sX(x)}({z}) = sum of alpha(gamma) over the arrows with
 * inv(gamma) x = z.  Requires the induced map from left orbits to H^0 to be
 * a bijection (QuotientNotBijective names the failure).  The result is
 * H-invariant and left invariant, so a correspondence built on it has
 * adjoining function identically 1. */
MeasureFamily macho_stadler_family(const Groupoid& g, const HaarSystem& alpha,
                                   const Groupoid& h, const Bispace& x);

// ---------------------------------------------------------------------------
// equivalences

/* The six equivalence axioms for a bispace: (i)/(ii) the two actions are
 * free (properness holds automatically on finite sets), (iii) the momentum
 * maps are open (automatic in the discrete topology, recorded as passing),
 * (iv) the actions commute, (v) rX induces a bijection X/H -> G^0, (vi) sX
 * induces a bijection G\X -> H^0. */
struct EquivalenceAxioms {
  std::array<CheckResult, 6> axiom;

  bool all() const;
  std::string str() const;
};
EquivalenceAxioms check_equivalence_axioms(const Groupoid& g, const Groupoid& h,
                                           const Bispace& x);

/* Correspondence of an equivalence bispace over its canonical quotient
 * family.  Throws InvalidStructure naming the first failing axiom.  The
 * adjoining function is identically 1 and the module is full on both sides. */
Correspondence equivalence_correspondence(const Groupoid& g, const HaarSystem& alpha,
                                          const Groupoid& h, const HaarSystem& beta,
                                          const Bispace& x);

/* Fullness on both sides: right fullness as in correspondence_flags, left
 * fullness when every arrow of G moves some point of positive mass. */
struct FullnessPair {
  bool left = false;
  bool right = false;
};
FullnessPair fullness_pair(const Correspondence& c);

// ---------------------------------------------------------------------------
// generalised morphisms

/* A left action theta of G on the arrow set of H, commuting with right
 * multiplication, together with a positive transfer function delta_theta on
 * the composable pairs, gives a bimodule on functions on H over the inverted
 * Haar family of H (mass(x) = beta(inv x)).  The transfer identity -- the
 * integrated change-of-variables equality defining delta_theta -- is checked
 * exactly and InputError names the violating pair; on success the computed
 * adjoining function reproduces delta_theta on the support.  anchor gives
 * the momentum map of theta into G^0. */
Correspondence buneci_stachura_correspondence(
    const std::string& id, const Groupoid& g, const HaarSystem& alpha,
    const Groupoid& h, const HaarSystem& beta, const std::function<Idx(Idx)>& anchor,
    const std::function<Idx(Idx, Idx)>& theta,
    const std::function<Rational(Idx, Idx)>& delta_theta);

// ---------------------------------------------------------------------------
// transformation groupoid sandwich

/* Subgroups H, K of a finite group G acting on the right of a finite set:
 * the arrows of X x| G form a bispace between X x| H and X x| K by
 * multiplication on the two sides, carrying the inverted Haar of G on each
 * source fiber.  The adjoining function is the modular ratio
 * delta_G / delta_H, recomputed through modular_function and identically 1
 * at finite scale.  h_elems / k_elems list the subgroup elements (validated
 * for closure); h_scale / k_scale scale the counting Haar systems of the
 * subgroups. */
Correspondence subgroup_transformation_correspondence(
    const std::string& id, const Groupoid& g, const HaarSystem& lam,
    const std::vector<Idx>& h_elems, const std::vector<Idx>& k_elems,
    const std::vector<std::string>& xpts, const std::function<Idx(Idx, Idx)>& act,
    const Rational& h_scale = Rational(1), const Rational& k_scale = Rational(1));

// ---------------------------------------------------------------------------
// induction from a subgroupoid

/* A subgroupoid H of G (arrow subset) induces the bispace of arrows of G
 * whose source unit lies in H^0, with G multiplying on the left and H on the
 * right, over the canonical quotient family; the adjoining function is
 * identically 1.  The result is an equivalence exactly when the six axioms
 * survive -- check_equivalence_axioms reports which fail (typically (v) when
 * some G-unit sees no arrow into H^0, or when right H-orbits do not separate
 * a range fiber).  h_unit_weights feeds the subgroupoid Haar system
 * (counting by default). */
Correspondence induction_correspondence(const std::string& id, const Groupoid& g,
                                        const HaarSystem& alpha,
                                        const std::vector<Idx>& h_arrows,
                                        std::vector<Rational> h_unit_weights = {});

// ---------------------------------------------------------------------------
// registry

/* One ready-to-build instance per construction: the symbolic prediction of
 * its adjoining function and an exact checker for that prediction. */
struct GalleryEntry {
  std::string name;
  std::string params;          // human-readable parameter summary
  std::string expected_delta;  // symbolic: "1", "delta_G(phi)/delta_H", ...
  std::function<Correspondence()> build;
  std::function<CheckResult(const Correspondence&)> check_delta;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* gallery_entry(const std::string& name);  // nullptr when absent

}  // namespace gpd
