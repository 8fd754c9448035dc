#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/gallery.hpp"
#include "gpd/cohomology.hpp"
#include "gpd/reptheory.hpp"

using namespace gpd;

namespace {

struct Caught {
  bool threw = false;
  ErrorCode code = ErrorCode::InputError;
  std::string msg;
};

template <typename F>
Caught catching(F&& f) {
  Caught c;
  try {
    f();
  } catch (const Error& e) {
    c.threw = true;
    c.code = e.code();
    c.msg = e.what();
  }
  return c;
}

bool mentions(const Caught& c, const std::string& needle) {
  return c.msg.find(needle) != std::string::npos;
}

Fn<CQ> point_delta(const Correspondence& c, Idx p) {
  return delta_fn<CQ>(points_carrier(c.x), c.x.npts, p);
}

Fn<CQ> left_delta(const Correspondence& c, Idx a) {
  return delta_fn<CQ>(arrows_carrier(c.g), c.g.n, a);
}

bool delta_table_is_one(const Correspondence& c) {
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p)
      if (c.delta.value(a, p) != 1) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// subgroupoid

TEST_CASE("subgroupoid keeps closed arrow sets and rejects the rest") {
  Groupoid z4 = cyclic_group("z4", 4);
  Groupoid sub = subgroupoid("even", z4, {0, 2});
  CHECK(sub.n == 2);
  CHECK(sub.units.size() == 1);
  CHECK(sub.name(1) == z4.name(2));
  CHECK(sub.compose(1, 1) == 0);  // 2 + 2 = 0 in Z/4

  Groupoid p3 = pair_groupoid("p3", 3);
  Groupoid corner = subgroupoid("corner", p3,
                                {p3.arrow_by_name("1.1"), p3.arrow_by_name("1.2"),
                                 p3.arrow_by_name("2.1"), p3.arrow_by_name("2.2")});
  CHECK(corner.n == 4);
  CHECK(corner.units.size() == 2);

  CHECK(catching([&] { subgroupoid("e", z4, {}); }).code == ErrorCode::InputError);
  CHECK(catching([&] { subgroupoid("r", z4, {0, 7}); }).code == ErrorCode::InputError);

  Caught no_inv = catching([&] { subgroupoid("i", z4, {0, 1}); });
  CHECK(no_inv.code == ErrorCode::InputError);
  CHECK(mentions(no_inv, "inverse"));

  Caught no_comp = catching([&] { subgroupoid("c", z4, {0, 1, 3}); });
  CHECK(no_comp.code == ErrorCode::InputError);
  CHECK(mentions(no_comp, "composition"));
}

// ---------------------------------------------------------------------------
// space maps

TEST_CASE("space map correspondences multiply pointwise through the map") {
  // identity map: left deltas act as coordinate projections
  Correspondence id2 = space_map_correspondence("id2", {"x1", "x2"}, {"y1", "y2"}, {0, 1});
  Fn<CQ> k = zero_fn<CQ>(points_carrier(id2.x), 2);
  k.v[0] = CQ{Rational(3)};
  k.v[1] = CQ{Rational(5)};
  Fn<CQ> prj = left_action(id2, left_delta(id2, 0), k);
  CHECK(prj.v[0] == CQ{Rational(3)});
  CHECK(prj.v[1] == CQ{});

  // fold: (h . k)(x) = h(f(x)) k(x), so y1 picks out the fiber {x1, x2}
  Correspondence fold =
      space_map_correspondence("fold", {"x1", "x2", "x3"}, {"y1", "y2"}, {0, 0, 1});
  Fn<CQ> f = zero_fn<CQ>(points_carrier(fold.x), 3);
  f.v[0] = CQ{Rational(1)};
  f.v[1] = CQ{Rational(2)};
  f.v[2] = CQ{Rational(5)};
  Fn<CQ> over_y1 = left_action(fold, left_delta(fold, 0), f);
  Fn<CQ> over_y2 = left_action(fold, left_delta(fold, 1), f);
  CHECK(over_y1.v[0] == CQ{Rational(1)});
  CHECK(over_y1.v[1] == CQ{Rational(2)});
  CHECK(over_y1.v[2] == CQ{});
  CHECK(over_y2.v[0] == CQ{});
  CHECK(over_y2.v[2] == CQ{Rational(5)});
  CHECK(delta_table_is_one(fold));
  CHECK(nondegeneracy_check(fold).rank == 3);

  // inner products land on the unit arrows of X weighted by the point masses
  Correspondence wtd = space_map_correspondence(
      "wtd", {"x1", "x2", "x3"}, {"y1", "y2"}, {0, 0, 1},
      {Rational(1), Rational(2), Rational(3)});
  for (Idx i = 0; i < 3; ++i)
    for (Idx j = 0; j < 3; ++j) {
      Fn<CQ> ip = inner_product(wtd, point_delta(wtd, i), point_delta(wtd, j));
      for (Idx e = 0; e < wtd.h.n; ++e) {
        CQ want = (i == j && e == i) ? CQ{wtd.lam.mass[i]} : CQ{};
        CHECK(ip.v[e] == want);
      }
    }

  CHECK(catching([&] {
          space_map_correspondence("bad", {"x"}, {"y"}, {3});
        }).code == ErrorCode::InputError);
  CHECK(catching([&] {
          space_map_correspondence("bad", {"x", "z"}, {"y"}, {0, 0}, {Rational(1)});
        }).code == ErrorCode::InputError);
}

// ---------------------------------------------------------------------------
// quivers

TEST_CASE("quiver correspondences pair edges into a weighted adjacency") {
  Correspondence loop = quiver_correspondence("loop", {"v"}, {"e"}, {0}, {0});
  Fn<CQ> g11 = inner_product(loop, point_delta(loop, 0), point_delta(loop, 0));
  CHECK(g11.v[0] == CQ{Rational(1)});
  CHECK(nondegeneracy_check(loop).rank == 1);

  // two-cycle plus a parallel edge, masses 1, 1, 2:
  //   a: v -> w (1), b: w -> v (1), c: v -> w (2)
  Correspondence q = quiver_correspondence("q", {"v", "w"}, {"a", "b", "c"}, {0, 1, 0},
                                           {1, 0, 1}, {Rational(1), Rational(1), Rational(2)});
  // A(u, u') = sum over edges with range u and source u' of the edge mass
  auto adjacency = [&](Idx u, Idx up) {
    CQ total{};
    for (Idx e = 0; e < 3; ++e) {
      Fn<CQ> moved = left_action(q, left_delta(q, u), point_delta(q, e));
      total += inner_product(q, moved, point_delta(q, e)).v[up];
    }
    return total;
  };
  CHECK(adjacency(0, 0) == CQ{});
  CHECK(adjacency(0, 1) == CQ{Rational(1)});
  CHECK(adjacency(1, 0) == CQ{Rational(3)});
  CHECK(adjacency(1, 1) == CQ{});
  CHECK(nondegeneracy_check(q).rank == 3);

  // parallel edges stay orthogonal; their masses sit on the shared source unit
  Correspondence par = quiver_correspondence("par", {"v", "w"}, {"e1", "e2"}, {0, 0},
                                             {1, 1}, {Rational(1), Rational(2)});
  CHECK(inner_product(par, point_delta(par, 0), point_delta(par, 0)).v[0] == CQ{Rational(1)});
  CHECK(inner_product(par, point_delta(par, 1), point_delta(par, 1)).v[0] == CQ{Rational(2)});
  CHECK(inner_product(par, point_delta(par, 0), point_delta(par, 1)).v[0] == CQ{});
  CHECK(inner_product(par, point_delta(par, 0), point_delta(par, 0)).v[1] == CQ{});

  // a fiber with zero total mass is not a proper family
  CHECK(catching([&] {
          quiver_correspondence("z", {"v"}, {"e"}, {0}, {0}, {Rational(0)});
        }).code == ErrorCode::InvalidStructure);

  CHECK(catching([&] {
          quiver_correspondence("r", {"v"}, {"e"}, {0}, {4});
        }).code == ErrorCode::InputError);
}

// ---------------------------------------------------------------------------
// group homomorphisms

TEST_CASE("a homomorphism pulls the left regular module back along its image") {
  Groupoid z2 = cyclic_group("z2", 2);
  Groupoid z4 = cyclic_group("z4", 4);

  // identity hom: <d_x, d_y> is the delta at x^{-1} y
  Correspondence idm =
      group_hom_correspondence("idm", z2, counting_haar(z2), z2, counting_haar(z2), {0, 1});
  Fn<CQ> ip01 = inner_product(idm, point_delta(idm, 0), point_delta(idm, 1));
  CHECK(ip01.v[0] == CQ{});
  CHECK(ip01.v[1] == CQ{Rational(1)});

  // inclusion Z/2 -> Z/4 by 1 |-> 2
  Correspondence inc =
      group_hom_correspondence("inc", z2, counting_haar(z2), z4, counting_haar(z4), {0, 2});
  Fn<CQ> moved = left_action(inc, left_delta(inc, 1), point_delta(inc, 1));
  CHECK(moved.v[3] == CQ{Rational(1)});  // phi(1) + 1 = 3
  CHECK(moved.v[0] == CQ{});
  CHECK(nondegeneracy_check(inc).rank == 4);
  CHECK(correspondence_flags(inc).full);
  CHECK(delta_table_is_one(inc));

  // collapsing hom: the left action becomes trivial but the module survives
  Groupoid z3 = cyclic_group("z3", 3);
  Correspondence col =
      group_hom_correspondence("col", z3, counting_haar(z3), z2, counting_haar(z2), {0, 0, 0});
  Fn<CQ> still = left_action(col, left_delta(col, 2), point_delta(col, 1));
  CHECK(still.v[1] == CQ{Rational(1)});
  CHECK(nondegeneracy_check(col).rank == 2);

  // scaled Haar weights ride through the inverted family untouched
  HaarSystem h3 = haar_from_unit_weights(z4, {Rational(3)});
  Correspondence sc = group_hom_correspondence("sc", z2, counting_haar(z2), z4, h3, {0, 2});
  CHECK(sc.lam.mass[0] == Rational(3));
  CHECK(sc.lam.mass[3] == Rational(3));
  CHECK(delta_table_is_one(sc));

  Caught bad = catching([&] {
    group_hom_correspondence("bad", z2, counting_haar(z2), z4, counting_haar(z4), {0, 1});
  });
  CHECK(bad.code == ErrorCode::InputError);
  CHECK(mentions(bad, "not a homomorphism"));
}

TEST_CASE("a quotient hom feeds the right action through its image") {
  Groupoid z2 = cyclic_group("z2", 2);
  Groupoid z4 = cyclic_group("z4", 4);
  Correspondence quo = proper_group_hom_correspondence(
      "quo", z2, counting_haar(z2), z4, counting_haar(z4), {0, 1, 0, 1});

  // <d_0, d_1> collects every eta with phi(eta) = 1
  Fn<CQ> ip = inner_product(quo, point_delta(quo, 0), point_delta(quo, 1));
  CHECK(ip.v[0] == CQ{});
  CHECK(ip.v[1] == CQ{Rational(1)});
  CHECK(ip.v[2] == CQ{});
  CHECK(ip.v[3] == CQ{Rational(1)});

  Fn<CQ> psi = delta_fn<CQ>(arrows_carrier(quo.h), quo.h.n, 1);
  Fn<CQ> ra = right_action(quo, point_delta(quo, 0), psi);
  CHECK(ra.v[1] == CQ{Rational(1)});  // 0 . phi(3) = 1, weight 1
  CHECK(ra.v[0] == CQ{});

  CHECK(delta_table_is_one(quo));

  Caught bad = catching([&] {
    proper_group_hom_correspondence("bad", z2, counting_haar(z2), z4, counting_haar(z4),
                                    {0, 1, 1, 1});
  });
  CHECK(bad.code == ErrorCode::InputError);
  CHECK(mentions(bad, "not a homomorphism"));
}

// ---------------------------------------------------------------------------
// quasi-invariant point masses

TEST_CASE("point masses drive the adjoining ratio on a one-unit base") {
  Groupoid z2 = cyclic_group("z2", 2);
  auto swap = [](Idx e, Idx p) { return e == 0 ? p : 1 - p; };

  Correspondence uni = strong_quasi_invariant_correspondence(
      "uni", z2, counting_haar(z2), {"p", "q"}, swap, {Rational(1), Rational(1)});
  CHECK(delta_table_is_one(uni));

  Correspondence wtd = strong_quasi_invariant_correspondence(
      "wtd", z2, counting_haar(z2), {"p", "q"}, swap, {Rational(1), Rational(2)});
  CHECK(wtd.delta.value(1, 0) == Rational(1, 2));
  CHECK(wtd.delta.value(1, 1) == Rational(2));
  CHECK(wtd.delta.value(0, 0) == Rational(1));

  // free Z/3 translation with masses 1, 2, 4: the ratio is a cocycle on G x X
  Groupoid z3 = cyclic_group("z3", 3);
  Correspondence rot = strong_quasi_invariant_correspondence(
      "rot", z3, counting_haar(z3), {"0", "1", "2"},
      [&](Idx e, Idx p) { return z3.compose(e, p); },
      {Rational(1), Rational(2), Rational(4)});
  CHECK(rot.delta.value(1, 0) == Rational(1, 2));
  CHECK(rot.delta.value(2, 2) == Rational(2));
  TransformationGroupoid ltg = left_transformation_groupoid(rot.g, rot.x);
  MultiplicativeCocycle mc = adjoining_cocycle(ltg, rot.x, rot.lam, rot.delta);
  CHECK(is_multiplicative_cocycle(ltg.gpd, mc.value, mc.support).ok);

  Caught bad = catching([&] {
    strong_quasi_invariant_correspondence("bad", z2, counting_haar(z2), {"p", "q"}, swap,
                                          {Rational(1), Rational(0)});
  });
  CHECK(bad.code == ErrorCode::SupportNotInvariant);
}

// ---------------------------------------------------------------------------
// orbit families

TEST_CASE("orbit families count transporters with their Haar weights") {
  Groupoid z3 = cyclic_group("z3", 3);
  Groupoid pt = space_groupoid("pt", {"*"});

  Bispace self = make_bispace(
      "self", z3, pt, {"0", "1", "2"}, [&](Idx) { return z3.units[0]; },
      [](Idx) { return 0; }, [&](Idx a, Idx p) { return z3.compose(a, p); },
      [](Idx p, Idx) { return p; });
  MeasureFamily free3 = macho_stadler_family(z3, counting_haar(z3), pt, self);
  CHECK(free3.mass == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

  MeasureFamily scaled =
      macho_stadler_family(z3, haar_from_unit_weights(z3, {Rational(2)}), pt, self);
  CHECK(scaled.mass == std::vector<Rational>{Rational(2), Rational(2), Rational(2)});

  // a stabilizer doubles the mass: Z/2 fixing a single point
  Groupoid z2 = cyclic_group("z2", 2);
  Bispace fix = make_bispace(
      "fix", z2, pt, {"p"}, [&](Idx) { return z2.units[0]; }, [](Idx) { return 0; },
      [](Idx, Idx p) { return p; }, [](Idx p, Idx) { return p; });
  MeasureFamily stab = macho_stadler_family(z2, counting_haar(z2), pt, fix);
  CHECK(stab.mass == std::vector<Rational>{Rational(2)});

  // two orbits over one unit
  Bispace two = make_bispace(
      "two", z2, pt, {"p", "q"}, [&](Idx) { return z2.units[0]; }, [](Idx) { return 0; },
      [](Idx, Idx p) { return p; }, [](Idx p, Idx) { return p; });
  Caught surplus = catching([&] { macho_stadler_family(z2, counting_haar(z2), pt, two); });
  CHECK(surplus.code == ErrorCode::QuotientNotBijective);
  CHECK(mentions(surplus, "two left orbits"));

  // a base unit nothing maps onto
  Groupoid two_pts = space_groupoid("b2", {"u", "w"});
  Bispace miss = make_bispace(
      "miss", z2, two_pts, {"p", "q"}, [&](Idx) { return z2.units[0]; },
      [](Idx) { return 0; }, [](Idx e, Idx p) { return e == 0 ? p : 1 - p; },
      [](Idx p, Idx) { return p; });
  Caught empty = catching([&] { macho_stadler_family(z2, counting_haar(z2), two_pts, miss); });
  CHECK(empty.code == ErrorCode::QuotientNotBijective);
  CHECK(mentions(empty, "no left orbit"));
}

// ---------------------------------------------------------------------------
// equivalences

TEST_CASE("equivalence axioms gate the two-sided module") {
  Groupoid p2 = pair_groupoid("p2", 2);
  Bispace self = make_bispace(
      "self", p2, p2, {p2.name(0), p2.name(1), p2.name(2), p2.name(3)},
      [&](Idx p) { return p2.rng[p]; }, [&](Idx p) { return p2.src[p]; },
      [&](Idx a, Idx p) { return p2.compose(a, p); },
      [&](Idx p, Idx e) { return p2.compose(p, e); });
  EquivalenceAxioms ax = check_equivalence_axioms(p2, p2, self);
  CHECK(ax.all());
  CHECK(ax.str().find("(iii) ok") != std::string::npos);

  Correspondence eq = equivalence_correspondence(p2, counting_haar(p2), p2,
                                                 counting_haar(p2), self);
  CHECK(delta_table_is_one(eq));
  FullnessPair fp = fullness_pair(eq);
  CHECK(fp.left);
  CHECK(fp.right);

  // pair groupoid acting on its unit-indexed points over a point space:
  // the module has the points as an orthogonal basis
  Groupoid p3 = pair_groupoid("p3", 3);
  Groupoid pt = space_groupoid("pt", {"*"});
  Bispace pts = make_bispace(
      "pts", p3, pt, {"1", "2", "3"}, [&](Idx p) { return p3.units[p]; },
      [](Idx) { return 0; }, [&](Idx a, Idx) { return p3.upos(p3.rng[a]); },
      [](Idx p, Idx) { return p; });
  Correspondence basis =
      equivalence_correspondence(p3, counting_haar(p3), pt, counting_haar(pt), pts);
  for (Idx i = 0; i < 3; ++i)
    for (Idx j = 0; j < 3; ++j) {
      CQ want = i == j ? CQ{Rational(1)} : CQ{};
      CHECK(inner_product(basis, point_delta(basis, i), point_delta(basis, j)).v[0] == want);
    }
  CHECK(nondegeneracy_check(basis).rank == 3);

  // fixed points kill axiom (i)
  Groupoid z2 = cyclic_group("z2", 2);
  Bispace fix = make_bispace(
      "fix", z2, pt, {"p"}, [&](Idx) { return z2.units[0]; }, [](Idx) { return 0; },
      [](Idx, Idx p) { return p; }, [](Idx p, Idx) { return p; });
  Caught unfree = catching([&] {
    equivalence_correspondence(z2, counting_haar(z2), pt, counting_haar(pt), fix);
  });
  CHECK(unfree.code == ErrorCode::InvalidStructure);
  CHECK(mentions(unfree, "axiom (i)"));

  // a two-point space with only units on the left heaps both orbits on one unit
  Groupoid gu = space_groupoid("gu", {"u"});
  Bispace heap = make_bispace(
      "heap", gu, pt, {"p", "q"}, [](Idx) { return 0; }, [](Idx) { return 0; },
      [](Idx, Idx p) { return p; }, [](Idx p, Idx) { return p; });
  EquivalenceAxioms ax5 = check_equivalence_axioms(gu, pt, heap);
  CHECK_FALSE(ax5.axiom[4].ok);
  CHECK(ax5.axiom[4].witness.find("two right orbits") != std::string::npos);
}

// ---------------------------------------------------------------------------
// transfer functions

TEST_CASE("transfer functions must satisfy the integral identity") {
  Groupoid z2 = cyclic_group("z2", 2);
  Groupoid z3 = cyclic_group("z3", 3);
  auto unit_anchor = [](Idx) { return Idx{0}; };
  auto trivial = [](Idx, Idx p) { return p; };
  auto one = [](Idx, Idx) { return Rational(1); };

  Correspondence triv = buneci_stachura_correspondence(
      "triv", z2, counting_haar(z2), z3, counting_haar(z3), unit_anchor, trivial, one);
  CHECK(delta_table_is_one(triv));
  CHECK(nondegeneracy_check(triv).rank == 3);

  // a single wrong value breaks the transcribed identity
  Caught off = catching([&] {
    buneci_stachura_correspondence(
        "off", z2, counting_haar(z2), z3, counting_haar(z3), unit_anchor, trivial,
        [](Idx a, Idx p) { return (a == 1 && p == 0) ? Rational(2) : Rational(1); });
  });
  CHECK(off.code == ErrorCode::InputError);
  CHECK(mentions(off, "transfer identity fails"));

  Caught neg = catching([&] {
    buneci_stachura_correspondence(
        "neg", z2, counting_haar(z2), z3, counting_haar(z3), unit_anchor, trivial,
        [](Idx a, Idx p) { return (a == 1 && p == 0) ? Rational(-1) : Rational(1); });
  });
  CHECK(neg.code == ErrorCode::InputError);
  CHECK(mentions(neg, "positive"));

  // a left action that ignores the right multiplication is rejected
  Caught skew = catching([&] {
    buneci_stachura_correspondence(
        "skew", z2, counting_haar(z2), z3, counting_haar(z3), unit_anchor,
        [](Idx a, Idx p) { return a == 0 ? p : (p == 0 ? 1 : (p == 1 ? Idx{0} : p)); }, one);
  });
  CHECK(skew.code == ErrorCode::InputError);
  CHECK(mentions(skew, "commute"));

  Caught loose = catching([&] {
    buneci_stachura_correspondence("loose", z2, counting_haar(z2), z3, counting_haar(z3),
                                   [](Idx) { return Idx{1}; }, trivial, one);
  });
  CHECK(loose.code == ErrorCode::InputError);
  CHECK(mentions(loose, "anchor"));
}

// ---------------------------------------------------------------------------
// subgroup sandwiches

TEST_CASE("subgroup sandwiches compose translations on the product carrier") {
  Groupoid z4 = cyclic_group("z4", 4);
  auto par = [](Idx p, Idx e) { return (e % 2) == 0 ? p : 1 - p; };
  Correspondence sw = subgroup_transformation_correspondence(
      "sw", z4, counting_haar(z4), {0, 2}, {0, 1, 2, 3}, {"a", "b"}, par);
  CHECK(sw.g.n == 4);   // |X| x |H|
  CHECK(sw.h.n == 8);   // |X| x |K|
  CHECK(sw.x.npts == 8);  // |X| x |G|
  CHECK(delta_table_is_one(sw));
  CHECK(nondegeneracy_check(sw).ok);

  // full sandwich H = K = G over a swapped pair
  Groupoid z2 = cyclic_group("z2", 2);
  Correspondence full = subgroup_transformation_correspondence(
      "full", z2, counting_haar(z2), {0, 1}, {0, 1}, {"a", "b"},
      [](Idx p, Idx e) { return e == 0 ? p : 1 - p; });
  CHECK(full.g.n == 4);
  CHECK(full.h.n == 4);
  CHECK(nondegeneracy_check(full).rank == 4);
  CHECK(delta_table_is_one(full));

  // scaling either counting system cancels out of the adjoining ratio
  Correspondence sc = subgroup_transformation_correspondence(
      "sc", z4, counting_haar(z4), {0, 2}, {0, 1, 2, 3}, {"a", "b"}, par,
      Rational(3), Rational(2));
  CHECK(delta_table_is_one(sc));

  CHECK(catching([&] {
          subgroup_transformation_correspondence("b", z4, counting_haar(z4), {0, 1},
                                                 {0, 1, 2, 3}, {"a"},
                                                 [](Idx p, Idx) { return p; });
        }).code == ErrorCode::InputError);

  Caught skew = catching([&] {
    subgroup_transformation_correspondence(
        "sk", z2, counting_haar(z2), {0, 1}, {0, 1}, {"a", "b"},
        [](Idx p, Idx e) { return e == 0 ? p : Idx{0}; });
  });
  CHECK(skew.code == ErrorCode::InputError);
  CHECK(mentions(skew, "not a right group action"));

  Groupoid p2 = pair_groupoid("p2", 2);
  CHECK(catching([&] {
          subgroup_transformation_correspondence("g", p2, counting_haar(p2), {0}, {0},
                                                 {"a"}, [](Idx p, Idx) { return p; });
        }).code == ErrorCode::InputError);
}

// ---------------------------------------------------------------------------
// induction along a subgroupoid

TEST_CASE("unit-fiber restriction induces along a subgroupoid") {
  // the whole groupoid induces an equivalence
  Groupoid z3 = cyclic_group("z3", 3);
  Correspondence full = induction_correspondence("full", z3, counting_haar(z3), {0, 1, 2});
  CHECK(check_equivalence_axioms(full.g, full.h, full.x).all());
  FullnessPair fp = fullness_pair(full);
  CHECK(fp.left);
  CHECK(fp.right);

  // units only: every arrow is its own right orbit, two per range unit
  Groupoid p2 = pair_groupoid("p2", 2);
  Correspondence units = induction_correspondence(
      "units", p2, counting_haar(p2), {p2.arrow_by_name("1.1"), p2.arrow_by_name("2.2")});
  EquivalenceAxioms axu = check_equivalence_axioms(units.g, units.h, units.x);
  CHECK_FALSE(axu.axiom[4].ok);
  CHECK(axu.axiom[4].witness.find("two right orbits") != std::string::npos);
  CHECK(delta_table_is_one(units));

  // an isolated unit outside the subgroupoid leaves an uncovered orbit
  Groupoid g = disjoint_union("z2v", cyclic_group("z2", 2), space_groupoid("v", {"v"}));
  Correspondence iso = induction_correspondence("iso", g, counting_haar(g), {0, 1});
  EquivalenceAxioms axi = check_equivalence_axioms(iso.g, iso.h, iso.x);
  CHECK(axi.axiom[0].ok);
  CHECK(axi.axiom[3].ok);
  CHECK_FALSE(axi.axiom[4].ok);
  CHECK(axi.axiom[4].witness.find("no right orbit") != std::string::npos);
  CHECK(axi.axiom[5].ok);

  // weighted Haar systems place the range weight on each carrier arrow
  Groupoid p3 = pair_groupoid("p3", 3);
  std::vector<Idx> all9(9);
  for (Idx i = 0; i < 9; ++i) all9[i] = i;
  HaarSystem wh = haar_from_unit_weights(p3, {Rational(1), Rational(2), Rational(4)});
  Correspondence wtd = induction_correspondence("wtd", p3, wh, all9,
                                                {Rational(1), Rational(2), Rational(4)});
  auto mass_of = [&](const char* nm) {
    for (Idx p = 0; p < wtd.x.npts; ++p)
      if (wtd.x.points[p] == nm) return wtd.lam.mass[p];
    return Rational(-1);
  };
  CHECK(mass_of("2.1") == Rational(2));
  CHECK(mass_of("1.2") == Rational(1));
  CHECK(mass_of("3.3") == Rational(4));
  CHECK(delta_table_is_one(wtd));

  CHECK(catching([&] {
          induction_correspondence("bad", p3, counting_haar(p3), {p3.arrow_by_name("1.2")});
        }).code == ErrorCode::InputError);
}

// ---------------------------------------------------------------------------
// registry

TEST_CASE("every registry entry builds and passes its own checks") {
  const auto& entries = gallery();
  CHECK(entries.size() == 15);

  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.name);
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());

  for (const auto& e : entries) {
    CAPTURE(e.name);
    CHECK_FALSE(e.params.empty());
    CHECK_FALSE(e.expected_delta.empty());

    Correspondence c = e.build();
    CheckResult dc = e.check_delta(c);
    CHECK(dc.ok);

    // rational mode whenever the adjoining values are perfect squares; the
    // quasi-invariant entry has Delta = 1/2 and runs in float mode instead
    BimoduleReport br = verify_bimodule_identities(c, 4, 0xC0FFEE);
    CHECK(br.exact == c.exact_sqrt);
    CHECK(br.ok);
    if (!c.exact_sqrt) {
      Correspondence sq = squares_correspondence(c.g, c.alpha, c.h, c.beta, c.x, c.lam);
      BimoduleReport sbr = verify_bimodule_identities(sq, 4, 0xC0FFEE);
      CHECK(sbr.exact);
      CHECK(sbr.ok);
    }

    CHECK(nondegeneracy_check(c).ok);

    RNData rn = uniform_rn(c);
    RepBundle rb = regular_rep_bundle(c.h);
    PositivityLemmasReport pl = verify_positivity_lemmas(c, rb, rn, 2, 0xFEED);
    CHECK(pl.ok);
  }

  const GalleryEntry* q = gallery_entry("quiver");
  REQUIRE(q != nullptr);
  CHECK(q->name == "quiver");
  CHECK(gallery_entry("missing") == nullptr);
}
