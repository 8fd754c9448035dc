#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/cohomology.hpp"
#include "gpd/random.hpp"

using namespace gpd;

namespace {

/* Z/2 swapping two points over a trivial right groupoid. */
struct SwapInstance {
  Groupoid g = cyclic_group("z2", 2);
  Groupoid h = space_groupoid("pt", {"*"});
  Bispace x;
  SwapInstance() {
    x = make_bispace("swap", g, h, {"p", "q"},
                     [](Idx) { return 0; }, [](Idx) { return 0; },
                     [](Idx a, Idx p) { return a == 0 ? p : 1 - p; },
                     [](Idx p, Idx) { return p; });
  }
};

/* The group Z/2 as points, acted on by itself from both sides. */
struct MultInstance {
  Groupoid g = cyclic_group("z2", 2);
  Bispace x;
  MultInstance() {
    x = make_bispace("mult", g, g, {"e", "g"},
                     [](Idx) { return 0; }, [](Idx) { return 0; },
                     [this](Idx a, Idx p) { return g.compose(a, p); },
                     [this](Idx p, Idx e) { return g.compose(p, e); });
  }
};

Cochain random_deg0(const Groupoid& g, Rng& rng) {
  Cochain f = zero_cochain(g, 0);
  for (auto& v : f.values) v = rng.rational();
  return f;
}

Cochain random_deg1(const Groupoid& g, Rng& rng) {
  Cochain f = zero_cochain(g, 1);
  for (Idx t = 0; t < g.n; ++t)
    if (!g.is_unit(t)) f.values[t] = rng.rational();
  return f;
}

bool all_zero(const Cochain& f) {
  for (const auto& v : f.values)
    if (v != Rational(0)) return false;
  return true;
}

}  // namespace

TEST_CASE("trivial action validates; corrupting the unit row is caught") {
  Groupoid g = cyclic_group("z4", 4);
  TrivialAction ta = trivial_action(g);
  CHECK(validate_gpd_action(ta.actor, g, ta.action).ok());

  GpdAction bad = ta.action;
  bad.act_[static_cast<size_t>(0) * g.n + 1] = 0;  // the unit now moves g1 to e
  auto rep = validate_gpd_action(ta.actor, g, bad);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("transformation actions: both readings build and validate") {
  SwapInstance sw;
  TransformationActions ta = transformation_action(sw.g, sw.h, sw.x);
  CHECK(ta.xh.gpd.n == 2);  // a space with one unit per point
  CHECK(ta.gx.gpd.n == 4);
  CHECK(validate_gpd_action(sw.g, ta.xh.gpd, ta.g_on_xh).ok());
  CHECK(validate_gpd_action(ta.h_op, ta.gx.gpd, ta.hop_on_gx).ok());
  // the group permutes the two unit-fibers
  Idx up = ta.xh.unit_of_point[0], uq = ta.xh.unit_of_point[1];
  CHECK(ta.g_on_xh.act(1, up) == uq);
  CHECK(ta.g_on_xh.act(1, uq) == up);

  MultInstance mu;
  TransformationActions tb = transformation_action(mu.g, mu.g, mu.x);
  CHECK(validate_gpd_action(mu.g, tb.xh.gpd, tb.g_on_xh).ok());
  CHECK(validate_gpd_action(tb.h_op, tb.gx.gpd, tb.hop_on_gx).ok());
}

TEST_CASE("group actors act by functors forming a homomorphism") {
  MultInstance mu;
  TransformationActions ta = transformation_action(mu.g, mu.g, mu.x);
  CHECK(group_action_functor_check(mu.g, ta.xh.gpd, ta.g_on_xh).ok);
  CHECK(group_action_functor_check(ta.h_op, ta.gx.gpd, ta.hop_on_gx).ok);

  SwapInstance sw;
  TransformationActions tb = transformation_action(sw.g, sw.h, sw.x);
  CHECK(group_action_functor_check(sw.g, tb.xh.gpd, tb.g_on_xh).ok);

  GpdAction bad = tb.g_on_xh;
  bad.act_[static_cast<size_t>(1) * bad.tn + 0] = 0;  // g now fixes the first unit
  CHECK_FALSE(group_action_functor_check(sw.g, tb.xh.gpd, bad).ok);

  Groupoid p2 = pair_groupoid("p2", 2);
  TrivialAction triv = trivial_action(p2);
  CHECK_THROWS_AS(group_action_functor_check(p2, triv.actor, GpdAction{}), Error);
}

TEST_CASE("coboundary formulas, frozen") {
  Groupoid p2 = pair_groupoid("p2", 2);
  Cochain f = zero_cochain(p2, 0);
  f.values = {Rational(0), Rational(1)};  // units 1, 2
  Cochain df = coboundary(p2, f);
  CHECK(df.values[p2.arrow_by_name("1.2")] == Rational(1));   // f(2) - f(1)
  CHECK(df.values[p2.arrow_by_name("2.1")] == Rational(-1));
  CHECK(df.values[p2.arrow_by_name("1.1")] == Rational(0));

  Cochain c = zero_cochain(p2, 0);
  c.values = {Rational(5), Rational(5)};
  CHECK(all_zero(coboundary(p2, c)));
}

TEST_CASE("d after d vanishes exactly, degrees 0->2") {
  std::vector<Groupoid> gs;
  gs.push_back(pair_groupoid("p3", 3));
  gs.push_back(cyclic_group("z4", 4));
  gs.push_back(disjoint_union("du", cyclic_group("z2", 2), pair_groupoid("p2", 2)));
  MultInstance mu;
  gs.push_back(transformation_action(mu.g, mu.g, mu.x).gx.gpd);

  Rng rng(77);
  for (const auto& g : gs) {
    for (int trial = 0; trial < 8; ++trial) {
      Cochain f0 = random_deg0(g, rng);
      CHECK(all_zero(coboundary(g, coboundary(g, f0))));
      Cochain f1 = random_deg1(g, rng);
      CHECK(all_zero(coboundary(g, coboundary(g, f1))));
    }
  }
}

TEST_CASE("cocycle characterizations in low degree") {
  Groupoid p2 = pair_groupoid("p2", 2);
  TrivialAction ta = trivial_action(p2);

  Cochain f = zero_cochain(p2, 0);
  f.values = {Rational(0), Rational(1)};
  CHECK_FALSE(is_cocycle(ta.actor, p2, ta.action, f));
  f.values = {Rational(3), Rational(3)};
  CHECK(is_cocycle(ta.actor, p2, ta.action, f));

  // additive exponents of the modular function for mu = (1, 2): a homomorphism
  Cochain k = zero_cochain(p2, 1);
  k.values[p2.arrow_by_name("1.2")] = Rational(-1);
  k.values[p2.arrow_by_name("2.1")] = Rational(1);
  CHECK(is_cocycle(ta.actor, p2, ta.action, k));

  k.values[p2.arrow_by_name("2.1")] = Rational(-1);  // now symmetric, not a homomorphism
  CHECK_FALSE(is_cocycle(ta.actor, p2, ta.action, k));

  Cochain bad = zero_cochain(p2, 1);
  bad.values[p2.arrow_by_name("1.1")] = Rational(1);  // nonzero on a unit
  CHECK_THROWS_AS(is_cocycle(ta.actor, p2, ta.action, bad), Error);
}

TEST_CASE("cohomology dimensions, frozen") {
  auto dims = [](const Groupoid& g, int n) {
    TrivialAction ta = trivial_action(g);
    return cohomology_dim(ta.actor, g, ta.action, n);
  };

  Groupoid p2 = pair_groupoid("p2", 2);
  CHECK(dims(p2, 0).h == 1);
  CHECK(dims(p2, 1).h == 0);

  Groupoid p3 = pair_groupoid("p3", 3);
  auto d1 = dims(p3, 1);
  CHECK(d1.z == 2);
  CHECK(d1.b == 2);
  CHECK(d1.h == 0);

  Groupoid du = disjoint_union("du", pair_groupoid("p2", 2), pair_groupoid("q2", 2));
  CHECK(dims(du, 0).h == 2);  // one constant per orbit

  Groupoid z2 = cyclic_group("z2", 2);
  CHECK(dims(z2, 0).h == 1);
  CHECK(dims(z2, 1).h == 0);  // no nonzero homomorphism into the rationals
  CHECK(dims(cyclic_group("z4", 4), 1).h == 0);
}

TEST_CASE("invariance under a nontrivial actor shrinks the complex") {
  MultInstance mu;
  TransformationActions ta = transformation_action(mu.g, mu.g, mu.x);
  // H-side action on the left transformation groupoid glues its two units
  CochainBasis b0 = cochain_basis(ta.h_op, ta.gx.gpd, ta.hop_on_gx, 0);
  CHECK(b0.count == 1);
  CochainBasis b1 = cochain_basis(ta.h_op, ta.gx.gpd, ta.hop_on_gx, 1);
  CHECK(b1.count == 1);

  auto d0 = cohomology_dim(ta.h_op, ta.gx.gpd, ta.hop_on_gx, 0);
  CHECK(d0.z == 1);
  CHECK(d0.h == 1);
  auto d1 = cohomology_dim(ta.h_op, ta.gx.gpd, ta.hop_on_gx, 1);
  CHECK(d1.z == 0);
  CHECK(d1.b == 0);
  CHECK(d1.h == 0);

  // without invariance the same groupoid has a 2-dimensional degree-0 space
  TrivialAction triv = trivial_action(ta.gx.gpd);
  CHECK(cochain_basis(triv.actor, ta.gx.gpd, triv.action, 0).count == 2);
}

TEST_CASE("invariant cochains stay invariant under d") {
  MultInstance mu;
  TransformationActions ta = transformation_action(mu.g, mu.g, mu.x);
  CochainBasis b0 = cochain_basis(ta.h_op, ta.gx.gpd, ta.hop_on_gx, 0);
  Rng rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Cochain f = zero_cochain(ta.gx.gpd, 0);
    std::vector<Rational> per_class(b0.count);
    for (auto& v : per_class) v = rng.rational();
    for (size_t p = 0; p < f.values.size(); ++p)
      f.values[p] = per_class[b0.class_of[p]];
    REQUIRE(validate_cochain(ta.h_op, ta.gx.gpd, ta.hop_on_gx, f).ok());
    Cochain df = coboundary(ta.gx.gpd, f);
    CHECK(validate_cochain(ta.h_op, ta.gx.gpd, ta.hop_on_gx, df).ok());
  }
}

TEST_CASE("two potentials with the same coboundary differ by an orbit constant") {
  Groupoid du = disjoint_union("du", cyclic_group("z2", 2), pair_groupoid("p2", 2));
  TrivialAction ta = trivial_action(du);
  CHECK(cohomology_dim(ta.actor, du, ta.action, 0).z == 2);

  // unit orbits: the group unit alone, the two pair units together
  OrbitSpace orb = unit_orbits(du);
  REQUIRE(orb.count == 2);
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain b = random_deg0(du, rng);
    Cochain b2 = b;
    std::vector<Rational> shift(orb.count);
    for (auto& v : shift) v = rng.rational();
    for (size_t p = 0; p < b2.values.size(); ++p)
      b2.values[p] += shift[orb.orbit_of[p]];
    CHECK(coboundary(du, b).values == coboundary(du, b2).values);
    // and conversely the difference is constant on orbits
    for (size_t p = 0; p < b.values.size(); ++p)
      CHECK(b2.values[p] - b.values[p] ==
            b2.values[orb.reps[orb.orbit_of[p]]] - b.values[orb.reps[orb.orbit_of[p]]]);
  }
}

TEST_CASE("multiplicative cocycles: potentials pass, non-homomorphisms fail") {
  Groupoid p3 = pair_groupoid("p3", 3);
  std::vector<Rational> v(p3.n, Rational(1));
  std::vector<Rational> b = {Rational(1), Rational(2), Rational(6)};
  for (Idx t = 0; t < p3.n; ++t) {
    // arrows are j -> i named "i.j"; a potential gives b(src) / b(rng)
    int i = p3.upos(p3.rng[t]), j = p3.upos(p3.src[t]);
    v[t] = b[j] / b[i];
  }
  CHECK(is_multiplicative_cocycle(p3, v).ok);
  v[p3.arrow_by_name("1.2")] = Rational(7);
  auto r = is_multiplicative_cocycle(p3, v);
  CHECK_FALSE(r.ok);

  Groupoid z4 = cyclic_group("z4", 4);
  std::vector<Rational> w = {Rational(1), Rational(2), Rational(4), Rational(8)};
  CHECK_FALSE(is_multiplicative_cocycle(z4, w).ok);  // g1*g3 = e but 2*8 != 1
}

TEST_CASE("modular and adjoining functions certify as multiplicative cocycles") {
  Groupoid p2 = pair_groupoid("p2", 2);
  UnitMeasure mu{p2.id, {Rational(1), Rational(2)}};
  MultiplicativeCocycle mc = modular_cocycle(p2, counting_haar(p2), mu);
  CHECK(is_multiplicative_cocycle(p2, mc.value, mc.support).ok);
  CHECK(mc.value[p2.arrow_by_name("1.2")] == Rational(1, 2));

  // partial support: measure concentrated on one component
  Groupoid du = disjoint_union("du", cyclic_group("z2", 2), pair_groupoid("p2", 2));
  UnitMeasure nu{du.id, {Rational(3), Rational(0), Rational(0)}};
  MultiplicativeCocycle md = modular_cocycle(du, counting_haar(du), nu);
  CHECK(is_multiplicative_cocycle(du, md.value, md.support).ok);
  int on = 0;
  for (char s : md.support) on += s;
  CHECK(on == 2);  // only the group component carries the measure

  // adjoining function on the left transformation groupoid, two orbits,
  // one of them carrying no mass
  Groupoid g = cyclic_group("z2", 2);
  Groupoid pt = space_groupoid("pt", {"*"});
  Bispace x = make_bispace("orbs", g, pt, {"p", "q", "r", "s"},
                           [](Idx) { return 0; }, [](Idx) { return 0; },
                           [](Idx a, Idx p) { return a == 0 ? p : p ^ 1; },
                           [](Idx p, Idx) { return p; });
  REQUIRE(validate_bispace(g, pt, x).ok());
  HaarSystem alpha = counting_haar(g);
  MeasureFamily lam{x.id, {Rational(1), Rational(2), Rational(0), Rational(0)}};
  AdjoiningFn d = compute_adjoining(g, alpha, x, lam);
  auto ltg = left_transformation_groupoid(g, x);
  MultiplicativeCocycle ac = adjoining_cocycle(ltg, x, lam, d);
  CHECK(is_multiplicative_cocycle(ltg.gpd, ac.value, ac.support).ok);

  // the log transport: exponents of the powers of two form an additive cocycle
  Cochain k = zero_cochain(ltg.gpd, 1);
  for (Idx t = 0; t < ltg.gpd.n; ++t) {
    Rational val = ac.value[t];
    int expo = 0;
    while (val < 1) { val *= 2; --expo; }
    while (val > 1) { val /= 2; ++expo; }
    REQUIRE(val == Rational(1));
    if (!ltg.gpd.is_unit(t)) k.values[t] = Rational(expo);
  }
  TrivialAction ta = trivial_action(ltg.gpd);
  CHECK(is_cocycle(ta.actor, ltg.gpd, ta.action, k));
}
