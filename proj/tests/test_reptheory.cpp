#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpd/reptheory.hpp"
#include "gpd/random.hpp"

using namespace gpd;

namespace {

/* Correspondence with a trivial left side, so only the right-module data
 * matters. */
Correspondence right_only(const std::string& id, const Groupoid& h, const HaarSystem& beta,
                          std::vector<std::string> pts,
                          const std::function<Idx(Idx)>& sx,
                          const std::function<Idx(Idx, Idx)>& ract,
                          std::vector<Rational> masses) {
  Groupoid g = space_groupoid(id + ":pt", {"*"});
  Bispace x = make_bispace(id, g, h, std::move(pts), [](Idx) { return 0; }, sx,
                           [](Idx, Idx p) { return p; }, ract);
  return build_correspondence(g, counting_haar(g), h, beta, x,
                              MeasureFamily{x.id, std::move(masses)});
}

/* Z/2 acting on itself from both sides, counting everything. */
Correspondence mult_corr() {
  Groupoid g = cyclic_group("z2", 2);
  Bispace x = make_bispace("mult", g, g, {"e", "g"},
                           [](Idx) { return 0; }, [](Idx) { return 0; },
                           [&g](Idx a, Idx p) { return g.compose(a, p); },
                           [&g](Idx p, Idx e) { return g.compose(p, e); });
  return build_correspondence(g, counting_haar(g), g, counting_haar(g), x,
                              counting_family(x));
}

/* Z/2 swapping a and b with c fixed: one free orbit and one stabilized
 * point, masses (2, 2, 5). */
Correspondence fixed_point_corr() {
  Groupoid h = cyclic_group("z2", 2);
  return right_only("fix", h, counting_haar(h), {"a", "b", "c"},
                    [](Idx) { return 0; },
                    [](Idx p, Idx e) { return e == 0 || p == 2 ? p : 1 - p; },
                    {Rational(2), Rational(2), Rational(5)});
}

/* Unit space of the pair groupoid as a right pair-groupoid space. */
Correspondence pair_units_corr(const HaarSystem& beta, std::vector<Rational> masses) {
  Groupoid h = pair_groupoid("p2", 2);
  return right_only("units", h, beta, {"u1", "u2"},
                    [&h](Idx p) { return h.units[p]; },
                    [&h](Idx, Idx e) { return h.upos(h.src[e]); }, std::move(masses));
}

RepBundle sign_rep(const Groupoid& z2) {
  RepBundle r = trivial_rep_bundle(z2);
  r.unitary[1] = -CMat::Identity(1, 1);
  return r;
}

}  // namespace

TEST_CASE("representation bundles validate") {
  Groupoid z3 = cyclic_group("z3", 3);
  Groupoid p3 = pair_groupoid("p3", 3);
  CHECK(validate_representation(z3, trivial_rep_bundle(z3)).ok());
  CHECK(validate_representation(p3, trivial_rep_bundle(p3)).ok());
  CHECK(validate_representation(z3, regular_rep_bundle(z3)).ok());
  CHECK(validate_representation(p3, regular_rep_bundle(p3)).ok());

  Groupoid z2 = cyclic_group("z2", 2);
  CHECK(validate_representation(z2, sign_rep(z2)).ok());

  // inconsistent phase across the composition table
  RepBundle bad = trivial_rep_bundle(p3);
  bad.unitary[p3.arrow_by_name("1.2")] = CMat::Identity(1, 1) * CD{0, 1};
  ValidationReport rp = validate_representation(p3, bad);
  CHECK_FALSE(rp.ok());
  CHECK(rp.str().find("composition") != std::string::npos);

  RepBundle stretched = trivial_rep_bundle(z2);
  stretched.unitary[1] = CMat::Identity(1, 1) * 2.0;
  CHECK_FALSE(validate_representation(z2, stretched).ok());
}

TEST_CASE("regular bundle is the fiber permutation action") {
  Groupoid z2 = cyclic_group("z2", 2);
  RepBundle reg = regular_rep_bundle(z2);
  REQUIRE(reg.dims == std::vector<int>{2});
  CHECK(reg.unitary[1](0, 0) == CD{0});
  CHECK(reg.unitary[1](1, 0) == CD{1});  // g . e = g
  CHECK(reg.unitary[1](0, 1) == CD{1});  // g . g = e
}

TEST_CASE("derivative data: frozen values and homogeneity") {
  // X = H with right multiplication, lambda = Haar weights: M is identically 1
  Groupoid z4 = cyclic_group("z4", 4);
  for (const HaarSystem& beta :
       {counting_haar(z4), haar_from_unit_weights(z4, {Rational(5)})}) {
    Bispace x = make_bispace("selfr", space_groupoid("pt", {"*"}), z4,
                             {"0", "1", "2", "3"}, [](Idx) { return 0; },
                             [](Idx) { return 0; }, [](Idx, Idx p) { return p; },
                             [&z4](Idx p, Idx e) { return z4.compose(p, e); });
    MeasureFamily lam{x.id, std::vector<Rational>(4, beta.w(0))};
    UnitMeasure mu{z4.id, {Rational(1)}};
    RNData rn = rn_data(z4, beta, x, lam, mu, {Rational(1)});
    for (Idx p = 0; p < 4; ++p) {
      CHECK(rn.m[p] == Rational(1));
      CHECK(rn.m_on[p] == 1);
    }
    for (Idx e = 0; e < 4; ++e) CHECK(rn.delta[e] == Rational(1));

    // scaling mu scales M and leaves delta alone
    UnitMeasure mu3{z4.id, {Rational(3)}};
    RNData rn3 = rn_data(z4, beta, x, lam, mu3, {Rational(1)});
    for (Idx p = 0; p < 4; ++p) CHECK(rn3.m[p] == Rational(3));
    CHECK(rn3.delta == rn.delta);
  }

  // a vanishing orbit mass against positive point masses is rejected
  Correspondence cm = mult_corr();
  UnitMeasure mu1{cm.h.id, {Rational(1)}};
  CHECK_THROWS_AS(rn_data(cm.h, cm.beta, cm.x, cm.lam, mu1, {Rational(0)}), Error);

  // stabilized point: the orbit-map family weighs the whole stabilizer
  Correspondence fx = fixed_point_corr();
  RNData rn = uniform_rn(fx);
  CHECK(rn.stabw[0] == Rational(1));
  CHECK(rn.stabw[2] == Rational(2));
  CHECK(rn.m[0] == Rational(2));
  CHECK(rn.m[2] == Rational(5, 2));

  // weighted pair groupoid: delta is the unit-weight ratio and M follows it
  Groupoid p2 = pair_groupoid("p2", 2);
  HaarSystem beta = haar_from_unit_weights(p2, {Rational(1), Rational(3)});
  Correspondence cu = pair_units_corr(beta, {Rational(1), Rational(1)});
  UnitMeasure mu{p2.id, {Rational(2), Rational(5)}};
  RNData rw = rn_data(p2, beta, cu.x, cu.lam, mu, {Rational(1)});
  Idx a12 = p2.arrow_by_name("1.2"), a21 = p2.arrow_by_name("2.1");
  CHECK(rw.delta[a12] == Rational(5, 6));   // mu(2) c(1) / (mu(1) c(2))
  CHECK(rw.delta[a21] == Rational(6, 5));
  CHECK(rw.m[0] == Rational(2));            // mu(1) mass / stabw, stabw = c(1)
  CHECK(rw.m[1] == Rational(5, 3));
  CHECK(rw.m[1] == rw.m[0] * rw.delta[a12]);  // the cocycle identity by hand
}

TEST_CASE("section layouts: offsets, transports, stabilizer-fixed bases") {
  Correspondence fx = fixed_point_corr();
  RepBundle reg = regular_rep_bundle(fx.h);
  SectionLayout ul = unit_layout(fx.h, reg);
  CHECK(ul.total == 2);
  CHECK(ul.offset == std::vector<int>{0});

  OrbitLayout ol = orbit_layout(fx.h, fx.x, reg);
  REQUIRE(ol.orbits.count == 2);
  CHECK(ol.basis[0].cols() == 2);  // free orbit: whole fiber space
  CHECK(ol.basis[1].cols() == 1);  // fixed point: invariants of the swap
  CHECK(ol.total == 3);
  // the fixed vector of the regular swap is the constant vector
  CHECK(std::abs(std::abs(ol.basis[1](0, 0)) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(ol.basis[1](0, 0) - ol.basis[1](1, 0)) < 1e-12);

  // transports carry the representative to each point
  for (Idx p = 0; p < fx.x.npts; ++p)
    CHECK(fx.x.ract(ol.orbits.reps[ol.orbits.orbit_of[p]], ol.transport[p]) == p);

  // sign representation at a stabilized point has no invariant vectors
  Groupoid z2 = cyclic_group("z2", 2);
  Correspondence solo = right_only("solo", z2, counting_haar(z2), {"c"},
                                   [](Idx) { return 0; }, [](Idx p, Idx) { return p; },
                                   {Rational(3)});
  OrbitLayout zs = orbit_layout(solo.h, solo.x, sign_rep(z2));
  CHECK(zs.total == 0);
}

TEST_CASE("ket collapses to multiplication by f sqrt(M) over a trivial groupoid") {
  Groupoid pt = space_groupoid("h", {"*"});
  Correspondence c = right_only("three", pt, counting_haar(pt), {"x0", "x1", "x2"},
                                [](Idx) { return 0; }, [](Idx p, Idx) { return p; },
                                {Rational(1), Rational(4), Rational(9)});
  RNData rn = uniform_rn(c);  // M(x) = mass(x): stabilizers are the unit alone
  CHECK(rn.m[1] == Rational(4));
  RepBundle triv = trivial_rep_bundle(pt);
  SectionLayout ul = unit_layout(pt, triv);
  OrbitLayout ol = orbit_layout(pt, c.x, triv);
  REQUIRE(ol.total == 3);

  Fn<CD> f = zero_fn<CD>(points_carrier(c.x), 3);
  f.v = {CD{2}, CD{3}, CD{5}};
  CMat km = ket_matrix(c, triv, rn, ul, ol, f);
  CHECK(km(0, 0).real() == doctest::Approx(2.0));   // f sqrt(M) = 2 * 1
  CHECK(km(1, 0).real() == doctest::Approx(6.0));   // 3 * 2
  CHECK(km(2, 0).real() == doctest::Approx(15.0));  // 5 * 3

  // bra divides by sqrt(M) and weighs by mass: same numbers
  CMat bm = bra_matrix(c, triv, rn, ul, ol, f);
  CHECK(bm(0, 0).real() == doctest::Approx(2.0));
  CHECK(bm(0, 1).real() == doctest::Approx(6.0));
  CHECK(bm(0, 2).real() == doctest::Approx(15.0));

  // composite against L(<f,f>): a single scalar, sum of |f|^2 mass
  Fn<CD> ip = inner_product(c, f, f);
  CHECK(ip.v[0].real() == doctest::Approx(265.0));
  CMat lm = l_matrix(pt, c.beta, rn.mu, triv, ul, ip);
  CHECK(operator_norm(bm * km - lm) < 1e-9);

  Fn<CD> zf = zero_fn<CD>(points_carrier(c.x), 3);
  CHECK(max_abs_entry(ket_matrix(c, triv, rn, ul, ol, zf)) == 0.0);
  CHECK(max_abs_entry(bra_matrix(c, triv, rn, ul, ol, zf)) == 0.0);
}

TEST_CASE("regular data on the group: delta spikes act by the permutation block") {
  Correspondence c = mult_corr();
  RepBundle reg = regular_rep_bundle(c.h);
  RNData rn = uniform_rn(c);
  for (Idx p = 0; p < 2; ++p) CHECK(rn.m[p] == Rational(1));
  SectionLayout ul = unit_layout(c.h, reg);
  OrbitLayout ol = orbit_layout(c.h, c.x, reg);
  REQUIRE(ol.total == 2);

  Fn<CD> dg = delta_fn<CD>(points_carrier(c.x), 2, 1);
  CMat km = ket_matrix(c, reg, rn, ul, ol, dg);
  CMat bm = bra_matrix(c, reg, rn, ul, ol, dg);
  // hand evaluation at the representative r: the only surviving term is the
  // arrow eta0 with r.eta0 = g, so |d_g>> xi ([r]) = U(eta0) xi, and the bra
  // column is U(inv eta0) applied to the basis
  Idx rep0 = ol.orbits.reps[0];
  Idx eta0 = c.x.ract(rep0, 0) == 1 ? 0 : 1;
  REQUIRE(c.x.ract(rep0, eta0) == 1);
  CHECK(max_abs_entry(km - ol.basis[0].adjoint() * reg.unitary[eta0]) < 1e-12);
  CHECK(max_abs_entry(bm - reg.unitary[c.h.inv[eta0]] * ol.basis[0]) < 1e-12);
  // with the representative e this is the 2x2 swap block
  if (rep0 == 0) CHECK(std::abs(reg.unitary[eta0](1, 0) - 1.0) < 1e-15);

  Fn<CD> ip = inner_product(c, dg, dg);  // = d_e, so L is the identity
  CMat lm = l_matrix(c.h, c.beta, rn.mu, reg, ul, ip);
  CHECK(max_abs_entry(lm - CMat::Identity(2, 2)) < 1e-12);
  CHECK(operator_norm(bm * km - lm) < 1e-12);
}

TEST_CASE("ket values are equivariant sections") {
  for (const Correspondence& c : {mult_corr(), fixed_point_corr()}) {
    RepBundle reg = regular_rep_bundle(c.h);
    SectionLayout ul = unit_layout(c.h, reg);
    RNData rn = uniform_rn(c);
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
      Fn<CD> f = random_fn<CD>(points_carrier(c.x), c.x.npts, rng);
      CVec xi(ul.total);
      for (int b = 0; b < ul.total; ++b) xi(b) = rng.cd();
      for (Idx p = 0; p < c.x.npts; ++p)
        for (Idx e : c.h.fiber_r[c.h.upos(c.x.sx[p])]) {
          Idx q = c.x.ract(p, e);
          if (q == kUndef) continue;
          CVec lhs = reg.unitary[e] * ket_value_at(c, reg, rn, ul, f, xi, q);
          CVec rhs = ket_value_at(c, reg, rn, ul, f, xi, p);
          CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
      // at a stabilized representative the value lies in the fixed subspace
      OrbitLayout ol = orbit_layout(c.h, c.x, reg);
      for (int w = 0; w < ol.orbits.count; ++w) {
        CVec val = ket_value_at(c, reg, rn, ul, f, xi, ol.orbits.reps[w]);
        CVec proj = ol.basis[w] * (ol.basis[w].adjoint() * val);
        CHECK((val - proj).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("L is a *-representation") {
  // units sum with counting weights and uniform mu acts as the identity
  Groupoid z4 = cyclic_group("z4", 4);
  RepBundle reg = regular_rep_bundle(z4);
  SectionLayout ul = unit_layout(z4, reg);
  UnitMeasure mu = uniform_unit_measure(z4);
  Fn<CD> unit = delta_fn<CD>(arrows_carrier(z4), 4, 0);
  CHECK(max_abs_entry(l_matrix(z4, counting_haar(z4), mu, reg, ul, unit) -
                      CMat::Identity(4, 4)) == 0.0);

  // sign representation sends the generator spike to -1
  Groupoid z2 = cyclic_group("z2", 2);
  RepBundle sg = sign_rep(z2);
  SectionLayout us = unit_layout(z2, sg);
  CMat ls = l_matrix(z2, counting_haar(z2), uniform_unit_measure(z2), sg, us,
                     delta_fn<CD>(arrows_carrier(z2), 2, 1));
  CHECK(ls(0, 0) == CD{-1.0});

  // frozen pair-groupoid block with mu = (1, 4): sqrt(delta) = 2 one way
  Groupoid p2 = pair_groupoid("p2", 2);
  RepBundle tp = trivial_rep_bundle(p2);
  SectionLayout up = unit_layout(p2, tp);
  UnitMeasure muw{p2.id, {Rational(1), Rational(4)}};
  HaarSystem cb = counting_haar(p2);
  CMat l12 = l_matrix(p2, cb, muw, tp, up,
                      delta_fn<CD>(arrows_carrier(p2), 4, p2.arrow_by_name("1.2")));
  CHECK(l12(0, 1).real() == doctest::Approx(2.0));
  CHECK(std::abs(l12(0, 0)) + std::abs(l12(1, 0)) + std::abs(l12(1, 1)) == 0.0);

  // multiplicativity and the weighted adjoint, random trials
  CMat wm = CMat::Zero(2, 2);
  wm(0, 0) = 1.0;
  wm(1, 1) = 4.0;
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    Fn<CD> ps = random_fn<CD>(arrows_carrier(p2), 4, rng);
    Fn<CD> ps2 = random_fn<CD>(arrows_carrier(p2), 4, rng);
    CMat a = l_matrix(p2, cb, muw, tp, up, ps);
    CMat b = l_matrix(p2, cb, muw, tp, up, ps2);
    CMat ab = l_matrix(p2, cb, muw, tp, up, convolve(p2, cb, ps, ps2));
    CHECK(max_abs_entry(ab - a * b) < 1e-9);
    CMat st = l_matrix(p2, cb, muw, tp, up, involution(p2, ps));
    CHECK(max_abs_entry(st.adjoint() * wm - wm * a) < 1e-9);  // L(psi*) = L(psi)^dag
    // positivity of L(psi* psi) in the weighted form
    CMat pos = wm * l_matrix(p2, cb, muw, tp, up,
                             convolve(p2, cb, involution(p2, ps), ps));
    CHECK(max_abs_entry(pos - pos.adjoint()) < 1e-9);
    CHECK(min_hermitian_eigenvalue((pos + pos.adjoint()) * 0.5) > -1e-9);
  }
}

TEST_CASE("the four positivity checks pass on healthy instances") {
  Groupoid p2 = pair_groupoid("p2", 2);
  HaarSystem wb = haar_from_unit_weights(p2, {Rational(1), Rational(3)});
  std::vector<Correspondence> cs = {mult_corr(), fixed_point_corr(),
                                    pair_units_corr(wb, {Rational(1), Rational(1)})};
  for (const Correspondence& c : cs) {
    for (bool regular : {false, true}) {
      RepBundle rep = regular ? regular_rep_bundle(c.h) : trivial_rep_bundle(c.h);
      REQUIRE(validate_representation(c.h, rep).ok());
      PositivityLemmasReport pr = verify_positivity_lemmas(c, rep, uniform_rn(c), 25, 91);
      CHECK(pr.ok);
      CHECK(pr.str().find("all positivity checks passed") != std::string::npos);
    }
  }

  // non-uniform mu on the weighted pair groupoid: delta != 1 end to end
  Correspondence cu = pair_units_corr(wb, {Rational(1), Rational(1)});
  UnitMeasure mu{p2.id, {Rational(2), Rational(5)}};
  RNData rn = rn_data(p2, wb, cu.x, cu.lam, mu, {Rational(1)});
  CHECK(verify_positivity_lemmas(cu, regular_rep_bundle(p2), rn, 25, 92).ok);

  // sign representation with a stabilized point: the induced space is zero
  // and both sides of the keystone identity vanish
  Groupoid z2 = cyclic_group("z2", 2);
  Correspondence solo = right_only("solo", z2, counting_haar(z2), {"c"},
                                   [](Idx) { return 0; }, [](Idx p, Idx) { return p; },
                                   {Rational(3)});
  PositivityLemmasReport pr = verify_positivity_lemmas(solo, sign_rep(z2),
                                                       uniform_rn(solo), 10, 93);
  CHECK(pr.ok);
  CHECK(pr.keystone_residual == 0.0);
}

TEST_CASE("corrupting M breaks the cocycle and the keystone, not the invariance") {
  Correspondence fx = fixed_point_corr();
  RNData rn = uniform_rn(fx);
  rn.m[0] *= 4;  // point a of the free orbit
  PositivityLemmasReport pr =
      verify_positivity_lemmas(fx, regular_rep_bundle(fx.h), rn, 10, 7);
  CHECK_FALSE(pr.ok);
  CHECK(pr.measure_invariance);  // nu-side data untouched
  CHECK_FALSE(pr.rn_cocycle);
  CHECK(pr.keystone_residual > 1e-6);
}

TEST_CASE("rank-one composites are positive") {
  Correspondence fx = fixed_point_corr();
  RepBundle reg = regular_rep_bundle(fx.h);
  RNData rn = uniform_rn(fx);
  SectionLayout ul = unit_layout(fx.h, reg);
  OrbitLayout ol = orbit_layout(fx.h, fx.x, reg);
  for (Idx p = 0; p < fx.x.npts; ++p) {
    Fn<CD> dp = delta_fn<CD>(points_carrier(fx.x), fx.x.npts, p);
    CMat comp = bra_matrix(fx, reg, rn, ul, ol, dp) * ket_matrix(fx, reg, rn, ul, ol, dp);
    CHECK(max_abs_entry(comp - comp.adjoint()) < 1e-12);  // uniform mu: plain adjoint
    CHECK(min_hermitian_eigenvalue((comp + comp.adjoint()) * 0.5) > -1e-9);
  }
}
