#include "gpd/gallery.hpp"

#include <algorithm>

namespace gpd {

namespace {

std::vector<Idx> sorted_unique(std::vector<Idx> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/* Left orbit decomposition of the points; one multiplication step suffices
 * because acting twice composes in G. */
struct LeftOrbits {
  std::vector<int> orbit_of;
  std::vector<Idx> reps;
};

LeftOrbits left_orbits(const Groupoid& g, const Bispace& x) {
  LeftOrbits lo;
  lo.orbit_of.assign(x.npts, -1);
  for (Idx p = 0; p < x.npts; ++p) {
    if (lo.orbit_of[p] >= 0) continue;
    int o = static_cast<int>(lo.reps.size());
    lo.reps.push_back(p);
    std::vector<Idx> stack{p};
    lo.orbit_of[p] = o;
    while (!stack.empty()) {
      Idx q = stack.back();
      stack.pop_back();
      for (Idx a = 0; a < g.n; ++a) {
        if (!x.can_l(a, q)) continue;
        Idx r = x.lact(a, q);
        if (lo.orbit_of[r] < 0) {
          lo.orbit_of[r] = o;
          stack.push_back(r);
        }
      }
    }
  }
  return lo;
}

void require_group(const Groupoid& g, const std::string& who) {
  if (g.units.size() != 1)
    throw Error(ErrorCode::InputError,
                who + " expects a group, but " + g.id + " has " +
                    std::to_string(g.units.size()) + " units");
}

void require_homomorphism(const Groupoid& h, const Groupoid& g, const std::vector<Idx>& phi) {
  if (static_cast<int>(phi.size()) != h.n)
    throw Error(ErrorCode::InputError, "homomorphism table must cover every element of " + h.id);
  for (Idx e : phi)
    if (e < 0 || e >= g.n)
      throw Error(ErrorCode::InputError, "homomorphism value out of range of " + g.id);
  if (phi[h.units[0]] != g.units[0])
    throw Error(ErrorCode::InputError, "not a homomorphism: unit of " + h.id +
                                           " sent to " + g.name(phi[h.units[0]]));
  for (Idx a = 0; a < h.n; ++a)
    for (Idx b = 0; b < h.n; ++b)
      if (phi[h.compose(a, b)] != g.compose(phi[a], phi[b]))
        throw Error(ErrorCode::InputError, "not a homomorphism at (" + h.name(a) + ", " +
                                               h.name(b) + ")");
}

/* alpha^{-1} on a single-unit fiber: mass(x) = alpha(inv x). */
MeasureFamily inverted_haar_family(const Groupoid& g, const HaarSystem& alpha,
                                   const Bispace& bs) {
  MeasureFamily lam{bs.id, std::vector<Rational>(bs.npts)};
  for (Idx p = 0; p < bs.npts; ++p) lam.mass[p] = alpha.w(g.inv[p]);
  return lam;
}

/* Cross-check of a built correspondence against the modular ratio
 * delta_G(phi(eta)) / delta_H(eta). */
void check_modular_ratio(const Correspondence& c, const Groupoid& hgrp,
                         const HaarSystem& hhaar, const Groupoid& ggrp,
                         const HaarSystem& ghaar, const std::vector<Idx>& phi,
                         const std::function<Idx(Idx)>& left_part) {
  std::vector<Rational> dg = modular_function(ggrp, ghaar, uniform_unit_measure(ggrp));
  std::vector<Rational> dh = modular_function(hgrp, hhaar, uniform_unit_measure(hgrp));
  for (Idx a = 0; a < c.g.n; ++a) {
    Idx e = left_part(a);  // arrow of hgrp behind the acting arrow
    Rational predicted = dg[phi[e]] / dh[e];
    for (Idx p = 0; p < c.x.npts; ++p)
      if (c.x.can_l(a, p) && c.delta.on_support(a, p) && c.delta.value(a, p) != predicted)
        throw Error(ErrorCode::InvalidStructure,
                    "adjoining function disagrees with the modular ratio at (" + c.g.name(a) +
                        ", " + c.x.points[p] + ")");
  }
}

void check_delta_is_one(const Correspondence& c, const std::string& who) {
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p)
      if (c.delta.on_support(a, p) && c.delta.value(a, p) != Rational(1))
        throw Error(ErrorCode::InvalidStructure,
                    who + ": adjoining function is not 1 at (" + c.g.name(a) + ", " +
                        c.x.points[p] + ")");
}

}  // namespace

Groupoid subgroupoid(const std::string& id, const Groupoid& g, std::vector<Idx> arrows) {
  arrows = sorted_unique(arrows);
  if (arrows.empty()) throw Error(ErrorCode::InputError, "subgroupoid: empty arrow set");
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] < 0 || arrows[i] >= g.n)
      throw Error(ErrorCode::InputError, "subgroupoid: arrow index out of range");
    pos[arrows[i]] = static_cast<int>(i);
  }
  for (Idx a : arrows) {
    if (pos[g.inv[a]] < 0)
      throw Error(ErrorCode::InputError, "subgroupoid: not closed under inverse at " + g.name(a));
    if (pos[g.src[a]] < 0 || pos[g.rng[a]] < 0)
      throw Error(ErrorCode::InputError, "subgroupoid: missing end unit of " + g.name(a));
  }
  for (Idx a : arrows)
    for (Idx b : arrows) {
      Idx ab = g.compose(a, b);
      if (ab != kUndef && pos[ab] < 0)
        throw Error(ErrorCode::InputError, "subgroupoid: not closed under composition at (" +
                                               g.name(a) + ", " + g.name(b) + ")");
    }

  Groupoid s;
  s.id = id;
  s.n = static_cast<int>(arrows.size());
  s.src.resize(s.n);
  s.rng.resize(s.n);
  s.inv.resize(s.n);
  s.comp.assign(static_cast<size_t>(s.n) * s.n, kUndef);
  for (Idx i = 0; i < s.n; ++i) {
    Idx a = arrows[i];
    s.names.push_back(g.names[a]);
    if (g.is_unit(a)) s.units.push_back(i);
    s.src[i] = pos[g.src[a]];
    s.rng[i] = pos[g.rng[a]];
    s.inv[i] = pos[g.inv[a]];
    for (Idx j = 0; j < s.n; ++j) {
      Idx ab = g.compose(a, arrows[j]);
      if (ab != kUndef) s.comp[static_cast<size_t>(i) * s.n + j] = pos[ab];
    }
  }
  s.finalize();
  auto rep = validate_groupoid(s);
  if (!rep.ok())
    throw Error(ErrorCode::InvalidStructure, "subgroupoid of " + g.id + ": " + rep.str());
  return s;
}

// ---------------------------------------------------------------------------
// space maps and quivers

Correspondence space_map_correspondence(const std::string& id,
                                        const std::vector<std::string>& xpts,
                                        const std::vector<std::string>& ypts,
                                        const std::vector<Idx>& f,
                                        std::vector<Rational> masses) {
  if (f.size() != xpts.size())
    throw Error(ErrorCode::InputError, "space map must cover every point of X");
  for (Idx y : f)
    if (y < 0 || y >= static_cast<Idx>(ypts.size()))
      throw Error(ErrorCode::InputError, "space map value out of range of Y");
  Groupoid gy = space_groupoid(id + ":Y", ypts);
  Groupoid hx = space_groupoid(id + ":X", xpts);
  Bispace bs = make_bispace(
      id, gy, hx, xpts, [&](Idx p) { return gy.units[f[p]]; },
      [&](Idx p) { return hx.units[p]; }, [](Idx, Idx p) { return p; },
      [](Idx p, Idx) { return p; });
  MeasureFamily lam = masses.empty() ? counting_family(bs)
                                     : MeasureFamily{bs.id, std::move(masses)};
  if (lam.mass.size() != xpts.size())
    throw Error(ErrorCode::InputError, "mass vector must cover every point of X");
  Correspondence c = build_correspondence(gy, counting_haar(gy), hx, counting_haar(hx), bs, lam);
  check_delta_is_one(c, "space map");
  return c;
}

Correspondence quiver_correspondence(const std::string& id,
                                     const std::vector<std::string>& verts,
                                     const std::vector<std::string>& edges,
                                     const std::vector<Idx>& smap,
                                     const std::vector<Idx>& rmap,
                                     std::vector<Rational> masses) {
  if (smap.size() != edges.size() || rmap.size() != edges.size())
    throw Error(ErrorCode::InputError, "s and r must cover every edge");
  for (size_t i = 0; i < edges.size(); ++i)
    if (smap[i] < 0 || smap[i] >= static_cast<Idx>(verts.size()) || rmap[i] < 0 ||
        rmap[i] >= static_cast<Idx>(verts.size()))
      throw Error(ErrorCode::InputError, "edge end out of range at " + edges[i]);
  Groupoid v = space_groupoid(id + ":V", verts);
  Bispace bs = make_bispace(
      id, v, v, edges, [&](Idx e) { return v.units[rmap[e]]; },
      [&](Idx e) { return v.units[smap[e]]; }, [](Idx, Idx e) { return e; },
      [](Idx e, Idx) { return e; });
  MeasureFamily lam = masses.empty() ? counting_family(bs)
                                     : MeasureFamily{bs.id, std::move(masses)};
  if (lam.mass.size() != edges.size())
    throw Error(ErrorCode::InputError, "mass vector must cover every edge");
  Correspondence c = build_correspondence(v, counting_haar(v), v, counting_haar(v), bs, lam);
  check_delta_is_one(c, "quiver");
  return c;
}

// ---------------------------------------------------------------------------
// group homomorphisms

Correspondence group_hom_correspondence(const std::string& id, const Groupoid& h,
                                        const HaarSystem& beta, const Groupoid& g,
                                        const HaarSystem& alpha,
                                        const std::vector<Idx>& phi) {
  require_group(h, "group_hom_correspondence");
  require_group(g, "group_hom_correspondence");
  require_homomorphism(h, g, phi);
  Bispace bs = make_bispace(
      id, h, g, g.names, [&](Idx) { return h.units[0]; }, [&](Idx) { return g.units[0]; },
      [&](Idx e, Idx p) { return g.compose(phi[e], p); },
      [&](Idx p, Idx a) { return g.compose(p, a); });
  Correspondence c =
      build_correspondence(h, beta, g, alpha, bs, inverted_haar_family(g, alpha, bs));
  check_modular_ratio(c, h, beta, g, alpha, phi, [](Idx a) { return a; });
  return c;
}

Correspondence proper_group_hom_correspondence(const std::string& id, const Groupoid& g,
                                               const HaarSystem& alpha, const Groupoid& h,
                                               const HaarSystem& beta,
                                               const std::vector<Idx>& phi) {
  require_group(g, "proper_group_hom_correspondence");
  require_group(h, "proper_group_hom_correspondence");
  require_homomorphism(h, g, phi);
  Bispace bs = make_bispace(
      id, g, h, g.names, [&](Idx) { return g.units[0]; }, [&](Idx) { return h.units[0]; },
      [&](Idx a, Idx p) { return g.compose(a, p); },
      [&](Idx p, Idx e) { return g.compose(p, phi[e]); });
  Correspondence c =
      build_correspondence(g, alpha, h, beta, bs, inverted_haar_family(g, alpha, bs));
  check_delta_is_one(c, "proper group homomorphism");
  return c;
}

// ---------------------------------------------------------------------------
// measured group actions over a point

Correspondence strong_quasi_invariant_correspondence(
    const std::string& id, const Groupoid& g, const HaarSystem& alpha,
    const std::vector<std::string>& points, const std::function<Idx(Idx, Idx)>& act,
    std::vector<Rational> masses) {
  require_group(g, "strong_quasi_invariant_correspondence");
  if (masses.size() != points.size())
    throw Error(ErrorCode::InputError, "mass vector must cover every point");
  Groupoid pt = space_groupoid(id + ":pt", {"*"});
  Bispace bs = make_bispace(id, g, pt, points, [&](Idx) { return g.units[0]; },
                            [](Idx) { return 0; }, act, [](Idx p, Idx) { return p; });
  MeasureFamily lam{bs.id, std::move(masses)};
  return build_correspondence(g, alpha, pt, counting_haar(pt), bs, lam);
}

// ---------------------------------------------------------------------------
// canonical quotient family

MeasureFamily macho_stadler_family(const Groupoid& g, const HaarSystem& alpha,
                                   const Groupoid& h, const Bispace& x) {
  LeftOrbits lo = left_orbits(g, x);
  int nunits = static_cast<int>(h.units.size());
  std::vector<int> orbit_at_unit(nunits, -1);
  for (size_t o = 0; o < lo.reps.size(); ++o) {
    int up = h.upos(x.sx[lo.reps[o]]);
    if (orbit_at_unit[up] >= 0)
      throw Error(ErrorCode::QuotientNotBijective,
                  "two left orbits over unit " + h.name(x.sx[lo.reps[o]]) + " (points " +
                      x.points[lo.reps[orbit_at_unit[up]]] + " and " + x.points[lo.reps[o]] +
                      ")");
    orbit_at_unit[up] = static_cast<int>(o);
  }
  for (int u = 0; u < nunits; ++u)
    if (orbit_at_unit[u] < 0)
      throw Error(ErrorCode::QuotientNotBijective, "no left orbit over unit " + h.name(h.units[u]));

  MeasureFamily lam{x.id, std::vector<Rational>(x.npts, Rational(0))};
  for (Idx rep : lo.reps)
    for (Idx a : g.fiber_r[g.upos(x.rx[rep])])
      lam.mass[x.lact(g.inv[a], rep)] += alpha.w(a);
  return lam;
}

// ---------------------------------------------------------------------------
// equivalences

bool EquivalenceAxioms::all() const {
  for (const auto& a : axiom)
    if (!a.ok) return false;
  return true;
}

std::string EquivalenceAxioms::str() const {
  static const char* roman[6] = {"i", "ii", "iii", "iv", "v", "vi"};
  std::string out;
  for (int i = 0; i < 6; ++i) {
    out += "(";
    out += roman[i];
    out += ") ";
    out += axiom[i].ok ? "ok" : ("FAIL " + axiom[i].witness);
    out += '\n';
  }
  return out;
}

EquivalenceAxioms check_equivalence_axioms(const Groupoid& g, const Groupoid& h,
                                           const Bispace& x) {
  EquivalenceAxioms r;
  for (auto& a : r.axiom) a = {true, ""};
  r.axiom[2].witness = "open momentum maps: automatic for discrete spaces";

  for (Idx a = 0; a < g.n && r.axiom[0].ok; ++a)
    for (Idx p = 0; p < x.npts; ++p)
      if (!g.is_unit(a) && x.can_l(a, p) && x.lact(a, p) == p) {
        r.axiom[0] = {false, "arrow " + g.name(a) + " fixes point " + x.points[p]};
        break;
      }
  for (Idx p = 0; p < x.npts && r.axiom[1].ok; ++p)
    for (Idx e = 0; e < h.n; ++e)
      if (!h.is_unit(e) && x.can_r(p, e) && x.ract(p, e) == p) {
        r.axiom[1] = {false, "arrow " + h.name(e) + " fixes point " + x.points[p]};
        break;
      }

  for (Idx a = 0; a < g.n && r.axiom[3].ok; ++a)
    for (Idx p = 0; p < x.npts && r.axiom[3].ok; ++p) {
      if (!x.can_l(a, p)) continue;
      for (Idx e = 0; e < h.n; ++e) {
        if (!x.can_r(p, e)) continue;
        if (!x.can_r(x.lact(a, p), e) || !x.can_l(a, x.ract(p, e)) ||
            x.ract(x.lact(a, p), e) != x.lact(a, x.ract(p, e))) {
          r.axiom[3] = {false, "at (" + g.name(a) + ", " + x.points[p] + ", " + h.name(e) + ")"};
          break;
        }
      }
    }

  OrbitSpace ro = right_orbits(h, x);
  std::vector<int> seen_g(g.units.size(), -1);
  for (int o = 0; o < ro.count && r.axiom[4].ok; ++o) {
    int up = g.upos(x.rx[ro.reps[o]]);
    if (seen_g[up] >= 0)
      r.axiom[4] = {false, "two right orbits over unit " + g.name(x.rx[ro.reps[o]])};
    seen_g[up] = o;
  }
  for (size_t u = 0; u < g.units.size() && r.axiom[4].ok; ++u)
    if (seen_g[u] < 0) r.axiom[4] = {false, "no right orbit over unit " + g.name(g.units[u])};

  LeftOrbits lo = left_orbits(g, x);
  std::vector<int> seen_h(h.units.size(), -1);
  for (size_t o = 0; o < lo.reps.size() && r.axiom[5].ok; ++o) {
    int up = h.upos(x.sx[lo.reps[o]]);
    if (seen_h[up] >= 0)
      r.axiom[5] = {false, "two left orbits over unit " + h.name(x.sx[lo.reps[o]])};
    seen_h[up] = static_cast<int>(o);
  }
  for (size_t u = 0; u < h.units.size() && r.axiom[5].ok; ++u)
    if (seen_h[u] < 0) r.axiom[5] = {false, "no left orbit over unit " + h.name(h.units[u])};

  return r;
}

Correspondence equivalence_correspondence(const Groupoid& g, const HaarSystem& alpha,
                                          const Groupoid& h, const HaarSystem& beta,
                                          const Bispace& x) {
  static const char* roman[6] = {"i", "ii", "iii", "iv", "v", "vi"};
  EquivalenceAxioms ax = check_equivalence_axioms(g, h, x);
  for (int i = 0; i < 6; ++i)
    if (!ax.axiom[i].ok)
      throw Error(ErrorCode::InvalidStructure, std::string("equivalence axiom (") + roman[i] +
                                                   ") fails: " + ax.axiom[i].witness);
  Correspondence c =
      build_correspondence(g, alpha, h, beta, x, macho_stadler_family(g, alpha, h, x));
  check_delta_is_one(c, "equivalence");
  return c;
}

FullnessPair fullness_pair(const Correspondence& c) {
  FullnessPair fp;
  fp.right = correspondence_flags(c).full;
  fp.left = true;
  for (Idx a = 0; a < c.g.n && fp.left; ++a) {
    bool hit = false;
    for (Idx p = 0; p < c.x.npts && !hit; ++p)
      hit = c.x.can_l(a, p) && c.lam.at(p) > 0;
    fp.left = hit;
  }
  return fp;
}

// ---------------------------------------------------------------------------
// generalised morphisms

Correspondence buneci_stachura_correspondence(
    const std::string& id, const Groupoid& g, const HaarSystem& alpha,
    const Groupoid& h, const HaarSystem& beta, const std::function<Idx(Idx)>& anchor,
    const std::function<Idx(Idx, Idx)>& theta,
    const std::function<Rational(Idx, Idx)>& delta_theta) {
  for (Idx p = 0; p < h.n; ++p) {
    Idx u = anchor(p);
    if (u < 0 || u >= g.n || !g.is_unit(u))
      throw Error(ErrorCode::InputError,
                  "anchor must send " + h.name(p) + " to a unit of " + g.id);
  }
  auto checked_theta = [&](Idx a, Idx p) {
    Idx q = theta(a, p);
    if (q < 0 || q >= h.n)
      throw Error(ErrorCode::InputError,
                  "action value out of range at (" + g.name(a) + ", " + h.name(p) + ")");
    return q;
  };
  Bispace bs = make_bispace(
      id, g, h, h.names, anchor, [&](Idx p) { return h.src[p]; }, checked_theta,
      [&](Idx p, Idx e) { return h.compose(p, e); });

  // theta must commute with right multiplication; the remaining action
  // axioms are revalidated inside build_correspondence.
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < bs.npts; ++p) {
      if (!bs.can_l(a, p)) continue;
      for (Idx e : h.fiber_r[h.upos(h.src[p])]) {
        Idx lhs = h.compose(bs.lact(a, p), e);
        Idx rhs = bs.can_l(a, h.compose(p, e)) ? bs.lact(a, h.compose(p, e)) : kUndef;
        if (lhs == kUndef || lhs != rhs)
          throw Error(ErrorCode::InputError,
                      "action does not commute with right multiplication at (" + g.name(a) +
                          ", " + h.name(p) + ", " + h.name(e) + ")");
      }
    }

  MeasureFamily lam{bs.id, std::vector<Rational>(bs.npts)};
  for (Idx p = 0; p < bs.npts; ++p) lam.mass[p] = beta.w(h.inv[p]);

  AdjoiningFn given{bs.id, g.n, bs.npts,
                    std::vector<Rational>(static_cast<size_t>(g.n) * bs.npts, Rational(1)),
                    std::vector<char>(static_cast<size_t>(g.n) * bs.npts, 0)};
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < bs.npts; ++p) {
      if (!bs.can_l(a, p)) continue;
      Rational v = delta_theta(a, p);
      if (v <= 0)
        throw Error(ErrorCode::InputError, "transfer function must be positive at (" +
                                               g.name(a) + ", " + h.name(p) + ")");
      given.value(a, p) = v;
      given.on_support_[static_cast<size_t>(a) * bs.npts + p] = 1;
    }
  CheckResult iv = verify_condition_iv(g, alpha, bs, lam, given);
  if (!iv.ok)
    throw Error(ErrorCode::InputError, "transfer identity fails: " + iv.witness);

  Correspondence c = build_correspondence(g, alpha, h, beta, bs, lam);
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < bs.npts; ++p)
      if (c.delta.on_support(a, p) && c.delta.value(a, p) != given.value(a, p))
        throw Error(ErrorCode::InvalidStructure,
                    "computed adjoining function differs from the transfer function at (" +
                        g.name(a) + ", " + h.name(p) + ")");
  return c;
}

// ---------------------------------------------------------------------------
// transformation groupoid sandwich

Correspondence subgroup_transformation_correspondence(
    const std::string& id, const Groupoid& g, const HaarSystem& lam,
    const std::vector<Idx>& h_elems, const std::vector<Idx>& k_elems,
    const std::vector<std::string>& xpts, const std::function<Idx(Idx, Idx)>& act,
    const Rational& h_scale, const Rational& k_scale) {
  require_group(g, "subgroup_transformation_correspondence");
  std::vector<Idx> hs = sorted_unique(h_elems), ks = sorted_unique(k_elems);
  Groupoid hg = subgroupoid(id + ":H", g, hs);
  Groupoid kg = subgroupoid(id + ":K", g, ks);
  HaarSystem hhaar = haar_from_unit_weights(hg, {h_scale});
  HaarSystem khaar = haar_from_unit_weights(kg, {k_scale});

  Groupoid pt = space_groupoid(id + ":pt", {"*"});
  auto base = [&](const Groupoid& grp, const std::vector<Idx>& lift, const char* tag) {
    return make_bispace(
        id + std::string(tag), pt, grp, xpts, [](Idx) { return 0; },
        [&](Idx) { return grp.units[0]; }, [](Idx, Idx p) { return p; },
        [&](Idx p, Idx e) { return act(p, lift[e]); });
  };
  std::vector<Idx> full(g.n);
  for (Idx a = 0; a < g.n; ++a) full[a] = a;
  TransformationGroupoid tgg = right_transformation_groupoid(g, base(g, full, ":XG"));
  auto grep = validate_groupoid(tgg.gpd);
  if (!grep.ok())
    throw Error(ErrorCode::InputError, "not a right group action: " + grep.str());
  TransformationGroupoid tgh = right_transformation_groupoid(hg, base(hg, hs, ":XH"));
  TransformationGroupoid tgk = right_transformation_groupoid(kg, base(kg, ks, ":XK"));
  HaarSystem thaar = right_transformation_haar(tgh, hhaar);
  HaarSystem kthaar = right_transformation_haar(tgk, khaar);

  // carrier: arrows (x, gamma) of X x| G; unit positions are point indices.
  const Groupoid& big = tgg.gpd;
  Bispace bs = make_bispace(
      id, tgh.gpd, tgk.gpd, big.names,
      [&](Idx b) { return tgh.unit_of_point[tgg.arrow_pair[b].first]; },
      [&](Idx b) { return tgk.unit_of_point[big.upos(big.src[b])]; },
      [&](Idx a, Idx b) {
        auto [y, esub] = tgh.arrow_pair[a];
        return tgg.pair_index(y, g.compose(hs[esub], tgg.arrow_pair[b].second), g.n);
      },
      [&](Idx b, Idx cc) {
        auto [xp, ga] = tgg.arrow_pair[b];
        return tgg.pair_index(xp, g.compose(ga, ks[tgk.arrow_pair[cc].second]), g.n);
      });
  MeasureFamily fam{bs.id, std::vector<Rational>(bs.npts)};
  for (Idx b = 0; b < bs.npts; ++b) fam.mass[b] = lam.w(g.inv[tgg.arrow_pair[b].second]);

  Correspondence c = build_correspondence(tgh.gpd, thaar, tgk.gpd, kthaar, bs, fam);
  check_modular_ratio(c, hg, hhaar, g, lam, hs,
                      [&](Idx a) { return tgh.arrow_pair[a].second; });
  return c;
}

// ---------------------------------------------------------------------------
// induction from a subgroupoid

Correspondence induction_correspondence(const std::string& id, const Groupoid& g,
                                        const HaarSystem& alpha,
                                        const std::vector<Idx>& h_arrows,
                                        std::vector<Rational> h_unit_weights) {
  std::vector<Idx> hs = sorted_unique(h_arrows);
  Groupoid hg = subgroupoid(id + ":H", g, hs);
  HaarSystem beta = h_unit_weights.empty() ? counting_haar(hg)
                                           : haar_from_unit_weights(hg, h_unit_weights);

  std::vector<int> hupos_of_gunit(g.n, -1);
  for (size_t i = 0; i < hg.units.size(); ++i) hupos_of_gunit[hs[hg.units[i]]] = static_cast<int>(i);
  std::vector<Idx> carr;
  std::vector<Idx> point_of(g.n, kUndef);
  std::vector<std::string> names;
  for (Idx a = 0; a < g.n; ++a) {
    if (hupos_of_gunit[g.src[a]] < 0) continue;
    point_of[a] = static_cast<Idx>(carr.size());
    carr.push_back(a);
    names.push_back(g.names[a]);
  }

  Bispace bs = make_bispace(
      id, g, hg, names, [&](Idx p) { return g.rng[carr[p]]; },
      [&](Idx p) { return hg.units[hupos_of_gunit[g.src[carr[p]]]]; },
      [&](Idx a, Idx p) { return point_of[g.compose(a, carr[p])]; },
      [&](Idx p, Idx e) { return point_of[g.compose(carr[p], hs[e])]; });
  Correspondence c =
      build_correspondence(g, alpha, hg, beta, bs, macho_stadler_family(g, alpha, hg, bs));
  check_delta_is_one(c, "induction");
  return c;
}

// ---------------------------------------------------------------------------
// registry

namespace {

CheckResult delta_equals_one(const Correspondence& c) {
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p)
      if (c.delta.on_support(a, p) && c.delta.value(a, p) != Rational(1))
        return {false, "Delta(" + c.g.name(a) + ", " + c.x.points[p] + ") = " +
                           format_rational(c.delta.value(a, p))};
  return {true, ""};
}

/* Delta(a, p) mass(a p) = mass(p): the derivative property, exact. */
CheckResult delta_is_derivative(const Correspondence& c) {
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p) {
      if (!c.x.can_l(a, p) || !c.delta.on_support(a, p)) continue;
      if (c.delta.value(a, p) * c.lam.at(c.x.lact(a, p)) != c.lam.at(p))
        return {false, "at (" + c.g.name(a) + ", " + c.x.points[p] + ")"};
    }
  return {true, ""};
}

Correspondence build_pair3_point_equivalence() {
  Groupoid g = pair_groupoid("pair3", 3);
  Groupoid h = space_groupoid("pt", {"*"});
  Bispace x = make_bispace(
      "pair3-pts", g, h, {"p1", "p2", "p3"}, [&](Idx p) { return g.units[p]; },
      [](Idx) { return 0; }, [&](Idx a, Idx) { return g.upos(g.rng[a]); },
      [](Idx p, Idx) { return p; });
  return equivalence_correspondence(g, counting_haar(g), h, counting_haar(h), x);
}

Correspondence build_pair2_self_equivalence() {
  Groupoid g = pair_groupoid("pair2", 2);
  Bispace x = make_bispace(
      "pair2-self", g, g, g.names, [&](Idx p) { return g.rng[p]; },
      [&](Idx p) { return g.src[p]; },
      [&](Idx a, Idx p) { return g.compose(a, p); },
      [&](Idx p, Idx e) { return g.compose(p, e); });
  return equivalence_correspondence(g, counting_haar(g), g, counting_haar(g), x);
}

Correspondence build_macho_two_orbit() {
  Groupoid g = cyclic_group("z2", 2);
  Groupoid h = space_groupoid("orbs", {"o1", "o2"});
  // swap inside {a, b} and inside {c, d}
  Bispace x = make_bispace(
      "two-orbit", g, h, {"a", "b", "c", "d"}, [&](Idx) { return g.units[0]; },
      [&](Idx p) { return h.units[p / 2]; },
      [](Idx e, Idx p) { return e == 0 ? p : (p ^ 1); }, [](Idx p, Idx) { return p; });
  MeasureFamily lam = macho_stadler_family(g, counting_haar(g), h, x);
  Correspondence c =
      build_correspondence(g, counting_haar(g), h, counting_haar(h), x, lam);
  return c;
}

}  // namespace

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = [] {
    std::vector<GalleryEntry> v;

    v.push_back({"space-map-fold", "fold {x1,x2,x3} -> {y1,y2}, unit masses", "1",
                 [] {
                   return space_map_correspondence("space-map-fold", {"x1", "x2", "x3"},
                                                   {"y1", "y2"}, {0, 0, 1});
                 },
                 delta_equals_one});
    v.push_back({"space-map-weighted", "fold {x1,x2,x3} -> {y1,y2}, masses 1,2,3", "1",
                 [] {
                   return space_map_correspondence("space-map-weighted", {"x1", "x2", "x3"},
                                                   {"y1", "y2"}, {0, 0, 1},
                                                   {Rational(1), Rational(2), Rational(3)});
                 },
                 delta_equals_one});
    v.push_back({"quiver", "vertices {v,w}, edges v->w, w->v, v->w, masses 1,1,2", "1",
                 [] {
                   return quiver_correspondence("quiver", {"v", "w"}, {"a", "b", "c"},
                                                {0, 1, 0}, {1, 0, 1},
                                                {Rational(1), Rational(1), Rational(2)});
                 },
                 delta_equals_one});
    v.push_back({"group-hom", "inclusion Z/2 -> Z/4", "delta_G(phi)/delta_H (= 1)",
                 [] {
                   Groupoid h = cyclic_group("z2", 2), g = cyclic_group("z4", 4);
                   return group_hom_correspondence("group-hom", h, counting_haar(h), g,
                                                   counting_haar(g), {0, 2});
                 },
                 delta_equals_one});
    v.push_back({"proper-group-hom", "quotient Z/4 -> Z/2", "1",
                 [] {
                   Groupoid g = cyclic_group("z2", 2), h = cyclic_group("z4", 4);
                   return proper_group_hom_correspondence("proper-group-hom", g,
                                                          counting_haar(g), h,
                                                          counting_haar(h), {0, 1, 0, 1});
                 },
                 delta_equals_one});
    v.push_back({"strong-quasi-invariant", "Z/2 swap on {p,q}, masses 1,2",
                 "masses(x)/masses(g x)",
                 [] {
                   Groupoid g = cyclic_group("z2", 2);
                   return strong_quasi_invariant_correspondence(
                       "strong-quasi-invariant", g, counting_haar(g), {"p", "q"},
                       [](Idx e, Idx p) { return e == 0 ? p : 1 - p; },
                       {Rational(1), Rational(2)});
                 },
                 delta_is_derivative});
    v.push_back({"macho-stadler", "Z/2 on two 2-point orbits over a 2-point base", "1",
                 [] { return build_macho_two_orbit(); }, delta_equals_one});
    v.push_back({"equivalence-pair", "pair groupoid on 3 points over a point", "1",
                 [] { return build_pair3_point_equivalence(); }, delta_equals_one});
    v.push_back({"equivalence-self", "pair groupoid on 2 points over itself", "1",
                 [] { return build_pair2_self_equivalence(); }, delta_equals_one});
    v.push_back({"buneci-stachura-trivial", "Z/2 acting trivially on Z/3", "Delta_Theta (= 1)",
                 [] {
                   Groupoid g = cyclic_group("z2", 2);
                   Groupoid h = cyclic_group("z3", 3);
                   return buneci_stachura_correspondence(
                       "buneci-stachura-trivial", g, counting_haar(g), h, counting_haar(h),
                       [&](Idx) { return 0; }, [](Idx, Idx p) { return p; },
                       [](Idx, Idx) { return Rational(1); });
                 },
                 delta_equals_one});
    v.push_back({"buneci-stachura-mult", "Z/3 left-multiplying itself", "Delta_Theta (= 1)",
                 [] {
                   Groupoid g = cyclic_group("z3", 3);
                   Groupoid h = cyclic_group("z3h", 3);
                   return buneci_stachura_correspondence(
                       "buneci-stachura-mult", g, counting_haar(g), h, counting_haar(h),
                       [&](Idx) { return 0; },
                       [&](Idx a, Idx p) { return h.compose(a, p); },
                       [](Idx, Idx) { return Rational(1); });
                 },
                 delta_equals_one});
    v.push_back({"subgroup-transformation",
                 "Z/4 with H = {0,2}, K = Z/4 on a 2-point quotient set",
                 "delta_G/delta_H (= 1)",
                 [] {
                   Groupoid g = cyclic_group("z4", 4);
                   return subgroup_transformation_correspondence(
                       "subgroup-transformation", g, counting_haar(g), {0, 2}, {0, 1, 2, 3},
                       {"a", "b"}, [](Idx p, Idx e) { return (e % 2) == 0 ? p : 1 - p; });
                 },
                 delta_equals_one});
    v.push_back({"induction-units", "pair groupoid on 2 points over its unit space", "1",
                 [] {
                   Groupoid g = pair_groupoid("pair2", 2);
                   return induction_correspondence("induction-units", g, counting_haar(g),
                                                   {g.arrow_by_name("1.1"),
                                                    g.arrow_by_name("2.2")});
                 },
                 delta_equals_one});
    v.push_back({"induction-isotropy", "Z/2 plus an isolated unit, over the Z/2 part", "1",
                 [] {
                   Groupoid g = disjoint_union("z2v", cyclic_group("z2", 2),
                                               space_groupoid("v", {"v"}));
                   return induction_correspondence("induction-isotropy", g, counting_haar(g),
                                                   {0, 1});
                 },
                 delta_equals_one});
    v.push_back({"induction-full", "Z/3 over itself", "1",
                 [] {
                   Groupoid g = cyclic_group("z3", 3);
                   return induction_correspondence("induction-full", g, counting_haar(g),
                                                   {0, 1, 2});
                 },
                 delta_equals_one});
    return v;
  }();
  return entries;
}

const GalleryEntry* gallery_entry(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace gpd
