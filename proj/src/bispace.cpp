#include "gpd/bispace.hpp"

#include <numeric>

namespace gpd {

Idx Bispace::point_by_name(const std::string& s) const {
  for (Idx x = 0; x < npts; ++x)
    if (points[x] == s) return x;
  throw Error(ErrorCode::InputError, "no point named '" + s + "' in bispace " + id);
}

Bispace make_bispace(const std::string& id, const Groupoid& g, const Groupoid& h,
                     std::vector<std::string> points,
                     const std::function<Idx(Idx)>& rx,
                     const std::function<Idx(Idx)>& sx,
                     const std::function<Idx(Idx, Idx)>& lact,
                     const std::function<Idx(Idx, Idx)>& ract) {
  Bispace x;
  x.id = id;
  x.left_id = g.id;
  x.right_id = h.id;
  x.npts = static_cast<int>(points.size());
  x.points = std::move(points);
  x.gn = g.n;
  x.hn = h.n;
  x.rx.resize(x.npts);
  x.sx.resize(x.npts);
  for (Idx p = 0; p < x.npts; ++p) {
    x.rx[p] = rx(p);
    x.sx[p] = sx(p);
  }
  x.lact_.assign(static_cast<size_t>(g.n) * x.npts, kUndef);
  x.ract_.assign(static_cast<size_t>(x.npts) * h.n, kUndef);
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < x.npts; ++p)
      if (g.src[a] == x.rx[p]) x.lact_[static_cast<size_t>(a) * x.npts + p] = lact(a, p);
  for (Idx p = 0; p < x.npts; ++p)
    for (Idx e = 0; e < h.n; ++e)
      if (x.sx[p] == h.rng[e]) x.ract_[static_cast<size_t>(p) * h.n + e] = ract(p, e);
  return x;
}

ValidationReport validate_bispace(const Groupoid& g, const Groupoid& h, const Bispace& x) {
  ValidationReport r;
  if (x.left_id != g.id || x.right_id != h.id)
    r.fail("carrier", "bispace " + x.id + " is bound to (" + x.left_id + ", " + x.right_id + ")");
  if (x.gn != g.n || x.hn != h.n) {
    r.fail("table sizes", "action tables built against different arrow counts");
    return r;
  }
  auto pname = [&](Idx p) { return x.points[p]; };
  for (Idx p = 0; p < x.npts; ++p) {
    if (x.rx[p] < 0 || x.rx[p] >= g.n || !g.is_unit(x.rx[p]))
      r.fail("momentum range", "rX(" + pname(p) + ") is not a unit of " + g.id);
    if (x.sx[p] < 0 || x.sx[p] >= h.n || !h.is_unit(x.sx[p]))
      r.fail("momentum range", "sX(" + pname(p) + ") is not a unit of " + h.id);
  }
  if (!r.ok()) return r;

  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < x.npts; ++p) {
      bool should = g.src[a] == x.rx[p];
      Idx y = x.lact(a, p);
      if (should && y == kUndef)
        r.fail("left composability", "(" + g.name(a) + ", " + pname(p) + ") undefined");
      if (!should && y != kUndef)
        r.fail("left composability", "(" + g.name(a) + ", " + pname(p) + ") defined");
      if (y != kUndef) {
        if (y < 0 || y >= x.npts) {
          r.fail("left action range", "(" + g.name(a) + ", " + pname(p) + ")");
          continue;
        }
        if (x.rx[y] != g.rng[a])
          r.fail("left momentum equivariance", "rX(" + g.name(a) + " . " + pname(p) + ")");
        if (x.sx[y] != x.sx[p])
          r.fail("left action preserves sX", "(" + g.name(a) + ", " + pname(p) + ")");
      }
    }
  for (Idx p = 0; p < x.npts; ++p)
    for (Idx e = 0; e < h.n; ++e) {
      bool should = x.sx[p] == h.rng[e];
      Idx y = x.ract(p, e);
      if (should && y == kUndef)
        r.fail("right composability", "(" + pname(p) + ", " + h.name(e) + ") undefined");
      if (!should && y != kUndef)
        r.fail("right composability", "(" + pname(p) + ", " + h.name(e) + ") defined");
      if (y != kUndef) {
        if (y < 0 || y >= x.npts) {
          r.fail("right action range", "(" + pname(p) + ", " + h.name(e) + ")");
          continue;
        }
        if (x.sx[y] != h.src[e])
          r.fail("right momentum equivariance", "sX(" + pname(p) + " . " + h.name(e) + ")");
        if (x.rx[y] != x.rx[p])
          r.fail("right action preserves rX", "(" + pname(p) + ", " + h.name(e) + ")");
      }
    }
  if (!r.ok()) return r;

  for (Idx p = 0; p < x.npts; ++p) {
    if (x.lact(x.rx[p], p) != p) r.fail("left unit law", pname(p));
    if (x.ract(p, x.sx[p]) != p) r.fail("right unit law", pname(p));
  }

  for (Idx a = 0; a < g.n; ++a)
    for (Idx b = 0; b < g.n; ++b) {
      Idx ab = g.compose(a, b);
      if (ab == kUndef) continue;
      for (Idx p = 0; p < x.npts; ++p) {
        if (!x.can_l(b, p)) continue;
        if (x.lact(ab, p) != x.lact(a, x.lact(b, p)))
          r.fail("left associativity",
                 "(" + g.name(a) + ", " + g.name(b) + ", " + pname(p) + ")");
      }
    }
  for (Idx e = 0; e < h.n; ++e)
    for (Idx f = 0; f < h.n; ++f) {
      Idx ef = h.compose(e, f);
      if (ef == kUndef) continue;
      for (Idx p = 0; p < x.npts; ++p) {
        if (!x.can_r(p, e)) continue;
        if (x.ract(p, ef) != x.ract(x.ract(p, e), f))
          r.fail("right associativity",
                 "(" + pname(p) + ", " + h.name(e) + ", " + h.name(f) + ")");
      }
    }
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < x.npts; ++p) {
      if (!x.can_l(a, p)) continue;
      for (Idx e = 0; e < h.n; ++e) {
        if (!x.can_r(p, e)) continue;
        if (x.ract(x.lact(a, p), e) != x.lact(a, x.ract(p, e)))
          r.fail("action commutation",
                 "(" + g.name(a) + ", " + pname(p) + ", " + h.name(e) + ")");
      }
    }
  return r;
}

ValidationReport validate_measure_family(const Groupoid& h, const Bispace& x,
                                         const MeasureFamily& lam) {
  ValidationReport r;
  if (lam.bispace_id != x.id)
    r.fail("carrier", "family tagged " + lam.bispace_id + " used with bispace " + x.id);
  if (lam.mass.size() != static_cast<size_t>(x.npts)) {
    r.fail("size", "mass table size differs from point count");
    return r;
  }
  for (Idx p = 0; p < x.npts; ++p)
    if (lam.mass[p] < 0) r.fail("nonnegativity", x.points[p]);
  for (Idx p = 0; p < x.npts; ++p)
    for (Idx e = 0; e < h.n; ++e) {
      Idx y = x.ract(p, e);
      if (y != kUndef && lam.mass[y] != lam.mass[p])
        r.fail("right invariance", "mass(" + x.points[p] + " . " + h.name(e) +
               ") differs from mass(" + x.points[p] + ")");
    }
  for (Idx u : h.units) {
    Rational total(0);
    bool in_image = false;
    for (Idx p = 0; p < x.npts; ++p)
      if (x.sx[p] == u) { in_image = true; total += lam.mass[p]; }
    if (in_image && total == 0)
      r.fail("properness", "fiber over " + h.name(u) + " has zero total mass");
  }
  return r;
}

MeasureFamily counting_family(const Bispace& x) {
  return {x.id, std::vector<Rational>(x.npts, Rational(1))};
}

AdjoiningFn compute_adjoining(const Groupoid& g, const HaarSystem& alpha,
                              const Bispace& x, const MeasureFamily& lam) {
  AdjoiningFn d;
  d.bispace_id = x.id;
  d.gn = g.n;
  d.npts = x.npts;
  d.value_.assign(static_cast<size_t>(g.n) * x.npts, Rational(1));
  d.on_support_.assign(static_cast<size_t>(g.n) * x.npts, 0);
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < x.npts; ++p) {
      Idx y = x.lact(a, p);
      if (y == kUndef) continue;
      bool sp = lam.mass[p] > 0, sy = lam.mass[y] > 0;
      if (sp != sy)
        throw Error(ErrorCode::SupportNotInvariant,
                    "pair (" + g.name(a) + ", " + x.points[p] +
                    ") moves mass " + format_rational(lam.mass[p]) + " to mass " +
                    format_rational(lam.mass[y]));
      if (sp) {
        d.value(a, p) = (alpha.weight[g.rng[a]] * lam.mass[p]) /
                        (alpha.weight[g.src[a]] * lam.mass[y]);
        d.on_support_[static_cast<size_t>(a) * x.npts + p] = 1;
      }
    }
  return d;
}

CheckResult verify_condition_iv(const Groupoid& g, const HaarSystem& alpha,
                                const Bispace& x, const MeasureFamily& lam,
                                const AdjoiningFn& delta) {
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < x.npts; ++p) {
      Idx y = x.lact(a, p);
      if (y == kUndef) continue;
      Rational lhs = lam.mass[p] * alpha.weight[g.rng[a]];
      Rational rhs = lam.mass[y] * delta.value(a, p) * alpha.weight[g.src[a]];
      if (lhs != rhs)
        return {false, "point mass at (" + g.name(a) + ", " + x.points[p] + "): " +
                       format_rational(lhs) + " vs " + format_rational(rhs)};
    }
  return {true, ""};
}

// ---------------------------------------------------------------------------

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

OrbitSpace orbits_from(UnionFind& uf, int n) {
  OrbitSpace o;
  o.orbit_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (o.orbit_of[root] < 0) {
      o.orbit_of[root] = o.count++;
      o.reps.push_back(root);
    }
    o.orbit_of[i] = o.orbit_of[root];
  }
  return o;
}
}  // namespace

OrbitSpace right_orbits(const Groupoid& h, const Bispace& x) {
  UnionFind uf(x.npts);
  for (Idx p = 0; p < x.npts; ++p)
    for (Idx e = 0; e < h.n; ++e) {
      Idx y = x.ract(p, e);
      if (y != kUndef) uf.unite(p, y);
    }
  return orbits_from(uf, x.npts);
}

OrbitSpace unit_orbits(const Groupoid& h) {
  UnionFind uf(static_cast<int>(h.units.size()));
  for (Idx a = 0; a < h.n; ++a) uf.unite(h.upos(h.src[a]), h.upos(h.rng[a]));
  return orbits_from(uf, static_cast<int>(h.units.size()));
}

QuotientFamily quotient_measure_family(const Groupoid& h, const Bispace& x,
                                       const MeasureFamily& lam) {
  QuotientFamily q;
  q.xorbits = right_orbits(h, x);
  q.uorbits = unit_orbits(h);
  q.mass_by_unit.assign(h.units.size(), std::vector<Rational>(q.xorbits.count, Rational(0)));
  for (size_t up = 0; up < h.units.size(); ++up)
    for (Idx p = 0; p < x.npts; ++p)
      if (x.sx[p] == h.units[up])
        q.mass_by_unit[up][q.xorbits.orbit_of[p]] += lam.mass[p];
  return q;
}

CheckResult quotient_family_well_defined(const Groupoid& h, const Bispace& x,
                                         const QuotientFamily& q) {
  for (size_t u1 = 0; u1 < h.units.size(); ++u1)
    for (size_t u2 = u1 + 1; u2 < h.units.size(); ++u2) {
      if (q.uorbits.orbit_of[u1] != q.uorbits.orbit_of[u2]) continue;
      if (q.mass_by_unit[u1] != q.mass_by_unit[u2])
        return {false, "representatives " + h.name(h.units[u1]) + " and " +
                       h.name(h.units[u2]) + " of the same class give different measures"};
    }
  (void)x;
  return {true, ""};
}

std::vector<Rational> beta_x_at(const Groupoid& h, const HaarSystem& beta,
                                const Bispace& x, Idx rep) {
  std::vector<Rational> out(x.npts, Rational(0));
  for (Idx e = 0; e < h.n; ++e) {
    Idx y = x.ract(rep, e);
    if (y != kUndef) out[y] += beta.w(e);
  }
  return out;
}

BetaX beta_x(const Groupoid& h, const HaarSystem& beta, const Bispace& x) {
  BetaX b;
  b.orbits = right_orbits(h, x);
  for (int o = 0; o < b.orbits.count; ++o)
    b.mass.push_back(beta_x_at(h, beta, x, b.orbits.reps[o]));
  return b;
}

// ---------------------------------------------------------------------------

TransformationGroupoid left_transformation_groupoid(const Groupoid& g, const Bispace& x) {
  TransformationGroupoid tg;
  tg.pair_index_.assign(static_cast<size_t>(g.n) * x.npts, kUndef);
  Groupoid& t = tg.gpd;
  t.id = g.id + "|x" + x.id;
  for (Idx a = 0; a < g.n; ++a)
    for (Idx p = 0; p < x.npts; ++p) {
      if (!x.can_l(a, p)) continue;
      tg.pair_index_[static_cast<size_t>(a) * x.npts + p] =
          static_cast<Idx>(tg.arrow_pair.size());
      tg.arrow_pair.emplace_back(a, p);
      t.names.push_back("(" + g.name(a) + "|" + x.points[p] + ")");
    }
  t.n = static_cast<int>(tg.arrow_pair.size());
  tg.unit_of_point.resize(x.npts);
  for (Idx p = 0; p < x.npts; ++p)
    tg.unit_of_point[p] = tg.pair_index(x.rx[p], p, x.npts);
  for (Idx p = 0; p < x.npts; ++p) t.units.push_back(tg.unit_of_point[p]);
  t.src.resize(t.n);
  t.rng.resize(t.n);
  t.inv.resize(t.n);
  for (Idx i = 0; i < t.n; ++i) {
    auto [a, p] = tg.arrow_pair[i];
    t.src[i] = tg.unit_of_point[p];
    t.rng[i] = tg.unit_of_point[x.lact(a, p)];
    t.inv[i] = tg.pair_index(g.inv[a], x.lact(a, p), x.npts);
  }
  t.comp.assign(static_cast<size_t>(t.n) * t.n, kUndef);
  for (Idx i = 0; i < t.n; ++i)
    for (Idx j = 0; j < t.n; ++j) {
      auto [a1, p1] = tg.arrow_pair[i];
      auto [a2, p2] = tg.arrow_pair[j];
      if (p1 != x.lact(a2, p2)) continue;
      t.comp[static_cast<size_t>(i) * t.n + j] =
          tg.pair_index(g.compose(a1, a2), p2, x.npts);
    }
  t.finalize();
  return tg;
}

TransformationGroupoid right_transformation_groupoid(const Groupoid& h, const Bispace& x) {
  TransformationGroupoid tg;
  tg.pair_index_.assign(static_cast<size_t>(x.npts) * h.n, kUndef);
  Groupoid& t = tg.gpd;
  t.id = x.id + "x|" + h.id;
  for (Idx p = 0; p < x.npts; ++p)
    for (Idx e = 0; e < h.n; ++e) {
      if (!x.can_r(p, e)) continue;
      tg.pair_index_[static_cast<size_t>(p) * h.n + e] =
          static_cast<Idx>(tg.arrow_pair.size());
      tg.arrow_pair.emplace_back(p, e);
      t.names.push_back("(" + x.points[p] + "|" + h.name(e) + ")");
    }
  t.n = static_cast<int>(tg.arrow_pair.size());
  tg.unit_of_point.resize(x.npts);
  for (Idx p = 0; p < x.npts; ++p)
    tg.unit_of_point[p] = tg.pair_index(p, x.sx[p], h.n);
  for (Idx p = 0; p < x.npts; ++p) t.units.push_back(tg.unit_of_point[p]);
  t.src.resize(t.n);
  t.rng.resize(t.n);
  t.inv.resize(t.n);
  for (Idx i = 0; i < t.n; ++i) {
    auto [p, e] = tg.arrow_pair[i];
    t.src[i] = tg.unit_of_point[x.ract(p, e)];
    t.rng[i] = tg.unit_of_point[p];
    t.inv[i] = tg.pair_index(x.ract(p, e), h.inv[e], h.n);
  }
  t.comp.assign(static_cast<size_t>(t.n) * t.n, kUndef);
  for (Idx i = 0; i < t.n; ++i)
    for (Idx j = 0; j < t.n; ++j) {
      auto [p1, e1] = tg.arrow_pair[i];
      auto [p2, e2] = tg.arrow_pair[j];
      if (x.ract(p1, e1) != p2) continue;
      t.comp[static_cast<size_t>(i) * t.n + j] =
          tg.pair_index(p1, h.compose(e1, e2), h.n);
    }
  t.finalize();
  return tg;
}

HaarSystem left_transformation_haar(const TransformationGroupoid& tg, const HaarSystem& alpha) {
  HaarSystem h{tg.gpd.id, std::vector<Rational>(tg.gpd.n)};
  for (Idx i = 0; i < tg.gpd.n; ++i) h.weight[i] = alpha.w(tg.arrow_pair[i].first);
  return h;
}

HaarSystem right_transformation_haar(const TransformationGroupoid& tg, const HaarSystem& beta) {
  HaarSystem h{tg.gpd.id, std::vector<Rational>(tg.gpd.n)};
  for (Idx i = 0; i < tg.gpd.n; ++i) h.weight[i] = beta.w(tg.arrow_pair[i].second);
  return h;
}

}  // namespace gpd
