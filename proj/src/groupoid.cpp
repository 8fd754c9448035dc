#include "gpd/groupoid.hpp"

#include <algorithm>

namespace gpd {

Idx Groupoid::arrow_by_name(const std::string& s) const {
  for (Idx a = 0; a < n; ++a)
    if (names[a] == s) return a;
  throw Error(ErrorCode::InputError, "no arrow named '" + s + "' in groupoid " + id);
}

void Groupoid::finalize() {
  unit_pos.assign(n, -1);
  for (size_t p = 0; p < units.size(); ++p) unit_pos[units[p]] = static_cast<int>(p);
  fiber_r.assign(units.size(), {});
  fiber_s.assign(units.size(), {});
  for (Idx a = 0; a < n; ++a) {
    if (unit_pos[rng[a]] >= 0) fiber_r[unit_pos[rng[a]]].push_back(a);
    if (unit_pos[src[a]] >= 0) fiber_s[unit_pos[src[a]]].push_back(a);
  }
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport r;
  const int n = g.n;
  if (static_cast<int>(g.names.size()) != n || static_cast<int>(g.src.size()) != n ||
      static_cast<int>(g.rng.size()) != n || static_cast<int>(g.inv.size()) != n ||
      static_cast<int>(g.comp.size()) != static_cast<size_t>(n) * n) {
    r.fail("table sizes", "arrow tables disagree with arrow count");
    return r;
  }
  auto in_range = [&](Idx a) { return a >= 0 && a < n; };
  for (Idx a : g.units)
    if (!in_range(a)) { r.fail("units", "unit index out of range"); return r; }
  for (Idx a = 0; a < n; ++a)
    if (!in_range(g.src[a]) || !in_range(g.rng[a]) || !in_range(g.inv[a])) {
      r.fail("index range", "src/rng/inv out of range at " + g.name(a));
      return r;
    }

  for (Idx u : g.units) {
    if (g.src[u] != u || g.rng[u] != u)
      r.fail("unit endpoints", "unit " + g.name(u) + " has src or rng differing from itself");
  }
  for (Idx a = 0; a < n; ++a) {
    if (g.unit_pos[g.src[a]] < 0)
      r.fail("src into units", "src of " + g.name(a) + " is not a unit");
    if (g.unit_pos[g.rng[a]] < 0)
      r.fail("rng into units", "rng of " + g.name(a) + " is not a unit");
  }

  // composition defined exactly on matching endpoints, with endpoint bookkeeping
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      Idx c = g.compose(a, b);
      bool should = g.src[a] == g.rng[b];
      if (should && c == kUndef)
        r.fail("composability", "comp undefined on composable pair (" + g.name(a) + ", " + g.name(b) + ")");
      if (!should && c != kUndef)
        r.fail("composability", "comp defined on non-composable pair (" + g.name(a) + ", " + g.name(b) + ")");
      if (c != kUndef) {
        if (!in_range(c)) {
          r.fail("index range", "comp out of range at (" + g.name(a) + ", " + g.name(b) + ")");
          continue;
        }
        if (g.src[c] != g.src[b] || g.rng[c] != g.rng[a])
          r.fail("endpoints of products",
                 "comp(" + g.name(a) + ", " + g.name(b) + ") has wrong src or rng");
      }
    }

  // unit laws and inverses
  for (Idx a = 0; a < n; ++a) {
    if (g.compose(a, g.src[a]) != a)
      r.fail("right unit law", g.name(a));
    if (g.compose(g.rng[a], a) != a)
      r.fail("left unit law", g.name(a));
    Idx ia = g.inv[a];
    if (g.src[ia] != g.rng[a] || g.rng[ia] != g.src[a])
      r.fail("inverse endpoints", g.name(a));
    else {
      if (g.compose(a, ia) != g.rng[a])
        r.fail("inverse law", "comp(" + g.name(a) + ", inv) is not rng");
      if (g.compose(ia, a) != g.src[a])
        r.fail("inverse law", "comp(inv, " + g.name(a) + ") is not src");
    }
    if (g.inv[ia] != a)
      r.fail("involutive inverse", g.name(a));
  }

  // associativity wherever both sides are defined
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      Idx ab = g.compose(a, b);
      if (ab == kUndef) continue;
      for (Idx c = 0; c < n; ++c) {
        Idx bc = g.compose(b, c);
        if (bc == kUndef) continue;
        if (g.compose(ab, c) != g.compose(a, bc))
          r.fail("associativity",
                 "(" + g.name(a) + ", " + g.name(b) + ", " + g.name(c) + ")");
      }
    }
  return r;
}

ValidationReport validate_haar(const Groupoid& g, const HaarSystem& h) {
  ValidationReport r;
  if (h.groupoid_id != g.id)
    r.fail("carrier", "haar tagged " + h.groupoid_id + " used with groupoid " + g.id);
  if (h.weight.size() != static_cast<size_t>(g.n)) {
    r.fail("size", "weight table size differs from arrow count");
    return r;
  }
  for (Idx a = 0; a < g.n; ++a)
    if (h.weight[a] <= 0)
      r.fail("positivity", "weight of " + g.name(a) + " is not positive");
  /* Left invariance: weight(comp(a,b)) = weight(b) on every composable pair.
   * Equivalent single-arrow form: weight(a) = weight(src(a)). */
  for (Idx a = 0; a < g.n; ++a) {
    if (h.weight[a] != h.weight[g.src[a]])
      r.fail("left invariance", "weight of " + g.name(a) +
             " differs from weight of its source unit");
  }
  for (Idx a = 0; a < g.n; ++a)
    for (Idx b = 0; b < g.n; ++b) {
      Idx c = g.compose(a, b);
      if (c != kUndef && h.weight[c] != h.weight[b])
        r.fail("left invariance", "weight(comp(" + g.name(a) + ", " + g.name(b) +
               ")) differs from weight(" + g.name(b) + ")");
    }
  return r;
}

HaarSystem counting_haar(const Groupoid& g) {
  return {g.id, std::vector<Rational>(g.n, Rational(1))};
}

HaarSystem haar_from_unit_weights(const Groupoid& g, const std::vector<Rational>& unit_w) {
  if (unit_w.size() != g.units.size())
    throw Error(ErrorCode::InputError, "unit weight count differs from unit count");
  for (const auto& w : unit_w)
    if (w <= 0) throw Error(ErrorCode::InputError, "unit weights must be positive");
  HaarSystem h{g.id, std::vector<Rational>(g.n)};
  for (Idx a = 0; a < g.n; ++a) h.weight[a] = unit_w[g.upos(g.src[a])];
  return h;
}

UnitMeasure uniform_unit_measure(const Groupoid& g) {
  return {g.id, std::vector<Rational>(g.units.size(), Rational(1))};
}

bool is_quasi_invariant(const Groupoid& g, const HaarSystem&, const UnitMeasure& mu) {
  for (Idx a = 0; a < g.n; ++a) {
    bool s = mu.at(g, g.src[a]) > 0, r = mu.at(g, g.rng[a]) > 0;
    if (s != r) return false;
  }
  return true;
}

std::vector<Rational> modular_function(const Groupoid& g, const HaarSystem& h,
                                       const UnitMeasure& mu) {
  std::vector<Rational> d(g.n, Rational(1));
  for (Idx a = 0; a < g.n; ++a) {
    const Rational& ms = mu.at(g, g.src[a]);
    const Rational& mr = mu.at(g, g.rng[a]);
    if ((ms > 0) != (mr > 0))
      throw Error(ErrorCode::SupportMismatch,
                  "arrow " + g.name(a) + " connects a mu-null unit to a mu-positive unit");
    if (ms > 0)
      d[a] = (mr * h.weight[g.src[a]]) / (ms * h.weight[g.rng[a]]);
  }
  return d;
}

// ---------------------------------------------------------------------------

Groupoid group_groupoid(const std::string& id, int order,
                        const std::function<int(int, int)>& mult,
                        std::vector<std::string> names) {
  if (order <= 0) throw Error(ErrorCode::InputError, "group order must be positive");
  Groupoid g;
  g.id = id;
  g.n = order;
  if (names.empty()) {
    names.push_back("e");
    for (int i = 1; i < order; ++i) names.push_back("g" + std::to_string(i));
  }
  g.names = std::move(names);
  g.units = {0};
  g.src.assign(order, 0);
  g.rng.assign(order, 0);
  g.inv.assign(order, kUndef);
  g.comp.assign(static_cast<size_t>(order) * order, kUndef);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      int k = mult(i, j);
      g.comp[static_cast<size_t>(i) * order + j] = k;
      if (k == 0) g.inv[i] = j;
    }
  g.finalize();
  return g;
}

Groupoid cyclic_group(const std::string& id, int order) {
  return group_groupoid(id, order, [order](int i, int j) { return (i + j) % order; });
}

Groupoid space_groupoid(const std::string& id, const std::vector<std::string>& points) {
  Groupoid g;
  g.id = id;
  g.n = static_cast<int>(points.size());
  g.names = points;
  g.src.resize(g.n);
  g.rng.resize(g.n);
  g.inv.resize(g.n);
  g.comp.assign(static_cast<size_t>(g.n) * g.n, kUndef);
  for (Idx a = 0; a < g.n; ++a) {
    g.units.push_back(a);
    g.src[a] = g.rng[a] = g.inv[a] = a;
    g.comp[static_cast<size_t>(a) * g.n + a] = a;
  }
  g.finalize();
  return g;
}

Groupoid pair_groupoid(const std::string& id, int k) {
  Groupoid g;
  g.id = id;
  g.n = k * k;
  auto at = [k](int i, int j) { return i * k + j; };  // arrow (i,j) : j -> i
  g.names.resize(g.n);
  g.src.resize(g.n);
  g.rng.resize(g.n);
  g.inv.resize(g.n);
  g.comp.assign(static_cast<size_t>(g.n) * g.n, kUndef);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Idx a = at(i, j);
      g.names[a] = std::to_string(i + 1) + "." + std::to_string(j + 1);
      g.src[a] = at(j, j);
      g.rng[a] = at(i, i);
      g.inv[a] = at(j, i);
    }
  for (int i = 0; i < k; ++i) g.units.push_back(at(i, i));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        g.comp[static_cast<size_t>(at(i, j)) * g.n + at(j, l)] = at(i, l);
  g.finalize();
  return g;
}

Groupoid disjoint_union(const std::string& id, const Groupoid& a, const Groupoid& b) {
  Groupoid g;
  g.id = id;
  g.n = a.n + b.n;
  auto shift = [&](Idx x) { return x + a.n; };
  g.names = a.names;
  for (const auto& s : b.names) g.names.push_back(s + "'");
  g.src = a.src;  g.rng = a.rng;  g.inv = a.inv;
  for (Idx x = 0; x < b.n; ++x) {
    g.src.push_back(shift(b.src[x]));
    g.rng.push_back(shift(b.rng[x]));
    g.inv.push_back(shift(b.inv[x]));
  }
  g.units = a.units;
  for (Idx u : b.units) g.units.push_back(shift(u));
  g.comp.assign(static_cast<size_t>(g.n) * g.n, kUndef);
  for (Idx x = 0; x < a.n; ++x)
    for (Idx y = 0; y < a.n; ++y)
      g.comp[static_cast<size_t>(x) * g.n + y] = a.compose(x, y);
  for (Idx x = 0; x < b.n; ++x)
    for (Idx y = 0; y < b.n; ++y) {
      Idx c = b.compose(x, y);
      g.comp[static_cast<size_t>(shift(x)) * g.n + shift(y)] = (c == kUndef) ? kUndef : shift(c);
    }
  g.finalize();
  return g;
}

Groupoid opposite_groupoid(const Groupoid& g) {
  Groupoid o;
  o.id = g.id + ".op";
  o.n = g.n;
  o.names = g.names;
  o.units = g.units;
  o.src = g.rng;
  o.rng = g.src;
  o.inv = g.inv;
  o.comp.assign(static_cast<size_t>(g.n) * g.n, kUndef);
  for (Idx a = 0; a < g.n; ++a)
    for (Idx b = 0; b < g.n; ++b)
      o.comp[static_cast<size_t>(a) * g.n + b] = g.compose(b, a);
  o.finalize();
  return o;
}

}  // namespace gpd
