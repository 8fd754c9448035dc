#include "gpd/cohomology.hpp"

#include <numeric>

namespace gpd {

// ---------------------------------------------------------------------------
// actions

GpdAction make_gpd_action(const std::string& id, const Groupoid& actor,
                          const Groupoid& target,
                          const std::function<Idx(Idx)>& momentum,
                          const std::function<Idx(Idx, Idx)>& act) {
  GpdAction a;
  a.id = id;
  a.actor_id = actor.id;
  a.target_id = target.id;
  a.an = actor.n;
  a.tn = target.n;
  a.momentum.resize(target.n);
  for (Idx t = 0; t < target.n; ++t) a.momentum[t] = momentum(t);
  a.act_.assign(static_cast<size_t>(actor.n) * target.n, kUndef);
  for (Idx e = 0; e < actor.n; ++e)
    for (Idx t = 0; t < target.n; ++t)
      if (actor.src[e] == a.momentum[t])
        a.act_[static_cast<size_t>(e) * target.n + t] = act(e, t);
  return a;
}

ValidationReport validate_gpd_action(const Groupoid& actor, const Groupoid& target,
                                     const GpdAction& a) {
  ValidationReport rep;
  if (a.actor_id != actor.id || a.target_id != target.id) {
    rep.fail("carrier", "action is bound to " + a.actor_id + " on " + a.target_id);
    return rep;
  }
  if (a.an != actor.n || a.tn != target.n ||
      a.momentum.size() != static_cast<size_t>(target.n) ||
      a.act_.size() != static_cast<size_t>(actor.n) * target.n) {
    rep.fail("tables", "table sizes disagree with the arrow counts");
    return rep;
  }
  for (Idx t = 0; t < target.n; ++t) {
    Idx m = a.momentum[t];
    if (m < 0 || m >= actor.n || !actor.is_unit(m))
      rep.fail("momentum", "momentum of " + target.name(t) + " is not an actor unit");
  }
  if (!rep.ok()) return rep;

  for (Idx e = 0; e < actor.n; ++e)
    for (Idx t = 0; t < target.n; ++t) {
      bool in_fiber = actor.src[e] == a.momentum[t];
      Idx r = a.act(e, t);
      if (in_fiber && r == kUndef)
        rep.fail("domain", "act(" + actor.name(e) + ", " + target.name(t) +
                               ") undefined on its fiber");
      if (!in_fiber && r != kUndef)
        rep.fail("domain", "act(" + actor.name(e) + ", " + target.name(t) +
                               ") defined off its fiber");
      if (r != kUndef && (r < 0 || r >= target.n))
        rep.fail("domain", "act(" + actor.name(e) + ", " + target.name(t) +
                               ") out of range");
    }
  if (!rep.ok()) return rep;

  // units act as the identity on their fiber
  for (Idx u : actor.units)
    for (Idx t = 0; t < target.n; ++t)
      if (a.can(u, t) && a.act(u, t) != t)
        rep.fail("unit action", actor.name(u) + " moves " + target.name(t));

  // acting distributes over target composition
  for (Idx t0 = 0; t0 < target.n; ++t0)
    for (Idx t1 = 0; t1 < target.n; ++t1) {
      Idx t01 = target.compose(t0, t1);
      if (t01 == kUndef || a.momentum[t0] != a.momentum[t1]) continue;
      for (Idx e = 0; e < actor.n; ++e) {
        if (!a.can(e, t0)) continue;
        Idx r0 = a.act(e, t0), r1 = a.act(e, t1);
        Idx prod = target.compose(r0, r1);
        if (prod == kUndef) {
          rep.fail("distributivity", actor.name(e) + " breaks composability of (" +
                                         target.name(t0) + ", " + target.name(t1) + ")");
          continue;
        }
        if (a.momentum[t01] != a.momentum[t0]) {
          rep.fail("distributivity", "composite " + target.name(t01) +
                                         " leaves the momentum fiber of its factors");
          continue;
        }
        if (a.act(e, t01) != prod)
          rep.fail("distributivity", actor.name(e) + ".(" + target.name(t0) +
                                         " " + target.name(t1) + ") differs from the product");
      }
    }

  // composing in the actor composes the actions
  for (Idx e0 = 0; e0 < actor.n; ++e0)
    for (Idx e1 = 0; e1 < actor.n; ++e1) {
      Idx e01 = actor.compose(e0, e1);
      if (e01 == kUndef) continue;
      for (Idx t = 0; t < target.n; ++t) {
        if (!a.can(e1, t)) continue;
        Idx inner = a.act(e1, t);
        if (a.momentum[inner] != actor.rng[e1]) {
          rep.fail("associativity", "momentum of " + actor.name(e1) + "." +
                                        target.name(t) + " is not rng(" + actor.name(e1) + ")");
          continue;
        }
        if (a.act(e01, t) != a.act(e0, inner))
          rep.fail("associativity", "(" + actor.name(e0) + " " + actor.name(e1) +
                                        ")." + target.name(t) + " differs from iterated action");
      }
    }
  return rep;
}

TrivialAction trivial_action(const Groupoid& target) {
  TrivialAction ta{space_groupoid(target.id + ":pt", {"*"}), {}};
  ta.action = make_gpd_action(target.id + ":triv", ta.actor, target,
                              [](Idx) { return 0; },
                              [](Idx, Idx t) { return t; });
  return ta;
}

CheckResult group_action_functor_check(const Groupoid& actor, const Groupoid& target,
                                       const GpdAction& a) {
  if (actor.units.size() != 1)
    throw Error(ErrorCode::InputError, "actor " + actor.id + " is not a group");
  auto rep = validate_gpd_action(actor, target, a);
  if (!rep.ok()) return {false, rep.str()};

  // with one actor unit every arrow acts on all of the target
  auto phi = [&](Idx e, Idx t) { return a.act(e, t); };
  for (Idx e = 0; e < actor.n; ++e) {
    std::vector<char> hit(target.n, 0);
    for (Idx t = 0; t < target.n; ++t) {
      Idx r = phi(e, t);
      if (r == kUndef) return {false, actor.name(e) + " is partial"};
      if (hit[r]) return {false, actor.name(e) + " is not injective"};
      hit[r] = 1;
      if (target.is_unit(t) != target.is_unit(r))
        return {false, actor.name(e) + " does not preserve units at " + target.name(t)};
    }
    for (Idx t0 = 0; t0 < target.n; ++t0)
      for (Idx t1 = 0; t1 < target.n; ++t1) {
        Idx t01 = target.compose(t0, t1);
        Idx r01 = target.compose(phi(e, t0), phi(e, t1));
        if ((t01 == kUndef) != (r01 == kUndef))
          return {false, actor.name(e) + " changes composability of (" +
                             target.name(t0) + ", " + target.name(t1) + ")"};
        if (t01 != kUndef && phi(e, t01) != r01)
          return {false, actor.name(e) + " is not a functor at (" +
                             target.name(t0) + ", " + target.name(t1) + ")"};
      }
  }
  for (Idx e0 = 0; e0 < actor.n; ++e0)
    for (Idx e1 = 0; e1 < actor.n; ++e1) {
      Idx e01 = actor.compose(e0, e1);
      for (Idx t = 0; t < target.n; ++t)
        if (phi(e01, t) != phi(e0, phi(e1, t)))
          return {false, "phi(" + actor.name(e0) + " " + actor.name(e1) +
                             ") differs from the composite functor"};
    }
  for (Idx e = 0; e < actor.n; ++e)
    for (Idx t = 0; t < target.n; ++t)
      if (phi(actor.inv[e], phi(e, t)) != t)
        return {false, "phi(" + actor.name(actor.inv[e]) +
                           ") does not invert phi(" + actor.name(e) + ")"};
  return {true, ""};
}

TransformationActions transformation_action(const Groupoid& g, const Groupoid& h,
                                            const Bispace& x) {
  auto brep = validate_bispace(g, h, x);
  if (!brep.ok())
    throw Error(ErrorCode::InputError, "bispace " + x.id + " invalid: " + brep.str());

  TransformationActions ta;
  ta.xh = right_transformation_groupoid(h, x);
  ta.gx = left_transformation_groupoid(g, x);
  ta.h_op = opposite_groupoid(h);

  const TransformationGroupoid& xh = ta.xh;
  ta.g_on_xh = make_gpd_action(
      g.id + " on " + xh.gpd.id, g, xh.gpd,
      [&](Idx t) { return x.rx[xh.arrow_pair[t].first]; },
      [&](Idx e, Idx t) {
        auto [p, eta] = xh.arrow_pair[t];
        return xh.pair_index(x.lact(e, p), eta, h.n);
      });

  const TransformationGroupoid& gx = ta.gx;
  ta.hop_on_gx = make_gpd_action(
      ta.h_op.id + " on " + gx.gpd.id, ta.h_op, gx.gpd,
      [&](Idx t) { return x.sx[gx.arrow_pair[t].second]; },
      [&](Idx e, Idx t) {
        auto [gam, p] = gx.arrow_pair[t];
        return gx.pair_index(gam, x.ract(p, e), x.npts);
      });

  auto r1 = validate_gpd_action(g, xh.gpd, ta.g_on_xh);
  if (!r1.ok()) throw Error(ErrorCode::InvalidStructure, r1.str());
  auto r2 = validate_gpd_action(ta.h_op, gx.gpd, ta.hop_on_gx);
  if (!r2.ok()) throw Error(ErrorCode::InvalidStructure, r2.str());
  return ta;
}

// ---------------------------------------------------------------------------
// tuple spaces

std::vector<std::array<Idx, 2>> composable_pairs(const Groupoid& g) {
  std::vector<std::array<Idx, 2>> out;
  for (Idx a = 0; a < g.n; ++a)
    for (Idx b = 0; b < g.n; ++b)
      if (g.composable(a, b)) out.push_back({a, b});
  return out;
}

std::vector<std::array<Idx, 3>> composable_triples(const Groupoid& g) {
  std::vector<std::array<Idx, 3>> out;
  for (Idx a = 0; a < g.n; ++a)
    for (Idx b = 0; b < g.n; ++b) {
      if (!g.composable(a, b)) continue;
      for (Idx c = 0; c < g.n; ++c)
        if (g.composable(b, c)) out.push_back({a, b, c});
    }
  return out;
}

namespace {

std::vector<int> pair_lookup(const Groupoid& g,
                             const std::vector<std::array<Idx, 2>>& pairs) {
  std::vector<int> idx(static_cast<size_t>(g.n) * g.n, -1);
  for (size_t k = 0; k < pairs.size(); ++k)
    idx[static_cast<size_t>(pairs[k][0]) * g.n + pairs[k][1]] = static_cast<int>(k);
  return idx;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

// ---------------------------------------------------------------------------
// cochains

Cochain zero_cochain(const Groupoid& g, int degree) {
  size_t sz = 0;
  switch (degree) {
    case 0: sz = g.units.size(); break;
    case 1: sz = static_cast<size_t>(g.n); break;
    case 2: sz = composable_pairs(g).size(); break;
    case 3: sz = composable_triples(g).size(); break;
    default: throw Error(ErrorCode::InputError, "cochain degree out of range");
  }
  return Cochain{g.id, degree, std::vector<Rational>(sz, Rational(0))};
}

ValidationReport validate_cochain(const Groupoid& actor, const Groupoid& target,
                                  const GpdAction& a, const Cochain& f) {
  ValidationReport rep;
  if (f.groupoid_id != target.id) {
    rep.fail("carrier", "cochain lives on " + f.groupoid_id);
    return rep;
  }
  if (f.degree < 0 || f.degree > 2) {
    rep.fail("degree", "validation supports degrees 0..2");
    return rep;
  }
  if (f.degree == 0) {
    if (f.values.size() != target.units.size()) {
      rep.fail("size", "expected one value per unit");
      return rep;
    }
    for (Idx e = 0; e < actor.n; ++e)
      for (Idx u : target.units)
        if (a.can(e, u) && f.values[target.upos(u)] != f.values[target.upos(a.act(e, u))])
          rep.fail("invariance", actor.name(e) + " moves the value at " + target.name(u));
    return rep;
  }
  if (f.degree == 1) {
    if (f.values.size() != static_cast<size_t>(target.n)) {
      rep.fail("size", "expected one value per arrow");
      return rep;
    }
    for (Idx u : target.units)
      if (f.values[u] != Rational(0))
        rep.fail("normalization", "nonzero on unit " + target.name(u));
    for (Idx e = 0; e < actor.n; ++e)
      for (Idx t = 0; t < target.n; ++t)
        if (a.can(e, t) && f.values[t] != f.values[a.act(e, t)])
          rep.fail("invariance", actor.name(e) + " moves the value at " + target.name(t));
    return rep;
  }
  auto pairs = composable_pairs(target);
  auto idx = pair_lookup(target, pairs);
  if (f.values.size() != pairs.size()) {
    rep.fail("size", "expected one value per composable pair");
    return rep;
  }
  for (size_t k = 0; k < pairs.size(); ++k)
    if ((target.is_unit(pairs[k][0]) || target.is_unit(pairs[k][1])) &&
        f.values[k] != Rational(0))
      rep.fail("normalization", "nonzero on a pair containing a unit");
  for (Idx e = 0; e < actor.n; ++e)
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [t0, t1] = pairs[k];
      if (!a.can(e, t0) || !a.can(e, t1)) continue;
      int k2 = idx[static_cast<size_t>(a.act(e, t0)) * target.n + a.act(e, t1)];
      if (k2 < 0) {
        rep.fail("invariance", actor.name(e) + " breaks composability of a pair");
        continue;
      }
      if (f.values[k] != f.values[k2])
        rep.fail("invariance", actor.name(e) + " moves the value at (" +
                                   target.name(t0) + ", " + target.name(t1) + ")");
    }
  return rep;
}

Cochain coboundary(const Groupoid& g, const Cochain& f) {
  if (f.groupoid_id != g.id)
    throw Error(ErrorCode::CarrierMismatch, "cochain lives on " + f.groupoid_id);
  if (f.degree == 0) {
    Cochain out = zero_cochain(g, 1);
    for (Idx t = 0; t < g.n; ++t)
      out.values[t] = f.values[g.upos(g.src[t])] - f.values[g.upos(g.rng[t])];
    return out;
  }
  if (f.degree == 1) {
    auto pairs = composable_pairs(g);
    Cochain out{g.id, 2, std::vector<Rational>(pairs.size())};
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [t0, t1] = pairs[k];
      out.values[k] = f.values[t1] - f.values[g.compose(t0, t1)] + f.values[t0];
    }
    return out;
  }
  if (f.degree == 2) {
    auto pairs = composable_pairs(g);
    auto idx = pair_lookup(g, pairs);
    auto at = [&](Idx t0, Idx t1) -> const Rational& {
      return f.values[idx[static_cast<size_t>(t0) * g.n + t1]];
    };
    auto triples = composable_triples(g);
    Cochain out{g.id, 3, std::vector<Rational>(triples.size())};
    for (size_t k = 0; k < triples.size(); ++k) {
      auto [t0, t1, t2] = triples[k];
      out.values[k] = at(t1, t2) - at(g.compose(t0, t1), t2) +
                      at(t0, g.compose(t1, t2)) - at(t0, t1);
    }
    return out;
  }
  throw Error(ErrorCode::InputError, "coboundary input degree must be <= 2");
}

bool is_cocycle(const Groupoid& actor, const Groupoid& target, const GpdAction& a,
                const Cochain& f) {
  auto rep = validate_cochain(actor, target, a, f);
  if (!rep.ok())
    throw Error(ErrorCode::InputError, "cochain invalid: " + rep.str());
  Cochain d = coboundary(target, f);
  bool vanishes = true;
  for (const auto& v : d.values)
    if (v != Rational(0)) vanishes = false;

  if (f.degree == 0) {
    // cross-check: constant on the unit orbits of the target
    UnionFind uf(static_cast<int>(target.units.size()));
    for (Idx t = 0; t < target.n; ++t)
      uf.unite(target.upos(target.src[t]), target.upos(target.rng[t]));
    bool constant = true;
    for (size_t p = 0; p < target.units.size(); ++p)
      if (f.values[p] != f.values[uf.find(static_cast<int>(p))]) constant = false;
    if (constant != vanishes)
      throw Error(ErrorCode::InvalidStructure, "orbit constancy disagrees with d");
  } else if (f.degree == 1) {
    bool hom = true;
    for (Idx t0 = 0; t0 < target.n; ++t0)
      for (Idx t1 = 0; t1 < target.n; ++t1) {
        Idx t01 = target.compose(t0, t1);
        if (t01 != kUndef && f.values[t0] + f.values[t1] != f.values[t01]) hom = false;
      }
    if (hom != vanishes)
      throw Error(ErrorCode::InvalidStructure, "homomorphism identity disagrees with d");
  }
  return vanishes;
}

// ---------------------------------------------------------------------------
// invariant bases and dimensions

CochainBasis cochain_basis(const Groupoid& actor, const Groupoid& target,
                           const GpdAction& a, int degree) {
  CochainBasis basis;
  basis.degree = degree;
  auto classes_from = [&](UnionFind& uf, const std::vector<char>& eligible) {
    int n = static_cast<int>(eligible.size());
    basis.class_of.assign(n, -1);
    std::vector<int> root_class(n, -1);
    for (int i = 0; i < n; ++i) {
      if (!eligible[i]) continue;
      int root = uf.find(i);
      if (!eligible[root])
        throw Error(ErrorCode::InvalidStructure, "invariance class mixes units");
      if (root_class[root] < 0) {
        root_class[root] = basis.count++;
        basis.reps.push_back(root);
      }
      basis.class_of[i] = root_class[root];
    }
    for (int i = 0; i < n; ++i)
      if (!eligible[i] && root_class[uf.find(i)] >= 0)
        throw Error(ErrorCode::InvalidStructure, "invariance class mixes units");
  };

  if (degree == 0) {
    UnionFind uf(static_cast<int>(target.units.size()));
    for (Idx e = 0; e < actor.n; ++e)
      for (Idx u : target.units)
        if (a.can(e, u)) uf.unite(target.upos(u), target.upos(a.act(e, u)));
    classes_from(uf, std::vector<char>(target.units.size(), 1));
    return basis;
  }
  if (degree == 1) {
    UnionFind uf(target.n);
    for (Idx e = 0; e < actor.n; ++e)
      for (Idx t = 0; t < target.n; ++t)
        if (a.can(e, t)) uf.unite(t, a.act(e, t));
    std::vector<char> eligible(target.n, 1);
    for (Idx u : target.units) eligible[u] = 0;
    classes_from(uf, eligible);
    return basis;
  }
  if (degree == 2) {
    auto pairs = composable_pairs(target);
    auto idx = pair_lookup(target, pairs);
    UnionFind uf(static_cast<int>(pairs.size()));
    for (Idx e = 0; e < actor.n; ++e)
      for (size_t k = 0; k < pairs.size(); ++k) {
        auto [t0, t1] = pairs[k];
        if (!a.can(e, t0) || !a.can(e, t1)) continue;
        int k2 = idx[static_cast<size_t>(a.act(e, t0)) * target.n + a.act(e, t1)];
        if (k2 < 0)
          throw Error(ErrorCode::InvalidStructure, "action breaks composability");
        uf.unite(static_cast<int>(k), k2);
      }
    std::vector<char> eligible(pairs.size(), 1);
    for (size_t k = 0; k < pairs.size(); ++k)
      if (target.is_unit(pairs[k][0]) || target.is_unit(pairs[k][1])) eligible[k] = 0;
    classes_from(uf, eligible);
    return basis;
  }
  throw Error(ErrorCode::InputError, "cochain basis supports degrees 0..2");
}

namespace {

/* Matrix of d^0 on the invariant bases; rows indexed by degree-1 classes.
 * Every member of a class must produce the same row; a mismatch means the
 * action tables are inconsistent. */
QMat d0_matrix(const Groupoid& target, const CochainBasis& b0, const CochainBasis& b1) {
  QMat m(b1.count, b0.count);
  std::vector<char> seen(b1.count, 0);
  for (Idx t = 0; t < target.n; ++t) {
    int row = b1.class_of[t];
    if (row < 0) continue;
    std::vector<Rational> r(b0.count, Rational(0));
    r[b0.class_of[target.upos(target.src[t])]] += 1;
    r[b0.class_of[target.upos(target.rng[t])]] -= 1;
    if (!seen[row]) {
      for (int c = 0; c < b0.count; ++c) m.at(row, c) = r[c];
      seen[row] = 1;
    } else {
      for (int c = 0; c < b0.count; ++c)
        if (m.at(row, c) != r[c])
          throw Error(ErrorCode::InvalidStructure,
                      "coboundary is not constant on an invariance class");
    }
  }
  return m;
}

QMat d1_matrix(const Groupoid& target, const CochainBasis& b1, const CochainBasis& b2,
               const std::vector<std::array<Idx, 2>>& pairs) {
  QMat m(b2.count, b1.count);
  std::vector<char> seen(b2.count, 0);
  for (size_t k = 0; k < pairs.size(); ++k) {
    int row = b2.class_of[k];
    if (row < 0) continue;
    auto [t0, t1] = pairs[k];
    std::vector<Rational> r(b1.count, Rational(0));
    r[b1.class_of[t1]] += 1;
    Idx t01 = target.compose(t0, t1);
    if (b1.class_of[t01] >= 0) r[b1.class_of[t01]] -= 1;
    r[b1.class_of[t0]] += 1;
    if (!seen[row]) {
      for (int c = 0; c < b1.count; ++c) m.at(row, c) = r[c];
      seen[row] = 1;
    } else {
      for (int c = 0; c < b1.count; ++c)
        if (m.at(row, c) != r[c])
          throw Error(ErrorCode::InvalidStructure,
                      "coboundary is not constant on an invariance class");
    }
  }
  return m;
}

}  // namespace

CohomologyDims cohomology_dim(const Groupoid& actor, const Groupoid& target,
                              const GpdAction& a, int n) {
  if (n != 0 && n != 1)
    throw Error(ErrorCode::InputError, "cohomology degree must be 0 or 1");
  CochainBasis b0 = cochain_basis(actor, target, a, 0);
  CochainBasis b1 = cochain_basis(actor, target, a, 1);
  int rank0 = rank_exact(d0_matrix(target, b0, b1));
  CohomologyDims dims;
  if (n == 0) {
    dims.z = b0.count - rank0;
    dims.b = 0;
    dims.h = dims.z;
    return dims;
  }
  CochainBasis b2 = cochain_basis(actor, target, a, 2);
  auto pairs = composable_pairs(target);
  int rank1 = rank_exact(d1_matrix(target, b1, b2, pairs));
  dims.z = b1.count - rank1;
  dims.b = rank0;
  dims.h = dims.z - dims.b;
  return dims;
}

// ---------------------------------------------------------------------------
// multiplicative cocycles

CheckResult is_multiplicative_cocycle(const Groupoid& g, const std::vector<Rational>& v,
                                      const std::vector<char>& support) {
  if (v.size() != static_cast<size_t>(g.n) || support.size() != static_cast<size_t>(g.n))
    throw Error(ErrorCode::InputError, "value/support size mismatch");
  for (Idx t = 0; t < g.n; ++t)
    if (support[t] && v[t] <= 0)
      return {false, "nonpositive value at " + g.name(t)};
  for (Idx u : g.units)
    if (support[u] && v[u] != Rational(1))
      return {false, "unit " + g.name(u) + " carries " + format_rational(v[u])};
  for (Idx t0 = 0; t0 < g.n; ++t0)
    for (Idx t1 = 0; t1 < g.n; ++t1) {
      Idx t01 = g.compose(t0, t1);
      if (t01 == kUndef || !support[t0] || !support[t1]) continue;
      if (!support[t01])
        return {false, "support not closed at (" + g.name(t0) + ", " + g.name(t1) + ")"};
      if (v[t0] * v[t1] != v[t01])
        return {false, "product identity fails at (" + g.name(t0) + ", " +
                           g.name(t1) + ")"};
    }
  return {true, ""};
}

CheckResult is_multiplicative_cocycle(const Groupoid& g, const std::vector<Rational>& v) {
  return is_multiplicative_cocycle(g, v, std::vector<char>(g.n, 1));
}

MultiplicativeCocycle adjoining_cocycle(const TransformationGroupoid& ltg,
                                        const Bispace& x, const MeasureFamily& lam,
                                        const AdjoiningFn& d) {
  MultiplicativeCocycle mc;
  mc.value.resize(ltg.gpd.n);
  mc.support.resize(ltg.gpd.n);
  for (Idx i = 0; i < ltg.gpd.n; ++i) {
    auto [a, p] = ltg.arrow_pair[i];
    mc.value[i] = d.value(a, p);
    mc.support[i] = lam.mass[p] > 0 && lam.mass[x.lact(a, p)] > 0;
  }
  return mc;
}

MultiplicativeCocycle modular_cocycle(const Groupoid& g, const HaarSystem& haar,
                                      const UnitMeasure& mu) {
  MultiplicativeCocycle mc;
  mc.value = modular_function(g, haar, mu);
  mc.support.resize(g.n);
  for (Idx t = 0; t < g.n; ++t)
    mc.support[t] = mu.at(g, g.src[t]) > 0 && mu.at(g, g.rng[t]) > 0;
  return mc;
}

}  // namespace gpd
