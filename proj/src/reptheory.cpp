#include "gpd/reptheory.hpp"

#include <cmath>
#include <sstream>

#include "gpd/random.hpp"

namespace gpd {

// ---------------------------------------------------------------------------
// bundles

RepBundle trivial_rep_bundle(const Groupoid& h) {
  RepBundle r;
  r.groupoid_id = h.id;
  r.dims.assign(h.units.size(), 1);
  r.unitary.assign(h.n, CMat::Identity(1, 1));
  return r;
}

RepBundle regular_rep_bundle(const Groupoid& h) {
  RepBundle r;
  r.groupoid_id = h.id;
  size_t nu = h.units.size();
  r.dims.resize(nu);
  std::vector<int> pos(h.n, -1);  // arrow -> position within its range fiber
  for (size_t u = 0; u < nu; ++u) {
    r.dims[u] = static_cast<int>(h.fiber_r[u].size());
    for (size_t i = 0; i < h.fiber_r[u].size(); ++i)
      pos[h.fiber_r[u][i]] = static_cast<int>(i);
  }
  r.unitary.resize(h.n);
  for (Idx a = 0; a < h.n; ++a) {
    int ru = h.upos(h.rng[a]), su = h.upos(h.src[a]);
    CMat m = CMat::Zero(r.dims[ru], r.dims[su]);
    for (Idx gam : h.fiber_r[su])  // rng(gam) = src(a), so a.gam is defined
      m(pos[h.compose(a, gam)], pos[gam]) = 1.0;
    r.unitary[a] = m;
  }
  return r;
}

ValidationReport validate_representation(const Groupoid& h, const RepBundle& rep,
                                         double tol) {
  ValidationReport rp;
  if (rep.groupoid_id != h.id) {
    rp.fail("carrier", "bundle over " + rep.groupoid_id + " checked against " + h.id);
    return rp;
  }
  if (rep.dims.size() != h.units.size() || rep.unitary.size() != static_cast<size_t>(h.n)) {
    rp.fail("shape", "table sizes do not match the groupoid");
    return rp;
  }
  for (size_t u = 0; u < rep.dims.size(); ++u)
    if (rep.dims[u] <= 0) rp.fail("dims", "unit " + h.name(h.units[u]));
  for (Idx a = 0; a < h.n && rp.ok(); ++a) {
    const CMat& m = rep.unitary[a];
    int ru = h.upos(h.rng[a]), su = h.upos(h.src[a]);
    if (m.rows() != rep.dims[ru] || m.cols() != rep.dims[su])
      rp.fail("shape", "arrow " + h.name(a));
  }
  if (!rp.ok()) return rp;

  for (Idx a = 0; a < h.n; ++a) {
    const CMat& m = rep.unitary[a];
    int su = h.upos(h.src[a]);
    if (max_abs_entry(m.adjoint() * m - CMat::Identity(rep.dims[su], rep.dims[su])) > tol)
      rp.fail("unitarity", "arrow " + h.name(a));
  }
  for (Idx u : h.units) {
    int d = rep.dims[h.upos(u)];
    if (max_abs_entry(rep.unitary[u] - CMat::Identity(d, d)) > tol)
      rp.fail("unit action", "unit " + h.name(u) + " is not the identity");
  }
  for (Idx a = 0; a < h.n; ++a)
    for (Idx b = 0; b < h.n; ++b) {
      Idx ab = h.compose(a, b);
      if (ab == kUndef) continue;
      if (max_abs_entry(rep.unitary[ab] - rep.unitary[a] * rep.unitary[b]) > tol)
        rp.fail("composition", h.name(a) + " . " + h.name(b));
    }
  return rp;
}

// ---------------------------------------------------------------------------
// Radon-Nikodym data

std::vector<Rational> beta_delta(const Groupoid& h, const HaarSystem& beta,
                                 const UnitMeasure& mu) {
  if (mu.mass.size() != h.units.size())
    throw Error(ErrorCode::InputError, "mu has " + std::to_string(mu.mass.size()) +
                                           " masses for " + std::to_string(h.units.size()) +
                                           " units");
  std::vector<Rational> d(h.n, Rational(1));
  for (Idx e = 0; e < h.n; ++e) {
    const Rational& ms = mu.mass[h.upos(h.src[e])];
    const Rational& mr = mu.mass[h.upos(h.rng[e])];
    if (ms > 0 && mr > 0) d[e] = ms * beta.w(h.rng[e]) / (mr * beta.w(h.src[e]));
  }
  return d;
}

RNData rn_data(const Groupoid& h, const HaarSystem& beta, const Bispace& x,
               const MeasureFamily& lam, const UnitMeasure& mu,
               const std::vector<Rational>& nu) {
  if (mu.mass.size() != h.units.size())
    throw Error(ErrorCode::InputError, "mu size does not match the unit space of " + h.id);
  if (lam.mass.size() != static_cast<size_t>(x.npts))
    throw Error(ErrorCode::InputError, "family size does not match the point set");
  RNData rn;
  rn.mu = mu;
  rn.nu = nu;
  rn.orbits = right_orbits(h, x);
  if (nu.size() != static_cast<size_t>(rn.orbits.count))
    throw Error(ErrorCode::InputError, "nu has " + std::to_string(nu.size()) +
                                           " masses for " + std::to_string(rn.orbits.count) +
                                           " orbits");
  rn.stabw.resize(x.npts);
  rn.m.assign(x.npts, Rational(1));
  rn.m_on.assign(x.npts, 0);
  for (Idx p = 0; p < x.npts; ++p) {
    Rational s = 0;
    for (Idx e : h.fiber_r[h.upos(x.sx[p])])
      if (x.ract(p, e) == p) s += beta.w(e);
    rn.stabw[p] = s;  // always positive: the unit at sX(p) stabilizes
    Rational a = mu.mass[h.upos(x.sx[p])] * lam.mass[p];
    Rational b = nu[rn.orbits.orbit_of[p]] * s;
    if ((a == 0) != (b == 0))
      throw Error(ErrorCode::IncompatibleMeasures,
                  "at point " + x.points[p] + ": mu-side mass " + format_rational(a) +
                      ", nu-side mass " + format_rational(b));
    if (a != 0) {
      rn.m[p] = a / b;
      rn.m_on[p] = 1;
    }
  }
  rn.delta = beta_delta(h, beta, mu);
  rn.delta_on.assign(h.n, 0);
  for (Idx e = 0; e < h.n; ++e)
    rn.delta_on[e] = mu.mass[h.upos(h.src[e])] > 0 && mu.mass[h.upos(h.rng[e])] > 0;
  return rn;
}

RNData uniform_rn(const Correspondence& c) {
  UnitMeasure mu{c.h.id, std::vector<Rational>(c.h.units.size(), Rational(1))};
  OrbitSpace orbits = right_orbits(c.h, c.x);
  return rn_data(c.h, c.beta, c.x, c.lam, mu,
                 std::vector<Rational>(orbits.count, Rational(1)));
}

// ---------------------------------------------------------------------------
// section coordinates

SectionLayout unit_layout(const Groupoid& h, const RepBundle& rep) {
  SectionLayout ul;
  ul.dims = rep.dims;
  ul.offset.resize(rep.dims.size());
  for (size_t u = 0; u < rep.dims.size(); ++u) {
    ul.offset[u] = ul.total;
    ul.total += rep.dims[u];
  }
  return ul;
}

OrbitLayout orbit_layout(const Groupoid& h, const Bispace& x, const RepBundle& rep,
                         double tol) {
  OrbitLayout ol;
  ol.orbits = right_orbits(h, x);
  ol.transport.assign(x.npts, kUndef);
  ol.basis.resize(ol.orbits.count);
  ol.offset.resize(ol.orbits.count);
  for (int w = 0; w < ol.orbits.count; ++w) {
    Idx r = ol.orbits.reps[w];
    int u = h.upos(x.sx[r]);
    ol.transport[r] = x.sx[r];
    int d = rep.dims[u];
    CMat acc = CMat::Zero(d, d);
    for (Idx e : h.fiber_r[u]) {
      Idx y = x.ract(r, e);
      if (y == kUndef) continue;
      if (ol.transport[y] == kUndef) ol.transport[y] = e;
      if (y == r) {  // stabilizer arrow: accumulate (U - I)^H (U - I)
        CMat dlt = rep.unitary[e] - CMat::Identity(d, d);
        acc += dlt.adjoint() * dlt;
      }
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(acc);
    int k = 0;
    while (k < d && es.eigenvalues()(k) <= tol) ++k;
    ol.basis[w] = es.eigenvectors().leftCols(k);
    ol.offset[w] = ol.total;
    ol.total += k;
  }
  for (Idx p = 0; p < x.npts; ++p)
    if (ol.transport[p] == kUndef)
      throw Error(ErrorCode::InvalidStructure,
                  "no arrow carries the representative to point " + x.points[p]);
  return ol;
}

// ---------------------------------------------------------------------------
// the operators

CVec ket_value_at(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                  const SectionLayout& ul, const Fn<CD>& f, const CVec& xi, Idx p) {
  const Groupoid& h = c.h;
  int u = h.upos(c.x.sx[p]);
  CVec out = CVec::Zero(rep.dims[u]);
  for (Idx e : h.fiber_r[u]) {
    Idx q = c.x.ract(p, e);
    if (q == kUndef) continue;
    if (f.v[q] == CD{}) continue;
    int su = h.upos(h.src[e]);
    CD coef = f.v[q] * std::sqrt(to_double(rn.m[q])) * to_double(c.beta.w(e));
    out += coef * (rep.unitary[e] * xi.segment(ul.offset[su], ul.dims[su]));
  }
  return out;
}

CMat ket_matrix(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                const SectionLayout& ul, const OrbitLayout& ol, const Fn<CD>& f) {
  check_carrier(f, points_carrier(c.x), c.x.npts);
  CMat out = CMat::Zero(ol.total, ul.total);
  for (int b = 0; b < ul.total; ++b) {
    CVec xi = CVec::Zero(ul.total);
    xi(b) = 1.0;
    for (int w = 0; w < ol.orbits.count; ++w) {
      int k = static_cast<int>(ol.basis[w].cols());
      if (k == 0) continue;
      CVec val = ket_value_at(c, rep, rn, ul, f, xi, ol.orbits.reps[w]);
      out.block(ol.offset[w], b, k, 1) = ol.basis[w].adjoint() * val;
    }
  }
  return out;
}

CMat bra_matrix(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                const SectionLayout& ul, const OrbitLayout& ol, const Fn<CD>& f) {
  check_carrier(f, points_carrier(c.x), c.x.npts);
  const Groupoid& h = c.h;
  CMat out = CMat::Zero(ul.total, ol.total);
  for (int w = 0; w < ol.orbits.count; ++w)
    for (int k0 = 0; k0 < static_cast<int>(ol.basis[w].cols()); ++k0) {
      int col = ol.offset[w] + k0;
      for (Idx p = 0; p < c.x.npts; ++p) {
        if (ol.orbits.orbit_of[p] != w) continue;
        if (c.lam.mass[p] == 0 || f.v[p] == CD{}) continue;
        CVec zp = rep.unitary[h.inv[ol.transport[p]]] * ol.basis[w].col(k0);
        CD coef = std::conj(f.v[p]) * (1.0 / std::sqrt(to_double(rn.m[p]))) *
                  to_double(c.lam.mass[p]);
        int u = h.upos(c.x.sx[p]);
        out.block(ul.offset[u], col, ul.dims[u], 1) += coef * zp;
      }
    }
  return out;
}

CMat l_matrix(const Groupoid& h, const HaarSystem& beta, const UnitMeasure& mu,
              const RepBundle& rep, const SectionLayout& ul, const Fn<CD>& psi) {
  check_carrier(psi, arrows_carrier(h), h.n);
  std::vector<Rational> dlt = beta_delta(h, beta, mu);
  CMat out = CMat::Zero(ul.total, ul.total);
  for (size_t u = 0; u < h.units.size(); ++u)
    for (Idx e : h.fiber_r[u]) {
      if (psi.v[e] == CD{}) continue;
      int su = h.upos(h.src[e]);
      CD coef = psi.v[e] * std::sqrt(to_double(dlt[e])) * to_double(beta.w(e));
      out.block(ul.offset[u], ul.offset[su], ul.dims[u], ul.dims[su]) +=
          coef * rep.unitary[e];
    }
  return out;
}

// ---------------------------------------------------------------------------
// the four lemma checks

std::string PositivityLemmasReport::str() const {
  std::ostringstream os;
  os << "quotient-side measure invariance: "
     << (measure_invariance ? "ok" : "FAIL at " + invariance_witness) << "\n";
  os << "derivative cocycle M(xh) = M(x) delta(h): "
     << (rn_cocycle ? "ok" : "FAIL at " + cocycle_witness) << "\n";
  os << "formal adjointness residual: " << adjoint_residual << "\n";
  os << "composite = L(<f,f>) residual: " << keystone_residual << "\n";
  os << "norm bound excess: " << norm_bound_excess << "\n";
  os << (ok ? "all positivity checks passed" : "POSITIVITY CHECKS FAILED") << " ("
     << trials << " trials)\n";
  return os.str();
}

PositivityLemmasReport verify_positivity_lemmas(const Correspondence& c,
                                                const RepBundle& rep, const RNData& rn,
                                                int trials, uint64_t seed, double tol,
                                                double norm_tol) {
  const Groupoid& h = c.h;
  const Bispace& x = c.x;
  PositivityLemmasReport out;
  out.trials = trials;

  out.measure_invariance = true;
  for (Idx p = 0; p < x.npts && out.measure_invariance; ++p)
    for (Idx e : h.fiber_r[h.upos(x.sx[p])]) {
      Idx q = x.ract(p, e);
      if (q == kUndef) continue;
      Rational lhs = rn.nu[rn.orbits.orbit_of[p]] * rn.stabw[p] * c.beta.w(e);
      Rational rhs = rn.nu[rn.orbits.orbit_of[q]] * rn.stabw[q] * c.beta.w(h.inv[e]);
      if (lhs != rhs) {
        out.measure_invariance = false;
        out.invariance_witness = "(" + x.points[p] + ", " + h.name(e) + ")";
        break;
      }
    }

  out.rn_cocycle = true;
  for (Idx p = 0; p < x.npts && out.rn_cocycle; ++p)
    for (Idx e : h.fiber_r[h.upos(x.sx[p])]) {
      Idx q = x.ract(p, e);
      if (q == kUndef) continue;
      if (rn.m_on[p] != rn.m_on[q]) {
        out.rn_cocycle = false;
        out.cocycle_witness = "support differs across (" + x.points[p] + ", " + h.name(e) + ")";
        break;
      }
      if (rn.m_on[p] && rn.m[q] != rn.m[p] * rn.delta[e]) {
        out.rn_cocycle = false;
        out.cocycle_witness = "(" + x.points[p] + ", " + h.name(e) + ")";
        break;
      }
    }

  SectionLayout ul = unit_layout(h, rep);
  OrbitLayout ol = orbit_layout(h, x, rep);
  std::vector<int> coord_orbit(ol.total), coord_unit(ul.total);
  for (int w = 0; w < ol.orbits.count; ++w)
    for (int k0 = 0; k0 < static_cast<int>(ol.basis[w].cols()); ++k0)
      coord_orbit[ol.offset[w] + k0] = w;
  for (size_t u = 0; u < ul.dims.size(); ++u)
    for (int j = 0; j < ul.dims[u]; ++j) coord_unit[ul.offset[u] + j] = static_cast<int>(u);

  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<uint64_t>(t)));
    Fn<CD> f = random_fn<CD>(points_carrier(x), x.npts, rng);
    CMat km = ket_matrix(c, rep, rn, ul, ol, f);
    CMat bm = bra_matrix(c, rep, rn, ul, ol, f);
    for (int a = 0; a < ol.total; ++a)
      for (int b = 0; b < ul.total; ++b) {
        CD lhs = to_double(rn.nu[coord_orbit[a]]) * km(a, b);
        CD rhs = std::conj(bm(b, a)) * to_double(rn.mu.mass[coord_unit[b]]);
        out.adjoint_residual = std::max(out.adjoint_residual, std::abs(lhs - rhs));
      }
    Fn<CD> ip = inner_product(c, f, f);
    CMat lm = l_matrix(h, c.beta, rn.mu, rep, ul, ip);
    out.keystone_residual = std::max(out.keystone_residual, operator_norm(bm * km - lm));

    double bound = cstar_norm(h, c.beta, ip);
    for (int j = 0; j < 5; ++j) {
      CVec xi(ul.total);
      for (int b = 0; b < ul.total; ++b) xi(b) = rng.cd();
      CVec kx = km * xi;
      double lhsn = 0, rhsn = 0;
      for (int a = 0; a < ol.total; ++a)
        lhsn += to_double(rn.nu[coord_orbit[a]]) * std::norm(kx(a));
      for (int b = 0; b < ul.total; ++b)
        rhsn += to_double(rn.mu.mass[coord_unit[b]]) * std::norm(xi(b));
      out.norm_bound_excess = std::max(out.norm_bound_excess, lhsn - bound * rhsn);
    }
  }

  out.ok = out.measure_invariance && out.rn_cocycle && out.adjoint_residual <= tol &&
           out.keystone_residual <= tol && out.norm_bound_excess <= norm_tol;
  return out;
}

}  // namespace gpd
