#include "gpd/correspondence.hpp"

#include <sstream>

#include "gpd/random.hpp"

namespace gpd {

namespace {

HilbertModuleData compute_module_data(const Correspondence& c) {
  HilbertModuleData md;
  md.basis = c.x.points;
  for (Idx p = 0; p < c.x.npts; ++p)
    for (Idx e = 0; e < c.h.n; ++e) {
      Idx y = c.x.ract(p, e);
      if (y == kUndef) continue;
      md.gram.push_back({p, y, e, c.lam.mass[p]});
    }
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p) {
      Idx y = c.x.lact(a, p);
      if (y == kUndef) continue;
      md.leftrep.push_back({a, p, y, c.sd(a, p) * to_double(c.alpha.w(a))});
    }
  return md;
}

/* sqrt caches, fiber lists and the eager module tables; shared between the
 * builder and the fault-injection copy. */
void finish(Correspondence& c) {
  size_t table = static_cast<size_t>(c.g.n) * c.x.npts;
  c.sqrt_delta.assign(table, 1.0);
  c.sqrt_delta_q.assign(table, Rational(1));
  c.exact_sqrt = true;
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p) {
      if (!c.x.can_l(a, p)) continue;
      const Rational& d = c.delta.value(a, p);
      size_t k = static_cast<size_t>(a) * c.x.npts + p;
      c.sqrt_delta[k] = std::sqrt(to_double(d));
      if (is_perfect_square(d))
        c.sqrt_delta_q[k] = rational_sqrt(d);
      else
        c.exact_sqrt = false;
    }
  if (!c.exact_sqrt) c.sqrt_delta_q.clear();

  c.points_by_sunit.assign(c.h.units.size(), {});
  for (Idx p = 0; p < c.x.npts; ++p)
    c.points_by_sunit[c.h.upos(c.x.sx[p])].push_back(p);

  if (c.x.npts <= 64)
    c.eager_module = std::make_shared<const HilbertModuleData>(compute_module_data(c));
  else
    c.eager_module.reset();
}

}  // namespace

Correspondence build_correspondence(const Groupoid& g, const HaarSystem& alpha,
                                    const Groupoid& h, const HaarSystem& beta,
                                    const Bispace& x, const MeasureFamily& lam) {
  ValidationReport all;
  for (const auto& rep : {validate_groupoid(g), validate_haar(g, alpha),
                          validate_groupoid(h), validate_haar(h, beta),
                          validate_bispace(g, h, x), validate_measure_family(h, x, lam)})
    for (const auto& v : rep.violations) all.violations.push_back(v);
  if (!all.ok())
    throw Error(ErrorCode::InvalidStructure, "correspondence data invalid: " + all.str());

  Correspondence c{g, h, alpha, beta, x, lam, compute_adjoining(g, alpha, x, lam)};
  auto iv = verify_condition_iv(g, alpha, x, lam, c.delta);
  if (!iv.ok)
    throw Error(ErrorCode::InvalidStructure,
                "computed adjoining function fails its defining identity: " + iv.witness);
  finish(c);
  return c;
}

Correspondence squares_correspondence(const Groupoid& g, const HaarSystem& alpha,
                                      const Groupoid& h, const HaarSystem& beta,
                                      const Bispace& x, const MeasureFamily& lam) {
  std::vector<Rational> uw(g.units.size());
  for (size_t i = 0; i < g.units.size(); ++i) {
    const Rational& w = alpha.weight[g.units[i]];
    uw[i] = w * w;
  }
  MeasureFamily lam2 = lam;
  for (auto& m : lam2.mass) m *= m;
  return build_correspondence(g, haar_from_unit_weights(g, uw), h, beta, x, lam2);
}

Correspondence with_perturbed_delta(const Correspondence& c, Idx arrow, Idx point,
                                    const Rational& factor) {
  if (factor <= 0) throw Error(ErrorCode::InputError, "perturbation factor must be positive");
  if (!c.x.can_l(arrow, point))
    throw Error(ErrorCode::InputError, "(" + c.g.name(arrow) + ", " +
                                           c.x.points[point] + ") is not composable");
  Correspondence out = c;
  out.delta.value(arrow, point) *= factor;
  finish(out);
  return out;
}

// ---------------------------------------------------------------------------
// kernels

template <class S>
Fn<S> left_action(const Correspondence& c, const Fn<S>& phi, const Fn<S>& f) {
  check_carrier(phi, arrows_carrier(c.g), c.g.n);
  check_carrier(f, points_carrier(c.x), c.x.npts);
  if constexpr (std::is_same_v<S, CQ>) {
    if (!c.exact_sqrt)
      throw Error(ErrorCode::NotPerfectSquare,
                  "exact left action needs a perfect-square adjoining function; "
                  "use squares_correspondence or float mode");
  }
  Fn<S> out = zero_fn<S>(points_carrier(c.x), c.x.npts);
  for (Idx p = 0; p < c.x.npts; ++p) {
    S acc{};
    for (Idx a : c.g.fiber_r[c.g.upos(c.x.rx[p])]) {
      if (scalar_ops<S>::exactly_zero(phi.v[a])) continue;
      Idx q = c.x.lact(c.g.inv[a], p);
      S root;
      if constexpr (std::is_same_v<S, CQ>)
        root = S{c.sdq(a, q)};
      else
        root = S{c.sd(a, q), 0.0};
      acc += phi.v[a] * f.v[q] * root * scalar_ops<S>::from_rational(c.alpha.w(a));
    }
    out.v[p] = acc;
  }
  return out;
}

template <class S>
Fn<S> left_action_unweighted(const Correspondence& c, const Fn<S>& phi, const Fn<S>& f) {
  check_carrier(phi, arrows_carrier(c.g), c.g.n);
  check_carrier(f, points_carrier(c.x), c.x.npts);
  Fn<S> out = zero_fn<S>(points_carrier(c.x), c.x.npts);
  for (Idx p = 0; p < c.x.npts; ++p) {
    S acc{};
    for (Idx a : c.g.fiber_r[c.g.upos(c.x.rx[p])]) {
      if (scalar_ops<S>::exactly_zero(phi.v[a])) continue;
      Idx q = c.x.lact(c.g.inv[a], p);
      acc += phi.v[a] * f.v[q] * scalar_ops<S>::from_rational(c.alpha.w(a));
    }
    out.v[p] = acc;
  }
  return out;
}

template <class S>
Fn<S> right_action(const Correspondence& c, const Fn<S>& f, const Fn<S>& psi) {
  check_carrier(f, points_carrier(c.x), c.x.npts);
  check_carrier(psi, arrows_carrier(c.h), c.h.n);
  Fn<S> out = zero_fn<S>(points_carrier(c.x), c.x.npts);
  for (Idx p = 0; p < c.x.npts; ++p) {
    S acc{};
    for (Idx e : c.h.fiber_r[c.h.upos(c.x.sx[p])]) {
      if (scalar_ops<S>::exactly_zero(psi.v[c.h.inv[e]])) continue;
      acc += f.v[c.x.ract(p, e)] * psi.v[c.h.inv[e]] *
             scalar_ops<S>::from_rational(c.beta.w(e));
    }
    out.v[p] = acc;
  }
  return out;
}

template <class S>
Fn<S> inner_product(const Correspondence& c, const Fn<S>& f, const Fn<S>& g) {
  check_carrier(f, points_carrier(c.x), c.x.npts);
  check_carrier(g, points_carrier(c.x), c.x.npts);
  Fn<S> out = zero_fn<S>(arrows_carrier(c.h), c.h.n);
  for (Idx e = 0; e < c.h.n; ++e) {
    S acc{};
    for (Idx p : c.points_by_sunit[c.h.upos(c.h.rng[e])]) {
      if (scalar_ops<S>::exactly_zero(f.v[p]) || scalar_ops<S>::exactly_zero(g.v[c.x.ract(p, e)]))
        continue;
      acc += scalar_ops<S>::conjugate(f.v[p]) * g.v[c.x.ract(p, e)] *
             scalar_ops<S>::from_rational(c.lam.mass[p]);
    }
    out.v[e] = acc;
  }
  return out;
}

template Fn<CQ> left_action<CQ>(const Correspondence&, const Fn<CQ>&, const Fn<CQ>&);
template Fn<CD> left_action<CD>(const Correspondence&, const Fn<CD>&, const Fn<CD>&);
template Fn<CQ> left_action_unweighted<CQ>(const Correspondence&, const Fn<CQ>&, const Fn<CQ>&);
template Fn<CD> left_action_unweighted<CD>(const Correspondence&, const Fn<CD>&, const Fn<CD>&);
template Fn<CQ> right_action<CQ>(const Correspondence&, const Fn<CQ>&, const Fn<CQ>&);
template Fn<CD> right_action<CD>(const Correspondence&, const Fn<CD>&, const Fn<CD>&);
template Fn<CQ> inner_product<CQ>(const Correspondence&, const Fn<CQ>&, const Fn<CQ>&);
template Fn<CD> inner_product<CD>(const Correspondence&, const Fn<CD>&, const Fn<CD>&);

// ---------------------------------------------------------------------------
// identity suite

namespace {

template <class S>
Fn<S> fn_add(const Fn<S>& a, const Fn<S>& b) {
  Fn<S> out = a;
  for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

template <class S>
double max_diff(const Fn<S>& a, const Fn<S>& b) {
  double r = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i)
    r = std::max(r, scalar_ops<S>::abs_residual(a.v[i] - b.v[i]));
  return r;
}

template <class S>
void run_identity_trials(const Correspondence& c, int trials, uint64_t seed,
                         BimoduleReport& rep) {
  const std::string gc = arrows_carrier(c.g), hc = arrows_carrier(c.h),
                    xc = points_carrier(c.x);
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<uint64_t>(t)));
    Fn<S> phi = random_fn<S>(gc, c.g.n, rng), phi2 = random_fn<S>(gc, c.g.n, rng);
    Fn<S> psi = random_fn<S>(hc, c.h.n, rng), psi2 = random_fn<S>(hc, c.h.n, rng);
    Fn<S> f = random_fn<S>(xc, c.x.npts, rng), g1 = random_fn<S>(xc, c.x.npts, rng),
          g2 = random_fn<S>(xc, c.x.npts, rng);

    auto upd = [&](int k, double r) {
      rep.max_residual[k] = std::max(rep.max_residual[k], r);
    };
    upd(0, max_diff(left_action(c, convolve(c.g, c.alpha, phi, phi2), f),
                    left_action(c, phi, left_action(c, phi2, f))));
    upd(1, max_diff(right_action(c, f, convolve(c.h, c.beta, psi, psi2)),
                    right_action(c, right_action(c, f, psi), psi2)));
    upd(2, max_diff(right_action(c, left_action(c, phi, f), psi),
                    left_action(c, phi, right_action(c, f, psi))));
    upd(3, max_diff(inner_product(c, f, fn_add(g1, g2)),
                    fn_add(inner_product(c, f, g1), inner_product(c, f, g2))));
    upd(4, max_diff(involution(c.h, inner_product(c, f, g1)), inner_product(c, g1, f)));
    upd(5, max_diff(convolve(c.h, c.beta, inner_product(c, f, g1), psi),
                    inner_product(c, f, right_action(c, g1, psi))));
    upd(6, max_diff(inner_product(c, left_action(c, phi, f), g1),
                    inner_product(c, f, left_action(c, involution(c.g, phi), g1))));
  }
}

}  // namespace

std::string BimoduleReport::str() const {
  static const char* label[7] = {
      "(phi*phi')f = phi(phi'f)", "f(psi*psi') = (f psi)psi'",
      "(phi f)psi = phi(f psi)",  "<f,g+g'> = <f,g>+<f,g'>",
      "<f,g>* = <g,f>",           "<f,g>*psi = <f,g psi>",
      "<phi f,g> = <f,phi* g>"};
  std::ostringstream os;
  os << (exact ? "exact" : "float") << " mode, " << trials << " trials\n";
  for (int k = 0; k < 7; ++k)
    os << "  " << label[k] << ": max residual " << max_residual[k] << "\n";
  os << (ok ? "all identities hold" : "IDENTITY FAILURE") << "\n";
  return os.str();
}

BimoduleReport verify_bimodule_identities(const Correspondence& c, int trials,
                                          uint64_t seed, double tol) {
  BimoduleReport rep;
  rep.trials = trials;
  rep.exact = c.exact_sqrt;
  if (rep.exact)
    run_identity_trials<CQ>(c, trials, seed, rep);
  else
    run_identity_trials<CD>(c, trials, seed, rep);
  rep.ok = true;
  for (double r : rep.max_residual)
    if (rep.exact ? r != 0.0 : r > tol) rep.ok = false;
  return rep;
}

// ---------------------------------------------------------------------------
// analytic checks

bool positivity_certificate(const Correspondence& c, const Fn<CD>& f, double tol) {
  return positivity_check(c.h, c.beta, inner_product(c, f, f), tol).positive;
}

bool bounded_action_check(const Correspondence& c, const Fn<CD>& zeta, const Fn<CD>& f,
                          double tol) {
  double n = cstar_norm(c.g, c.alpha, zeta);
  Fn<CD> lhs = inner_product(c, f, f);
  for (auto& v : lhs.v) v *= n * n;
  Fn<CD> zf = left_action(c, zeta, f);
  Fn<CD> rhs = inner_product(c, zf, zf);
  for (size_t i = 0; i < lhs.v.size(); ++i) lhs.v[i] -= rhs.v[i];
  return positivity_check(c.h, c.beta, lhs, tol).positive;
}

bool cauchy_schwarz_check(const Correspondence& c, const Fn<CD>& f, const Fn<CD>& g,
                          double tol) {
  Fn<CD> fg = inner_product(c, f, g);
  Fn<CD> lhs = convolve(c.h, c.beta, involution(c.h, fg), fg);
  double n = cstar_norm(c.h, c.beta, inner_product(c, f, f));
  Fn<CD> diff = inner_product(c, g, g);
  for (auto& v : diff.v) v *= n;
  for (size_t i = 0; i < diff.v.size(); ++i) diff.v[i] -= lhs.v[i];
  return positivity_check(c.h, c.beta, diff, tol).positive;
}

NondegeneracyResult nondegeneracy_check(const Correspondence& c) {
  NondegeneracyResult res;
  std::vector<char> reached(c.x.npts, 0);
  for (Idx a = 0; a < c.g.n; ++a)
    for (Idx p = 0; p < c.x.npts; ++p) {
      Idx y = c.x.lact(a, p);
      if (y != kUndef) reached[y] = 1;
    }
  res.ok = true;
  for (Idx p = 0; p < c.x.npts; ++p) {
    if (c.g.fiber_r[c.g.upos(c.x.rx[p])].empty()) {
      res.excluded.push_back(c.x.points[p]);
      continue;
    }
    if (reached[p]) ++res.rank;
    else res.ok = false;
  }
  return res;
}

CorrespondenceFlags correspondence_flags(const Correspondence& c) {
  CorrespondenceFlags fl;
  fl.full = true;
  for (Idx e = 0; e < c.h.n && fl.full; ++e) {
    bool hit = false;
    for (Idx p : c.points_by_sunit[c.h.upos(c.h.rng[e])])
      if (c.lam.mass[p] > 0) hit = true;
    fl.full = hit;
  }
  fl.proper = true;  // the left action is a finite matrix, hence compact
  return fl;
}

HilbertModuleData module_data(const Correspondence& c) {
  if (c.eager_module) return *c.eager_module;
  return compute_module_data(c);
}

}  // namespace gpd
