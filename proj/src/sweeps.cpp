#include "gpd/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "gpd/algebra.hpp"
#include "gpd/random.hpp"

namespace gpd {

namespace {

struct TrialStat {
  bool ok = true;
  double stat = 0.0;
  std::string witness;
};

template <class Body>
void run_trials(int trials, Exec exec, std::vector<TrialStat>& out, const Body& body) {
  out.assign(static_cast<size_t>(std::max(trials, 0)), TrialStat{});
  auto guarded = [&](int t) {
    try {
      out[t] = body(t);
    } catch (const std::exception& e) {
      out[t] = {false, 0.0, std::string("threw: ") + e.what()};
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) guarded(t);
  } else {
    for (int t = 0; t < trials; ++t) guarded(t);
  }
}

/* true picks the larger stat as "worst", false the smaller. */
template <class Body>
SweepReport reduce_sweep(const std::string& name, int trials, Exec exec, bool larger_is_worse,
                         const Body& body) {
  SweepReport r;
  r.sweep = name;
  r.trials = std::max(trials, 0);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<TrialStat> stats;
  run_trials(trials, exec, stats, body);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  for (int t = 0; t < static_cast<int>(stats.size()); ++t) {
    const TrialStat& s = stats[t];
    bool extremal = r.worst_trial < 0 ||
                    (larger_is_worse ? s.stat > r.worst : s.stat < r.worst);
    if (extremal) {
      r.worst = s.stat;
      r.worst_trial = t;
    }
    if (!s.ok && r.ok) {
      r.ok = false;
      r.witness = "trial " + std::to_string(t) + ": " + s.witness;
    }
  }
  return r;
}

double max_residual(const BimoduleReport& br) {
  double m = 0.0;
  for (double v : br.max_residual) m = std::max(m, v);
  return m;
}

}  // namespace

std::string SweepReport::str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", worst);
  std::string out = sweep + ": " + std::to_string(trials) + " trials, worst " + buf;
  out += ok ? ", ok" : (", FAIL (" + witness + ")");
  return out;
}

SweepReport bimodule_sweep(const Correspondence& c, int trials, uint64_t seed, Exec exec,
                           double tol) {
  return reduce_sweep("bimodule", trials, exec, /*larger_is_worse=*/true, [&](int t) {
    BimoduleReport br = verify_bimodule_identities(c, 1, trial_seed(seed, t), tol);
    TrialStat s;
    s.stat = max_residual(br);
    s.ok = br.ok;
    if (!br.ok) s.witness = br.str();
    return s;
  });
}

SweepReport positivity_sweep(const Correspondence& c, int trials, uint64_t seed, Exec exec,
                             double tol) {
  return reduce_sweep("positivity", trials, exec, /*larger_is_worse=*/false, [&](int t) {
    Rng rng(trial_seed(seed, t));
    Fn<CD> f = random_fn<CD>(points_carrier(c.x), c.x.npts, rng);
    PositivityResult pr = positivity_check(c.h, c.beta, inner_product(c, f, f), tol);
    TrialStat s;
    s.stat = pr.min_eigenvalue;
    s.ok = pr.positive;
    if (!pr.positive)
      s.witness = "min eigenvalue " + std::to_string(pr.min_eigenvalue) + " at unit " +
                  pr.witness_unit;
    return s;
  });
}

SweepReport boundedness_sweep(const Correspondence& c, int trials, uint64_t seed, Exec exec,
                              double tol) {
  return reduce_sweep("boundedness", trials, exec, /*larger_is_worse=*/false, [&](int t) {
    Rng rng(trial_seed(seed, t));
    Fn<CD> zeta = random_fn<CD>(arrows_carrier(c.g), c.g.n, rng);
    Fn<CD> f = random_fn<CD>(points_carrier(c.x), c.x.npts, rng);
    double n = cstar_norm(c.g, c.alpha, zeta);
    Fn<CD> gap = inner_product(c, f, f);
    for (auto& v : gap.v) v *= n * n;
    Fn<CD> zf = left_action(c, zeta, f);
    Fn<CD> rhs = inner_product(c, zf, zf);
    for (size_t i = 0; i < gap.v.size(); ++i) gap.v[i] -= rhs.v[i];
    PositivityResult pr = positivity_check(c.h, c.beta, gap, tol);
    TrialStat s;
    s.stat = pr.min_eigenvalue;
    s.ok = pr.positive;
    if (!pr.positive)
      s.witness = "gap eigenvalue " + std::to_string(pr.min_eigenvalue) + " at unit " +
                  pr.witness_unit;
    return s;
  });
}

SweepReport keystone_sweep(const Correspondence& c, const RepBundle& rep, const RNData& rn,
                           int trials, uint64_t seed, Exec exec, double tol) {
  return reduce_sweep("keystone", trials, exec, /*larger_is_worse=*/true, [&](int t) {
    PositivityLemmasReport pl =
        verify_positivity_lemmas(c, rep, rn, 1, trial_seed(seed, t), tol);
    TrialStat s;
    s.stat = std::max({pl.adjoint_residual, pl.keystone_residual, pl.norm_bound_excess});
    s.ok = pl.ok;
    if (!pl.ok) s.witness = pl.str();
    return s;
  });
}

}  // namespace gpd
