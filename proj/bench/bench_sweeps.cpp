// Times the serial and OpenMP trial loops on the same workload and checks
// that both produce the same report.  Build target only; not part of ctest.

#include <cstdio>
#include <string>

#include "gpd/gallery.hpp"
#include "gpd/sweeps.hpp"

using namespace gpd;

namespace {

// pair groupoid on 5 points acting on itself from both sides: 25 arrows and
// 25 carrier points, the scale the acceptance budget is written against
Correspondence workload() {
  Groupoid g = pair_groupoid("p5", 5);
  std::vector<std::string> pts(g.n);
  for (Idx p = 0; p < g.n; ++p) pts[p] = g.name(p);
  Bispace x = make_bispace(
      "p5-self", g, g, pts, [&](Idx p) { return g.rng[p]; },
      [&](Idx p) { return g.src[p]; },
      [&](Idx a, Idx p) { return g.compose(a, p); },
      [&](Idx p, Idx e) { return g.compose(p, e); });
  return equivalence_correspondence(g, counting_haar(g), g, counting_haar(g), x);
}

void row(const char* name, const SweepReport& ser, const SweepReport& par) {
  bool same = ser.ok == par.ok && ser.worst == par.worst &&
              ser.worst_trial == par.worst_trial && ser.witness == par.witness;
  std::printf("%-12s %6d trials   serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
              name, ser.trials, ser.seconds, par.seconds,
              par.seconds > 0 ? ser.seconds / par.seconds : 0.0,
              same ? (ser.ok ? "match, ok" : "match, FAIL") : "REPORTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  Correspondence c = workload();
  std::printf("workload: %s, %d left arrows, %d points, %d right arrows\n\n",
              c.x.id.c_str(), c.g.n, c.x.npts, c.h.n);

  row("bimodule", bimodule_sweep(c, 200 * scale, 1, Exec::serial),
      bimodule_sweep(c, 200 * scale, 1, Exec::parallel));
  row("positivity", positivity_sweep(c, 400 * scale, 1, Exec::serial),
      positivity_sweep(c, 400 * scale, 1, Exec::parallel));
  row("boundedness", boundedness_sweep(c, 100 * scale, 1, Exec::serial),
      boundedness_sweep(c, 100 * scale, 1, Exec::parallel));

  RNData rn = uniform_rn(c);
  RepBundle rb = regular_rep_bundle(c.h);
  row("keystone", keystone_sweep(c, rb, rn, 50 * scale, 1, Exec::serial),
      keystone_sweep(c, rb, rn, 50 * scale, 1, Exec::parallel));
  return 0;
}
