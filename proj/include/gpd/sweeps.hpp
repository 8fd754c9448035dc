#pragma once

#include <cstdint>
#include <string>

#include "gpd/correspondence.hpp"
#include "gpd/reptheory.hpp"

namespace gpd {

/* Batch drivers for the long random-trial verifications.  Every trial derives
 * its own seed through trial_seed, so a sweep outcome is a pure function of
 * (input, trials, seed) and never of scheduling: the parallel path produces
 * bit-identical reports to the serial one, and the tests hold it to that. */

enum class Exec { serial, parallel };

struct SweepReport {
  std::string sweep;
  int trials = 0;
  bool ok = true;
  double worst = 0.0;    // extremal statistic across trials; see each driver
  int worst_trial = -1;  // trial attaining it, -1 when trials == 0
  std::string witness;   // first failing trial, empty otherwise
  double seconds = 0.0;  // wall time of the trial loop

  std::string str() const;
};

/* Seven bimodule identities per trial; worst = largest residual over all
 * trials and identities, exactly zero when the adjoining function has
 * rational square roots. */
SweepReport bimodule_sweep(const Correspondence& c, int trials, uint64_t seed,
                           Exec exec = Exec::serial, double tol = 1e-8);

/* Spectrum of pi_u(<f, f>) over every unit per trial; worst = smallest
 * eigenvalue seen, ok iff worst >= -tol. */
SweepReport positivity_sweep(const Correspondence& c, int trials, uint64_t seed,
                             Exec exec = Exec::serial, double tol = 1e-8);

/* Gap ||zeta||^2 <f, f> - <zeta f, zeta f> per random (zeta, f); worst =
 * smallest eigenvalue of the gap across trials, ok iff worst >= -tol. */
SweepReport boundedness_sweep(const Correspondence& c, int trials, uint64_t seed,
                              Exec exec = Exec::serial, double tol = 1e-7);

/* Bra/ket lemmas against the given bundle per trial; worst = largest of the
 * adjointness and factorization residuals and the norm-bound excess. */
SweepReport keystone_sweep(const Correspondence& c, const RepBundle& rep,
                           const RNData& rn, int trials, uint64_t seed,
                           Exec exec = Exec::serial, double tol = 1e-9);

}  // namespace gpd
