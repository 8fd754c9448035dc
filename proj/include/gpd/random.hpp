#pragma once

#include <cstdint>
#include <random>

#include "gpd/fn.hpp"
#include "gpd/rational.hpp"

namespace gpd {

/* splitmix64 step; used to derive independent per-trial seeds so sweep
 * results do not depend on thread scheduling. */
inline uint64_t trial_seed(uint64_t base, uint64_t trial) {
  uint64_t z = base + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/* Thin generator wrapper.  Draws avoid std distributions on purpose: their
 * output is implementation-defined, and frozen test values must not move
 * between standard libraries. */
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t bits() { return eng(); }
  int below(int k) { return static_cast<int>(bits() % static_cast<uint64_t>(k)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  Rational rational() {  // numerator -3..3, denominator 1..2
    return Rational(range(-3, 3), range(1, 2));
  }
  CQ cq() { return CQ{rational(), rational()}; }
  CD cd() { return CD{range(-3, 3) / static_cast<double>(range(1, 2)),
                      range(-3, 3) / static_cast<double>(range(1, 2))}; }
};

template <class S>
Fn<S> random_fn(const std::string& carrier, size_t n, Rng& rng) {
  Fn<S> f = zero_fn<S>(carrier, n);
  for (auto& x : f.v) {
    if constexpr (std::is_same_v<S, CQ>) x = rng.cq();
    else x = rng.cd();
  }
  return f;
}

}  // namespace gpd
