#pragma once

#include <string>
#include <vector>

#include "gpd/common.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/rational.hpp"

namespace gpd {

/* Finitely supported function on a tagged carrier (the arrow set of a
 * groupoid, or the point set of a bispace).  The tag is checked by every
 * kernel so that elements of C_c(G) cannot silently be fed to C_c(H). */
template <class S>
struct Fn {
  std::string carrier;
  std::vector<S> v;
};

inline std::string arrows_carrier(const Groupoid& g) { return "arrows:" + g.id; }

template <class S>
void check_carrier(const Fn<S>& f, const std::string& expected, size_t size) {
  if (f.carrier != expected)
    throw Error(ErrorCode::CarrierMismatch,
                "function on " + f.carrier + " used where " + expected + " expected");
  if (f.v.size() != size)
    throw Error(ErrorCode::CarrierMismatch, "function size differs from carrier size");
}

template <class S>
Fn<S> zero_fn(const std::string& carrier, size_t n) {
  return {carrier, std::vector<S>(n)};
}

template <class S>
Fn<S> delta_fn(const std::string& carrier, size_t n, size_t i) {
  Fn<S> f = zero_fn<S>(carrier, n);
  f.v[i] = scalar_ops<S>::from_rational(Rational(1));
  return f;
}

inline Fn<CD> fn_to_cd(const Fn<CQ>& f) {
  Fn<CD> g{f.carrier, std::vector<CD>(f.v.size())};
  for (size_t i = 0; i < f.v.size(); ++i) g.v[i] = to_complex(f.v[i]);
  return g;
}

}  // namespace gpd
