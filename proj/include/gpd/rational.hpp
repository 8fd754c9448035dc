#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpd {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

/* Canonical "p/q" text form, lowest terms, "/1" omitted.  parse_rational
 * accepts "p", "p/q" and optional leading '-'; anything else throws. */
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& s);

bool is_perfect_square(const Rational& q);

/* Exact square root of a perfect-square rational.  Throws if q < 0 or not a
 * perfect square; exact-mode callers are required to feed squares. */
Rational rational_sqrt(const Rational& q);

/* Complex number with exact rational parts.  Used by the exact-mode kernels
 * where conjugation and the seven bimodule identities must close with zero
 * residual.  Only the ring operations the kernels need. */
struct CQ {
  Rational re;
  Rational im;

  CQ() = default;
  CQ(Rational r) : re(std::move(r)) {}
  CQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend CQ operator-(const CQ& a) { return {-a.re, -a.im}; }
  friend CQ operator*(const CQ& a, const CQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CQ& a, const CQ& b) { return !(a == b); }

  CQ& operator+=(const CQ& b) { re += b.re; im += b.im; return *this; }
  CQ& operator*=(const CQ& b) { *this = *this * b; return *this; }
};

inline CQ conj(const CQ& a) { return {a.re, -a.im}; }
inline Rational norm_sq(const CQ& a) { return a.re * a.re + a.im * a.im; }
inline std::complex<double> to_complex(const CQ& a) { return {to_double(a.re), to_double(a.im)}; }

/* Division by an exact rational (never by a complex); enough for the
 * normalizations the kernels perform. */
inline CQ operator/(const CQ& a, const Rational& d) {
  if (d == 0) throw std::domain_error("CQ: division by zero");
  return {a.re / d, a.im / d};
}

/* Scalar adapters: the convolution / module kernels are templated on the
 * scalar type S and pull weights (exact rationals) and square roots of
 * rationals through these hooks.  S = CQ keeps everything exact (square
 * roots must be perfect squares); S = std::complex<double> is float mode. */
template <class S> struct scalar_ops;

template <> struct scalar_ops<CQ> {
  static CQ from_rational(const Rational& q) { return CQ{q}; }
  static CQ sqrt_rational(const Rational& q) { return CQ{rational_sqrt(q)}; }
  static CQ conjugate(const CQ& a) { return conj(a); }
  static double abs_residual(const CQ& a) {
    return a.is_zero() ? 0.0 : std::abs(to_complex(a));
  }
  static bool exactly_zero(const CQ& a) { return a.is_zero(); }
};

template <> struct scalar_ops<std::complex<double>> {
  static std::complex<double> from_rational(const Rational& q) { return {to_double(q), 0.0}; }
  static std::complex<double> sqrt_rational(const Rational& q) {
    return {std::sqrt(to_double(q)), 0.0};
  }
  static std::complex<double> conjugate(const std::complex<double>& a) { return std::conj(a); }
  static double abs_residual(const std::complex<double>& a) { return std::abs(a); }
  static bool exactly_zero(const std::complex<double>& a) { return a == std::complex<double>{}; }
};

using CD = std::complex<double>;

}  // namespace gpd
