#include "gpd/common.hpp"
#include "gpd/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace gpd {

std::string error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InputError:           return "InputError";
    case ErrorCode::CarrierMismatch:      return "CarrierMismatch";
    case ErrorCode::NotInvariant:         return "NotInvariant";
    case ErrorCode::SupportMismatch:      return "SupportMismatch";
    case ErrorCode::SupportNotInvariant:  return "SupportNotInvariant";
    case ErrorCode::IncompatibleMeasures: return "IncompatibleMeasures";
    case ErrorCode::NotSelfAdjoint:       return "NotSelfAdjoint";
    case ErrorCode::NotPerfectSquare:     return "NotPerfectSquare";
    case ErrorCode::QuotientNotBijective: return "QuotientNotBijective";
    case ErrorCode::InvalidStructure:     return "InvalidStructure";
  }
  return "UnknownError";
}

std::string format_rational(const Rational& q) {
  Integer num = numerator(q), den = denominator(q);
  std::string s = num.str();
  if (den != 1) { s += '/'; s += den.str(); }
  return s;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::InputError, "empty rational literal");
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw Error(ErrorCode::InputError, "bad rational literal '" + s + "'");
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw Error(ErrorCode::InputError, "bad rational literal '" + s + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw Error(ErrorCode::InputError, "bad rational literal '" + s + "'");
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  check_int(p);
  check_int(q);
  Integer den(q);
  if (den == 0) throw Error(ErrorCode::InputError, "zero denominator in '" + s + "'");
  return Rational(Integer(p), den);
}

static bool integer_sqrt_exact(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

bool is_perfect_square(const Rational& q) {
  Integer rn, rd;
  return q >= 0 && integer_sqrt_exact(numerator(q), rn) &&
         integer_sqrt_exact(denominator(q), rd);
}

Rational rational_sqrt(const Rational& q) {
  Integer rn, rd;
  if (q < 0 || !integer_sqrt_exact(numerator(q), rn) ||
      !integer_sqrt_exact(denominator(q), rd))
    throw Error(ErrorCode::NotPerfectSquare,
                "no exact square root of " + format_rational(q));
  return Rational(rn, rd);
}

}  // namespace gpd
