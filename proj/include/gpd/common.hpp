#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gpd {

/* Typed failures raised by constructive operations (validators return reports
 * instead).  The code names the contract that broke; the message names the
 * offending arrow / point / pair. */
enum class ErrorCode {
  InputError,          // malformed document, bad reference, bad parameters
  CarrierMismatch,     // Fn / cochain used against the wrong groupoid or space
  NotInvariant,        // Haar or measure family fails invariance
  SupportMismatch,     // measure supports incompatible (quasi-invariance broken)
  SupportNotInvariant, // measure-family support not invariant under the action
  IncompatibleMeasures,// mu-side and nu-side supports differ in rn_data
  NotSelfAdjoint,      // positivity check fed a non-self-adjoint element
  NotPerfectSquare,    // exact mode asked for an irrational square root
  QuotientNotBijective,// Macho Stadler family: G\X -> H^0 not a bijection
  InvalidStructure,    // groupoid / bispace / action axioms violated
};

std::string error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(error_code_name(code) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/* Validators collect every violation they find; ok() == no violations.
 * Each entry is "rule: offending data". */
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void fail(const std::string& rule, const std::string& detail) {
    violations.push_back(rule + ": " + detail);
  }
  std::string str() const {
    std::string out;
    for (const auto& v : violations) { out += v; out += '\n'; }
    return out;
  }
};

}  // namespace gpd
