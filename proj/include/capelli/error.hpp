#ifndef CAPELLI_ERROR_HPP
#define CAPELLI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace capelli {

/// Library error with a stable machine-readable code.
///
/// Codes used across the modules:
///   DIMENSION_MISMATCH, VARIABLE_MISMATCH, NOT_INVERTIBLE,
///   ZERO_NORMALIZER, NOT_STRICT, NOT_IN_HOOK, THETA_ZERO,
///   EVEN_DEGREE, INADMISSIBLE_THETA, NO_SOLUTION, LENGTH_EXCEEDED,
///   NOT_MULTIPLICITY_FREE, NOT_IN_OMEGA, UNSUPPORTED_CASE,
///   BAD_REQUEST.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

} // namespace capelli

#endif
