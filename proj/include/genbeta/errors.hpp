#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genbeta {

enum class ErrorKind {
  invalid_argument,
  gamma_pole,
  lower_parameter_pole,
  parameter_domain,
  non_convergence,
  sector_violation,
  contour_too_low,
  truncation_insufficient,
  degenerate_cubic,
  radius_violation,
  zero_leading_coefficient,
  continuation_jump,
  step_failure,
  bracket_failure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit status) can tell them apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace genbeta
