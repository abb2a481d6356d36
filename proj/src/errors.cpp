#include "genbeta/errors.hpp"

namespace genbeta {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::gamma_pole: return "gamma pole";
    case ErrorKind::lower_parameter_pole: return "lower-parameter pole";
    case ErrorKind::parameter_domain: return "parameter domain";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::sector_violation: return "sector violation";
    case ErrorKind::contour_too_low: return "contour too low";
    case ErrorKind::truncation_insufficient: return "truncation insufficient";
    case ErrorKind::degenerate_cubic: return "degenerate cubic";
    case ErrorKind::radius_violation: return "radius violation";
    case ErrorKind::zero_leading_coefficient: return "zero leading coefficient";
    case ErrorKind::continuation_jump: return "continuation jump";
    case ErrorKind::step_failure: return "step failure";
    case ErrorKind::bracket_failure: return "bracket failure";
  }
  return "unknown";
}

}  // namespace genbeta
