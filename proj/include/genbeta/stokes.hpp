#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "genbeta/log_complex.hpp"

namespace genbeta {

/// x = xmod e^{i theta} with finite p. After exchanging x and y,
///   B(x,y;p) = int_0^1 f(t) e^{-|x| psi(t)} dt,
///   psi = alpha/(t(1-t)) - e^{i theta} log(1-t),   f = t^{y-1}/(1-t),
/// alpha = p/(4|x|). The t-plane is cut along [1, inf).
struct PhaseConfig {
  double alpha = 0.0;
  double theta = 0.0;
  double xmod = 0.0;
  cplx y;
  double p = 0.0;

  /// Checks p > 0, xmod > 0, 0 <= theta <= pi.
  static PhaseConfig make(double xmod, double theta, cplx y, double p);
};

/// psi, psi' and psi'' with the principal log(1-t).
cplx stokes_psi(double alpha, double theta, cplx t);
cplx stokes_dpsi(double alpha, double theta, cplx t);
cplx stokes_d2psi(double alpha, double theta, cplx t);

/// Roots of t^2(t-1) + alpha e^{-i theta}(1-2t) = 0, labelled by
/// continuing the real ordering t2 < 0 < t0 < 1 < t1 at theta = 0 in small
/// theta steps with nearest-root matching.
struct ComplexSaddles {
  std::array<cplx, 3> t;  // t0, t1, t2
  double max_residual = 0.0;
};

/// Throws continuation_jump if a step's match is ambiguous.
ComplexSaddles saddles_complex(double alpha, double theta);

/// Continues labelled saddles from theta `from` to theta `to` (either direction).
ComplexSaddles continue_saddles(double alpha, double from, const ComplexSaddles& start, double to);

enum class Terminus {
  origin,              // t -> 0 with |arg t| < pi/2
  origin_left,         // t -> 0 from Re t < 0 (only reached by ascent paths)
  one,                 // t -> 1 with |arg(1-t)| < pi/2 on the principal sheet
  one_adjacent_sheet,  // t -> 1 after winding once around it
  spiral_infinity,     // winds around t = 1 more than 3 pi / 2 turns, or |t| > 1e3
  other_saddle,        // passes within the capture radius of the other saddle
};

std::string_view to_string(Terminus t) noexcept;

struct PathTrace {
  std::vector<cplx> points;
  std::vector<double> re_psi;  // Re psi with log(1-t) continued along the path
  Terminus terminus = Terminus::origin;
  int other_saddle = -1;  // index of the captured saddle, when terminus is other_saddle
  int direction_sign = 1;
  bool descent = true;
  double final_arg_one = 0.0;  // continued arg(1-t) at the last point
};

/// The two steepest-descent paths (|integrand| decreasing, Re psi
/// increasing) leaving saddle 0 or 1, for direction signs +1 and -1.
std::pair<PathTrace, PathTrace> trace_descent(double alpha, double theta, int saddle_index);

/// The two steepest-ascent paths through the same saddle.
std::pair<PathTrace, PathTrace> trace_ascent(double alpha, double theta, int saddle_index);

/// Angles in radians.
struct CriticalAngles {
  double theta0 = 0.0;
  double theta1 = 0.0;
  double theta_star = 0.0;
  bool theta0_confirmed = false;  // t0 descent termini differ on either side of theta0
};

/// theta0 < theta1: zeros of Im(psi(t0) - psi(t1)) in (0, pi); theta_star:
/// zero of Re(psi(t0) - psi(t1)) between them. Each is bisected to 1e-12 pi
/// and theta0 is checked for a flip of the t0 descent termini. Throws
/// bracket_failure if the sign changes are not found.
CriticalAngles critical_angles(double alpha);

struct SaddleContribution {
  LogComplex value;
  bool branch_ambiguous = false;  // arg psi'' within 1e-8 of 0 or 2 pi
};

/// J_r = sqrt(2 pi / (|x| psi''(t_r))) t_r^{y-1} (1-t_r)^{x-1} exp[-p/(4 t_r (1-t_r))]
/// with arg psi''(t_r) in [0, 2 pi).
SaddleContribution saddle_contribution(const PhaseConfig& cfg, int saddle_index);

enum class StokesRegime { t0_only, both, t1_only };

std::string_view to_string(StokesRegime r) noexcept;

struct StokesResult {
  LogComplex value;
  StokesRegime regime = StokesRegime::t0_only;
  bool near_critical = false;  // within 1e-3 pi of theta0 or theta1
  CriticalAngles angles;
  SaddleContribution j0;
  SaddleContribution j1;
};

/// J0 below theta0, J0 - J1 between theta0 and theta1, J1 above theta1.
StokesResult asymptotic_b_complex_x(const PhaseConfig& cfg);

/// Same, reusing precomputed critical angles for this alpha.
StokesResult asymptotic_b_complex_x(const PhaseConfig& cfg, const CriticalAngles& angles);

enum class Dominance { t0_dominant, t1_dominant, equal };

std::string_view to_string(Dominance d) noexcept;

/// Smaller Re psi means the larger contribution; "equal" within 1e-8.
Dominance dominance(double alpha, double theta);

}  // namespace genbeta
