#pragma once

#include "genbeta/log_complex.hpp"
#include "genbeta/parameters.hpp"

namespace genbeta {

enum class Precision { standard, extended };

struct QuadratureConfig {
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  Precision working_precision = Precision::standard;

  /// rel_tol must lie in (1e-30, 1e-3); below 1e-14 only extended precision
  /// can deliver it.
  void validate() const;

  static QuadratureConfig extended(double rel_tol) { return {rel_tol, 20000, Precision::extended}; }
};

/// Quadrature value with its estimated relative error.
struct OracleValue {
  LogComplex value;
  double rel_error = 0.0;
  int panels = 0;
};

/// B(x,y;p) = int_0^1 t^{x-1} (1-t)^{y-1} exp[-p / (4t(1-t))] dt by adaptive
/// Gauss-Kronrod quadrature of the log-scaled integrand. Needs Re p > 0, or
/// p = 0 with Re x, Re y > 0 (then t = sin^2 u is used).
OracleValue b_euler(const Parameters& params, const QuadratureConfig& cfg);

/// B(x,y;p) for x = xmod e^{i theta}, written with the roles of x and y
/// exchanged so the large parameter sits on (1-t). Panel density grows with
/// xmod; extended precision is required whenever the integrand cancels by
/// more than ~1e12, which happens for theta between roughly 0.5pi and 0.7pi.
OracleValue b_euler_complex_x(double xmod, double theta, cplx y, double p, const QuadratureConfig& cfg);

/// Vertical line Re s = c of the Mellin-Barnes integral, truncated to
/// |Im s| <= half_height and sampled with `nodes` trapezoid panels.
/// half_height <= 0 asks for automatic truncation.
struct MBContour {
  double c = 1.0;
  double half_height = 0.0;
  int nodes = 64;
};

/// c = max{1, 1 - Re x, 1 - Re y}, automatic truncation.
MBContour default_contour(const Parameters& params);

/// B(x,y;p) from
///   2^{1-x-y} sqrt(pi) (1/2 pi i) int Gamma(s)Gamma(x+s)Gamma(y+s)
///       / [Gamma((x+y)/2+s) Gamma((x+y+1)/2+s)] p^{-s} ds
/// on the line of `contour`. Nodes are doubled until two successive trapezoid
/// sums agree to rel_tol.
OracleValue b_mellin_barnes(const Parameters& params, const MBContour& contour, double rel_tol = 1e-12);

}  // namespace genbeta
