#pragma once

#include <vector>

#include "genbeta/large_p.hpp"
#include "genbeta/log_complex.hpp"

namespace genbeta {

/// Which phase function the saddles belong to, with p = a x:
///   fixed_y:         psi = a/(4t(1-t)) - log t,                 f = (1-t)^{y-1} / t
///   proportional_y:  psi = a/(4t(1-t)) - log t - b log(1-t),    f = 1 / (t(1-t))   (y = b x)
enum class Regime { fixed_y, proportional_y };

/// Roots of the saddle cubic. For real a > 0 (and b > 0) all three are real
/// with t2 < 0 <= t0 <= 1 < t1.
struct SaddleSet {
  cplx t0;
  cplx t1;
  cplx t2;
  Regime regime = Regime::fixed_y;
  double a = 0.0;
  double b = 0.0;  // proportional_y only
  double max_residual = 0.0;
  double max_polish_step = 0.0;
};

/// Roots of t(1-t)^2 + (a/4)(1-2t) = 0, a > 0.
SaddleSet solve_saddles_s3(double a);

/// Roots of t(1-t){1-(b+1)t} + (a/4)(1-2t) = 0, a > 0, b > 0.
SaddleSet solve_saddles_s4(double a, double b);

/// Taylor data about t0:
///   psi(t) - psi(t0) = sum_r a_r (t-t0)^{r+2},   f(t) = sum_r b_r (t-t0)^r.
struct LocalSeries {
  std::vector<cplx> a_coeffs;
  std::vector<cplx> b_coeffs;
  cplx psi_at_saddle;
  long double psi_at_saddle_extended = 0.0L;  // real part, long double
};

/// Coefficients r = 0..R by truncated power-series arithmetic. y_or_b is
/// y for fixed_y and is ignored for proportional_y (b is stored in the saddle
/// set). Throws radius_violation when t0 lies within 1e-6 of 0 or 1.
LocalSeries local_series(const SaddleSet& saddles, cplx y_or_b, int R);

/// psi''(t0) in closed form, used as a cross-check of a_0 = psi''(t0)/2.
double psi2_closed_form_s3(double t0);
double psi2_closed_form_s4(double t0, double b);

/// C_n for n = 0..2 n0:
///   C_n = 1/(2 a0^{(n+1)/2}) sum_k b_{n-k} sum_j (-1)^j ((n+1)/2)_j / (j! a0^j) B_{kj}
struct WojdyloCoefficients {
  std::vector<cplx> values;
  int n0 = 0;
};

/// Needs R >= 2 n0 in the series. Throws zero_leading_coefficient if a0 = 0.
WojdyloCoefficients wojdylo_coefficients(const LocalSeries& series, int n0);

inline constexpr int default_saddle_depth = 5;

/// B(x,y;ax) ~ 2 e^{-x psi(t0)} sum_{n<=n0} C_{2n} Gamma(n+1/2) x^{-n-1/2},
/// |arg x| < pi/2. error_estimate is the next term, C_{2n0+2}, relative to
/// the sum.
ExpansionResult expand_s3(cplx x, cplx y, double a, int n0 = default_saddle_depth);

/// The same expansion for B(x, bx; ax).
ExpansionResult expand_s4(cplx x, double a, double b, int n0 = default_saddle_depth);

}  // namespace genbeta
