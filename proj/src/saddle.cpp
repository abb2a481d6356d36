#include "genbeta/saddle.hpp"

#include <algorithm>
#include <cmath>

#include "genbeta/bell.hpp"
#include "genbeta/cubic.hpp"
#include "genbeta/errors.hpp"
#include "genbeta/power_series.hpp"
#include "genbeta/special_functions.hpp"

namespace genbeta {

namespace {

// Real coefficients with three real roots: Cardano leaves rounding-level
// imaginary parts, which are dropped before a final real Newton step.
SaddleSet classify_real(const CubicRoots& cr, double c3, double c2, double c1, double c0) {
  std::array<double, 3> r{};
  for (int i = 0; i < 3; ++i) {
    const cplx t = cr.roots[i];
    if (std::abs(t.imag()) > 1e-8 * std::max(1.0, std::abs(t))) {
      throw Error(ErrorKind::degenerate_cubic, "saddle cubic has complex roots for these parameters");
    }
    double v = t.real();
    const double d = (3.0 * c3 * v + 2.0 * c2) * v + c1;
    if (d != 0.0) v -= (((c3 * v + c2) * v + c1) * v + c0) / d;
    r[i] = v;
  }
  std::sort(r.begin(), r.end());
  SaddleSet s;
  s.t2 = r[0];
  s.t0 = r[1];
  s.t1 = r[2];
  s.max_polish_step = cr.max_polish_step;
  for (double v : r) s.max_residual = std::max(s.max_residual, std::abs(((c3 * v + c2) * v + c1) * v + c0));
  return s;
}

}  // namespace

SaddleSet solve_saddles_s3(double a) {
  if (!(a > 0.0)) throw Error(ErrorKind::parameter_domain, "fixed-y saddles need a > 0");
  // t^3 - 2t^2 + (1 - a/2) t + a/4
  const double c3 = 1.0, c2 = -2.0, c1 = 1.0 - a / 2.0, c0 = a / 4.0;
  SaddleSet s = classify_real(solve_cubic(c3, c2, c1, c0), c3, c2, c1, c0);
  s.regime = Regime::fixed_y;
  s.a = a;
  return s;
}

SaddleSet solve_saddles_s4(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::parameter_domain, "proportional-y saddles need a > 0 and b > 0");
  // (b+1) t^3 - (b+2) t^2 + (1 - a/2) t + a/4
  const double c3 = b + 1.0, c2 = -(b + 2.0), c1 = 1.0 - a / 2.0, c0 = a / 4.0;
  SaddleSet s = classify_real(solve_cubic(c3, c2, c1, c0), c3, c2, c1, c0);
  s.regime = Regime::proportional_y;
  s.a = a;
  s.b = b;
  return s;
}

LocalSeries local_series(const SaddleSet& saddles, cplx y_or_b, int R) {
  if (R < 0) throw Error(ErrorKind::invalid_argument, "local_series needs R >= 0");
  const cplx t0 = saddles.t0;
  if (std::abs(t0) < 1e-6 || std::abs(1.0 - t0) < 1e-6) {
    throw Error(ErrorKind::radius_violation, "saddle too close to an endpoint singularity");
  }
  using namespace series;
  const std::size_t n = static_cast<std::size_t>(R) + 3;
  const Jet t = variable(t0, n);
  const Jet s = constant(1.0, n) - t;
  const Jet inv_ts = reciprocal(t * s);
  const Jet log_t = log(t);

  Jet psi = (saddles.a / 4.0) * inv_ts - log_t;
  Jet f;
  if (saddles.regime == Regime::fixed_y) {
    f = pow(s, y_or_b - 1.0) * reciprocal(t);
  } else {
    psi = psi - cplx(saddles.b) * log(s);
    f = inv_ts;
  }

  LocalSeries out;
  out.psi_at_saddle = psi[0];
  for (int r = 0; r <= R; ++r) {
    out.a_coeffs.push_back(psi[r + 2]);
    out.b_coeffs.push_back(f[r]);
  }
  const long double tl = t0.real();
  long double ext = static_cast<long double>(saddles.a) / (4.0L * tl * (1.0L - tl)) - std::log(tl);
  if (saddles.regime == Regime::proportional_y) ext -= static_cast<long double>(saddles.b) * std::log(1.0L - tl);
  out.psi_at_saddle_extended = t0.imag() == 0.0 ? ext : static_cast<long double>(psi[0].real());
  return out;
}

double psi2_closed_form_s3(double t0) {
  return (1.0 - 3.0 * t0 + 4.0 * t0 * t0) / (t0 * t0 * (1.0 - t0) * (2.0 * t0 - 1.0));
}

double psi2_closed_form_s4(double t0, double b) {
  return psi2_closed_form_s3(t0) * (1.0 - b * t0 / (1.0 - t0)) + b / (t0 * (1.0 - t0) * (1.0 - t0));
}

WojdyloCoefficients wojdylo_coefficients(const LocalSeries& series, int n0) {
  if (n0 < 0) throw Error(ErrorKind::invalid_argument, "wojdylo_coefficients needs n0 >= 0");
  const int N = 2 * n0;
  if (static_cast<int>(series.a_coeffs.size()) <= N || static_cast<int>(series.b_coeffs.size()) <= N) {
    throw Error(ErrorKind::invalid_argument, "local series too short for the requested depth");
  }
  const cplx a0 = series.a_coeffs[0];
  if (a0 == cplx(0.0, 0.0)) throw Error(ErrorKind::zero_leading_coefficient, "a0 = 0: saddle is not simple");

  const std::vector<cplx> a(series.a_coeffs.begin(), series.a_coeffs.begin() + N + 1);
  const auto B = bell_table(N, a);

  WojdyloCoefficients out;
  out.n0 = n0;
  for (int n = 0; n <= N; ++n) {
    const double h = 0.5 * (n + 1);
    cplx outer = 0.0;
    for (int k = 0; k <= n; ++k) {
      cplx inner = 0.0;
      cplx w = 1.0;  // (-1)^j (h)_j / (j! a0^j)
      for (int j = 0; j <= k; ++j) {
        if (j > 0) w *= -(h + (j - 1)) / (static_cast<double>(j) * a0);
        inner += w * B[k][j];
      }
      outer += series.b_coeffs[n - k] * inner;
    }
    // principal power: continuous from a0 > 0
    out.values.push_back(outer / (2.0 * std::pow(a0, h)));
  }
  return out;
}

namespace {

ExpansionResult steepest_expansion(cplx x, const LocalSeries& ls, int n0) {
  const auto C = wojdylo_coefficients(ls, n0 + 1);
  const cplx inv_x = 1.0 / x;
  cplx sum = 0.0;
  cplx power = 1.0;  // x^{-n}
  for (int n = 0; n <= n0; ++n) {
    sum += C.values[2 * n] * std::tgamma(n + 0.5) * power;
    power *= inv_x;
  }
  const double next = std::abs(C.values[2 * n0 + 2] * std::tgamma(n0 + 1.5) * power);

  // 2 x^{-1/2} e^{-x psi(t0)}, exponent in long double
  const long double psi_re = ls.psi_at_saddle_extended;
  const long double psi_im = ls.psi_at_saddle.imag();
  const long double xr = x.real(), xi = x.imag();
  const long double re = -(xr * psi_re - xi * psi_im) + std::log(2.0L) - 0.5L * std::log(static_cast<long double>(std::abs(x)));
  const long double im = -(xr * psi_im + xi * psi_re) - 0.5L * std::arg(x);

  ExpansionResult out;
  out.value = LogComplex::from_log(re, im) * LogComplex::from_complex(sum);
  out.terms_used = n0 + 1;
  out.error_estimate = next / std::abs(sum);
  return out;
}

void check_sector(cplx x, int n0) {
  if (!(x.real() > 0.0)) throw Error(ErrorKind::sector_violation, "steepest-descent expansion needs |arg x| < pi/2");
  if (n0 < 0) throw Error(ErrorKind::invalid_argument, "n0 must be >= 0");
}

}  // namespace

ExpansionResult expand_s3(cplx x, cplx y, double a, int n0) {
  check_sector(x, n0);
  const auto saddles = solve_saddles_s3(a);
  return steepest_expansion(x, local_series(saddles, y, 2 * n0 + 2), n0);
}

ExpansionResult expand_s4(cplx x, double a, double b, int n0) {
  check_sector(x, n0);
  const auto saddles = solve_saddles_s4(a, b);
  return steepest_expansion(x, local_series(saddles, b, 2 * n0 + 2), n0);
}

}  // namespace genbeta
