#include "genbeta/reference_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "genbeta/errors.hpp"
#include "genbeta/extended.hpp"
#include "genbeta/quadrature.hpp"
#include "genbeta/special_functions.hpp"

namespace genbeta {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 1e-30 && rel_tol < 1e-3)) {
    throw Error(ErrorKind::invalid_argument, "rel_tol must lie in (1e-30, 1e-3)");
  }
  if (rel_tol < 1e-14 && working_precision != Precision::extended) {
    throw Error(ErrorKind::invalid_argument, "rel_tol below 1e-14 needs extended working precision");
  }
  if (max_subdivisions < 16) throw Error(ErrorKind::invalid_argument, "max_subdivisions too small");
}

namespace {

// Maximum of Re log(integrand) over (0,1), sampled on a logistic grid so
// that peaks crowded against either endpoint are still seen.
double peak_log_integrand(const Parameters& prm) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 1600; ++i) {
    const double u = -40.0 + 80.0 * i / 1600.0;
    const double t = 1.0 / (1.0 + std::exp(-u));
    const double s = 1.0 / (1.0 + std::exp(u));
    const double r = (prm.x.real() - 1.0) * std::log(t) + (prm.y.real() - 1.0) * std::log(s) -
                     prm.p.real() / (4.0 * t * s);
    best = std::max(best, r);
  }
  return best;
}

double peak_log_integrand_beta(const Parameters& prm) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < 1600; ++i) {
    const double u = (pi / 2) * i / 1600.0;
    const double r = (2.0 * prm.x.real() - 1.0) * std::log(std::sin(u)) +
                     (2.0 * prm.y.real() - 1.0) * std::log(std::cos(u));
    best = std::max(best, r);
  }
  return best;
}

template <class Real>
OracleValue euler_quadrature(const Parameters& prm, const QuadratureConfig& cfg) {
  using std::atan2;
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  using quadrature::Node;
  using quadrature::Value;

  const Real xr = prm.x.real(), xi = prm.x.imag();
  const Real yr = prm.y.real(), yi = prm.y.imag();
  const Real pr = prm.p.real(), pim = prm.p.imag();
  const bool classical = prm.p == cplx(0.0, 0.0);

  const double shift_d = classical ? peak_log_integrand_beta(prm) : peak_log_integrand(prm);
  const Real shift = shift_d;

  std::vector<Real> breaks;
  const double size = std::abs(prm.x) + std::abs(prm.y);
  const int n = std::min(16 + 4 * static_cast<int>(std::ceil(size)), cfg.max_subdivisions / 2);
  const Real upper = classical ? boost::math::constants::half_pi<Real>() : Real{1};
  for (int i = 0; i <= n; ++i) breaks.push_back(upper * Real(i) / Real(n));
  breaks.back() = upper;

  const Real two{2}, four{4}, one{1};
  const Real log_two = log(two);

  auto integrand = [&](const Node<Real>& node) -> Value<Real> {
    Real re, im;
    if (classical) {
      // t = sin^2 u, dt = 2 sin u cos u du
      const Real ls = log(sin(node.from_left));
      const Real lc = log(sin(node.from_right));
      re = log_two + (two * xr - one) * ls + (two * yr - one) * lc;
      im = two * xi * ls + two * yi * lc;
    } else {
      const Real t = node.from_left;
      const Real s = node.from_right;
      const Real lt = log(t);
      const Real ls = log(s);
      const Real q = one / (four * t * s);
      re = (xr - one) * lt + (yr - one) * ls - pr * q;
      im = xi * lt + yi * ls - pim * q;
    }
    const Real mag = exp(re - shift);
    if (mag == 0) return {};
    return {mag * cos(im), mag * sin(im)};
  };

  quadrature::Settings<Real> settings{Real(cfg.rel_tol), Real{0}, cfg.max_subdivisions};
  const auto res = quadrature::adaptive_gk21<Real>(integrand, breaks, settings);
  const Real modulus = res.value.abs();
  if (modulus == 0) throw Error(ErrorKind::non_convergence, "Euler integral evaluated to zero");
  const double rel_err = static_cast<double>(res.abs_error / modulus);
  if (!res.converged && rel_err > 10.0 * cfg.rel_tol) {
    throw Error(ErrorKind::non_convergence,
                "Euler quadrature stopped at relative error " + std::to_string(rel_err));
  }
  OracleValue out;
  out.value = LogComplex::from_log(static_cast<long double>(shift + log(modulus)),
                                   static_cast<long double>(atan2(res.value.im, res.value.re)));
  out.rel_error = rel_err;
  out.panels = res.panels;
  return out;
}

}  // namespace

OracleValue b_euler(const Parameters& params, const QuadratureConfig& cfg) {
  cfg.validate();
  const bool classical = params.p == cplx(0.0, 0.0);
  if (classical) {
    if (!(params.x.real() > 0.0 && params.y.real() > 0.0)) {
      throw Error(ErrorKind::parameter_domain, "p = 0 needs Re x > 0 and Re y > 0");
    }
  } else if (!(params.p.real() > 0.0)) {
    throw Error(ErrorKind::parameter_domain, "Euler integral needs Re p > 0");
  }
  if (cfg.working_precision == Precision::extended) return euler_quadrature<quad>(params, cfg);
  return euler_quadrature<double>(params, cfg);
}

OracleValue b_euler_complex_x(double xmod, double theta, cplx y, double p, const QuadratureConfig& cfg) {
  if (!(p > 0.0)) throw Error(ErrorKind::parameter_domain, "b_euler_complex_x needs p > 0");
  if (!(xmod > 0.0)) throw Error(ErrorKind::parameter_domain, "b_euler_complex_x needs |x| > 0");
  if (theta < 0.0 || theta > pi) throw Error(ErrorKind::parameter_domain, "theta must lie in [0, pi]");
  const cplx x = std::polar(xmod, theta);
  // B(x,y;p) = B(y,x;p): integrate t^{y-1} (1-t)^{x-1} exp[-p/(4t(1-t))]
  return b_euler(Parameters{y, x, cplx(p, 0.0)}, cfg);
}

MBContour default_contour(const Parameters& params) {
  MBContour c;
  c.c = std::max({1.0, 1.0 - params.x.real(), 1.0 - params.y.real()});
  return c;
}

OracleValue b_mellin_barnes(const Parameters& params, const MBContour& contour, double rel_tol) {
  const cplx x = params.x, y = params.y, p = params.p;
  if (!(p.real() > 0.0)) throw Error(ErrorKind::sector_violation, "Mellin-Barnes form needs |arg p| < pi/2");
  if (!(contour.c > std::max({0.0, -x.real(), -y.real()}))) {
    throw Error(ErrorKind::contour_too_low, "contour must lie right of every pole");
  }
  if (contour.nodes < 2) throw Error(ErrorKind::invalid_argument, "contour needs at least 2 nodes");
  if (!(rel_tol > 0.0 && rel_tol < 1e-3)) throw Error(ErrorKind::invalid_argument, "rel_tol out of range");

  const cplx h = 0.5 * (x + y);
  const cplx log_p = std::log(p);
  auto phi = [&](double tau) {
    const cplx s(contour.c, tau);
    return log_gamma(s) + log_gamma(x + s) + log_gamma(y + s) - log_gamma(h + s) - log_gamma(h + 0.5 + s) -
           s * log_p;
  };

  // Peak of |integrand| along the line.
  double peak = phi(0.0).real();
  for (double tau = 0.25; tau < 200.0; tau += 0.25) {
    const double r = std::max(phi(tau).real(), phi(-tau).real());
    peak = std::max(peak, r);
    if (r < peak - 60.0) break;
  }
  const double cutoff = peak + std::log(rel_tol) - 5.0;

  double height = contour.half_height;
  if (height <= 0.0) {
    height = 1.0;
    while (std::max(phi(height).real(), phi(-height).real()) > cutoff) {
      height += 1.0;
      if (height > 1e4) throw Error(ErrorKind::truncation_insufficient, "integrand does not decay on the line");
    }
  } else if (std::max(phi(height).real(), phi(-height).real()) > peak + std::log(rel_tol)) {
    throw Error(ErrorKind::truncation_insufficient, "contour half-height leaves a non-negligible tail");
  }

  auto f = [&](double tau) { return std::exp(phi(tau) - peak); };

  // Trapezoid sums with doubling; the endpoint values are negligible.
  int n = contour.nodes;
  double step = 2.0 * height / n;
  cplx sum = 0.5 * (f(-height) + f(height));
  for (int k = 1; k < n; ++k) sum += f(-height + k * step);
  cplx estimate = sum * step;
  double rel_err = 1.0;
  for (int round = 0; round < 14; ++round) {
    cplx mids = 0.0;
    for (int k = 0; k < n; ++k) mids += f(-height + (k + 0.5) * step);
    sum += mids;
    n *= 2;
    step *= 0.5;
    const cplx refined = sum * step;
    rel_err = std::abs(refined - estimate) / std::abs(refined);
    estimate = refined;
    if (rel_err <= rel_tol) break;
  }
  if (rel_err > rel_tol) throw Error(ErrorKind::non_convergence, "Mellin-Barnes trapezoid sums did not settle");

  // (1/2 pi i) ds = (1/2 pi) d tau
  const cplx log_prefactor = (1.0 - x - y) * std::log(2.0) + 0.5 * std::log(pi) - std::log(2.0 * pi);
  OracleValue out;
  out.value = LogComplex::from_log(log_prefactor + peak) * LogComplex::from_complex(estimate);
  out.rel_error = rel_err;
  out.panels = n;
  return out;
}

}  // namespace genbeta
