#include "genbeta/special_functions.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "genbeta/errors.hpp"
#include "genbeta/quadrature.hpp"

namespace genbeta {

namespace {

const double half_log_two_pi = 0.5 * std::log(2.0 * pi);

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi z) with the integer part of Re z removed first, so rounding of
// pi z does not spoil the result next to the zeros.
cplx sin_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx s = std::sin(pi * cplx(z.real() - n, z.imag()));
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

// log sin(pi z) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  const cplx i(0.0, 1.0);
  if (std::abs(z.imag()) < 6.0) return std::log(sin_pi(z));
  const double n = std::round(z.real());
  const cplx w = pi * cplx(z.real() - n, z.imag());
  const cplx sign_log = std::fmod(n, 2.0) == 0.0 ? cplx(0.0) : cplx(0.0, pi);
  if (w.imag() > 0.0) return sign_log - i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(cplx(0.0, 0.5));
  return sign_log + i * w + std::log(1.0 - std::exp(-2.0 * i * w)) + std::log(cplx(0.0, -0.5));
}

// Stirling series for Re z >= 1/2, after shifting z upward until |z| >= 15.
// Ten Bernoulli terms leave a truncation error below 1e-19 there.
cplx stirling_log_gamma(cplx z) {
  static constexpr std::array<double, 10> bernoulli_terms = {
      1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,          -1.0 / 1680.0,
      1.0 / 1188.0,         -691.0 / 360360.0,     1.0 / 156.0,           -3617.0 / 122400.0,
      43867.0 / 244188.0,   -174611.0 / 125400.0};
  cplx shift_log = 0.0;
  while (std::abs(z) < 15.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  for (auto it = bernoulli_terms.rbegin(); it != bernoulli_terms.rend(); ++it) series = series * inv2 + *it;
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series * inv - shift_log;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::gamma_pole, "log_gamma at non-positive integer");
  if (z.real() < 0.5) return std::log(pi) - log_sin_pi(z) - stirling_log_gamma(1.0 - z);
  return stirling_log_gamma(z);
}

cplx complex_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::gamma_pole, "complex_gamma at non-positive integer");
  if (z.real() < 0.5 && std::abs(z.imag()) < 300.0) {
    return pi / (sin_pi(z) * std::exp(stirling_log_gamma(1.0 - z)));
  }
  return std::exp(log_gamma(z));
}

cplx pochhammer(cplx a, int j) {
  if (j < 0) throw Error(ErrorKind::invalid_argument, "pochhammer with negative order");
  cplx prod = 1.0;
  for (int k = 0; k < j; ++k) prod *= a + static_cast<double>(k);
  return prod;
}

cplx hyp3f2_terminating(int j, cplx upper2, cplx upper3, cplx lower1, cplx lower2) {
  if (j < 0) throw Error(ErrorKind::invalid_argument, "hyp3f2_terminating with negative j");
  // Alternating terms cancel for larger j; the extra bits of long double
  // keep the sum accurate to double precision.
  using lcplx = std::complex<long double>;
  const lcplx u2(upper2), u3(upper3), l1(lower1), l2(lower2);
  lcplx term = 1.0L;
  lcplx sum = 1.0L;
  for (int k = 0; k < j; ++k) {
    const long double kk = k;
    const lcplx num = (kk - j) * (u2 + kk) * (u3 + kk);
    if (num == lcplx(0.0L, 0.0L) || term == lcplx(0.0L, 0.0L)) break;
    const lcplx den = (kk + 1.0L) * (l1 + kk) * (l2 + kk);
    if (den == lcplx(0.0L, 0.0L)) throw Error(ErrorKind::lower_parameter_pole, "3F2 lower parameter hits a pole");
    term *= num / den;
    sum += term;
  }
  return cplx(sum);
}

LogComplex whittaker_w(cplx kappa, cplx mu, cplx z) {
  if (!(z.real() > 0.0)) throw Error(ErrorKind::parameter_domain, "whittaker_w needs Re z > 0");
  const cplx a1 = mu - kappa + 0.5;  // exponent of t, plus one
  if (!(a1.real() > 0.0)) {
    throw Error(ErrorKind::parameter_domain, "whittaker_w needs Re(mu - kappa + 1/2) > 0");
  }
  const cplx b = mu + kappa - 0.5;  // exponent of (1 + t)

  // t = e^v:  integrand exp(phi(v)),  phi = -z e^v + (a+1) v + b log(1 + e^v)
  auto log1pexp = [](double v) { return v > 30.0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v)); };
  auto phi = [&](double v) { return -z * std::exp(v) + a1 * v + b * log1pexp(v); };
  auto re_phi = [&](double v) { return phi(v).real(); };

  // Locate the peak of Re phi, then walk out until the integrand is below
  // e^-80 of it on both sides.
  double v_peak = std::log(std::max(a1.real(), 1e-3) / z.real());
  double best = re_phi(v_peak);
  for (double step : {0.5, 0.1, 0.02, 0.004}) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (double cand : {v_peak - step, v_peak + step}) {
        const double r = re_phi(cand);
        if (r > best) {
          best = r;
          v_peak = cand;
          moved = true;
        }
      }
    }
  }
  constexpr double drop = 80.0;
  double lo = v_peak;
  for (double step = 0.25; re_phi(lo) > best - drop; step *= 1.3) lo -= step;
  double hi = v_peak;
  for (double step = 0.25; re_phi(hi) > best - drop; step *= 1.3) hi += step;

  std::vector<double> breaks;
  constexpr int panels = 24;
  for (int i = 0; i <= panels; ++i) breaks.push_back(lo + (hi - lo) * i / panels);

  auto integrand = [&](const quadrature::Node<double>& n) {
    const cplx e = std::exp(phi(n.x) - best);
    return quadrature::Value<double>{e.real(), e.imag()};
  };
  const auto res = quadrature::adaptive_gk21<double>(integrand, breaks, {1e-14, 0.0, 4000});
  if (!res.converged && res.abs_error > 1e-10 * res.value.abs()) {
    throw Error(ErrorKind::non_convergence, "whittaker_w quadrature did not converge");
  }
  const cplx integral(res.value.re, res.value.im);
  const cplx log_w = (mu + 0.5) * std::log(z) - 0.5 * z - log_gamma(a1) + best + std::log(integral);
  return LogComplex::from_log(log_w);
}

}  // namespace genbeta
