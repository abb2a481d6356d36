#include "genbeta/log_complex.hpp"

#include <cmath>

#include "genbeta/errors.hpp"

namespace genbeta {

namespace {

constexpr long double two_pi_l = 6.283185307179586476925286766559005768L;
constexpr double max_log_double = 709.782712893384;   // log(DBL_MAX)
constexpr double min_log_double = -708.396418532264;  // log(DBL_MIN)

}  // namespace

double principal_phase(double phase) noexcept {
  if (!std::isfinite(phase)) return phase;
  double r = std::remainder(phase, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

long double principal_phase(long double phase) noexcept {
  if (!std::isfinite(phase)) return phase;
  long double r = std::remainder(phase, two_pi_l);
  if (r <= -two_pi_l / 2) r += two_pi_l;
  return r;
}

LogComplex::LogComplex(double log_mod, double phase)
    : hi_(log_mod), lo_(0.0), phase_(principal_phase(phase)) {
  if (std::isinf(log_mod) && log_mod < 0) phase_ = 0.0;
}

LogComplex LogComplex::from_log(long double log_mod, long double phase) {
  LogComplex out;
  if (std::isinf(log_mod) && log_mod < 0) return out;
  out.hi_ = static_cast<double>(log_mod);
  out.lo_ = std::isfinite(log_mod) ? static_cast<double>(log_mod - out.hi_) : 0.0;
  out.phase_ = static_cast<double>(principal_phase(phase));
  return out;
}

LogComplex LogComplex::from_log(cplx log_value) {
  return from_log(static_cast<long double>(log_value.real()),
                  static_cast<long double>(log_value.imag()));
}

LogComplex LogComplex::from_complex(cplx z) {
  if (z == cplx(0.0, 0.0)) return LogComplex();
  const long double re = z.real();
  const long double im = z.imag();
  const long double lm = std::log(std::hypot(re, im));
  LogComplex out;
  out.hi_ = static_cast<double>(lm);
  out.lo_ = static_cast<double>(lm - out.hi_);
  out.phase_ = principal_phase(std::atan2(z.imag(), z.real()));
  return out;
}

double LogComplex::log10_mod() const noexcept {
  return static_cast<double>(log_mod_extended() / std::log(10.0L));
}

cplx LogComplex::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  const double mag = std::exp(hi_) * std::exp(lo_);
  return {mag * std::cos(phase_), mag * std::sin(phase_)};
}

bool LogComplex::representable() const noexcept {
  return hi_ < max_log_double && hi_ > min_log_double;
}

LogComplex LogComplex::conj() const noexcept {
  LogComplex out = *this;
  if (!is_zero() && phase_ != pi) out.phase_ = -phase_;
  return out;
}

LogComplex LogComplex::operator-() const noexcept {
  LogComplex out = *this;
  if (!is_zero()) out.phase_ = principal_phase(phase_ + pi);
  return out;
}

LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() || b.is_zero()) return LogComplex();
  return LogComplex::from_log(a.log_mod_extended() + b.log_mod_extended(),
                              static_cast<long double>(a.phase_) + b.phase_);
}

LogComplex operator/(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "LogComplex division by zero");
  if (a.is_zero()) return LogComplex();
  return LogComplex::from_log(a.log_mod_extended() - b.log_mod_extended(),
                              static_cast<long double>(a.phase_) - b.phase_);
}

LogComplex operator+(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogComplex& big = a.hi_ >= b.hi_ ? a : b;
  const LogComplex& small = a.hi_ >= b.hi_ ? b : a;
  const cplx r = ratio(small, big);
  const cplx s = 1.0 + r;
  if (s == cplx(0.0, 0.0)) return LogComplex();
  return big * LogComplex::from_complex(s);
}

LogComplex operator-(const LogComplex& a, const LogComplex& b) {
  if (a.hi_ == b.hi_ && a.lo_ == b.lo_ && a.phase_ == b.phase_) return LogComplex();
  return a + (-b);
}

cplx ratio(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "ratio with zero denominator");
  if (a.is_zero()) return {0.0, 0.0};
  const long double dl = a.log_mod_extended() - b.log_mod_extended();
  const long double dp = static_cast<long double>(a.phase_) - b.phase_;
  const long double mag = std::exp(dl);
  return {static_cast<double>(mag * std::cos(dp)), static_cast<double>(mag * std::sin(dp))};
}

double relative_difference(const LogComplex& a, const LogComplex& b) {
  return std::abs(ratio(a, b) - 1.0);
}

}  // namespace genbeta
