#pragma once

#include <complex>
#include <limits>

namespace genbeta {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Reduce an angle to the principal range (-pi, pi].
double principal_phase(double phase) noexcept;
long double principal_phase(long double phase) noexcept;

/// Complex number held as (log|z|, arg z) so that magnitudes such as 1e+77
/// or 1e-500 survive products and quotients.
///
/// The log-modulus is kept as an unevaluated sum hi + lo of two doubles, which
/// makes the representation accurate to a few ulp of |z| even when log|z| is
/// in the hundreds. The phase is always principal, (-pi, pi]. Zero is the
/// value with log_mod = -inf; it absorbs multiplication.
class LogComplex {
 public:
  LogComplex() = default;  // zero

  LogComplex(double log_mod, double phase);

  static LogComplex zero() { return LogComplex(); }
  static LogComplex from_complex(cplx z);
  /// exp(log_value), with the imaginary part taken as the phase.
  static LogComplex from_log(cplx log_value);
  static LogComplex from_log(long double log_mod, long double phase);

  double log_mod() const noexcept { return hi_; }
  double log_mod_lo() const noexcept { return lo_; }
  long double log_mod_extended() const noexcept {
    return static_cast<long double>(hi_) + static_cast<long double>(lo_);
  }
  double phase() const noexcept { return phase_; }
  bool is_zero() const noexcept { return hi_ == -std::numeric_limits<double>::infinity(); }

  /// log10 |z|
  double log10_mod() const noexcept;

  /// Ordinary complex value; overflows to inf / underflows to 0 outside the
  /// double range.
  cplx to_complex() const;
  /// True when to_complex() neither overflows nor flushes to zero.
  bool representable() const noexcept;

  LogComplex conj() const noexcept;
  LogComplex operator-() const noexcept;

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b);
  friend LogComplex operator/(const LogComplex& a, const LogComplex& b);
  friend LogComplex operator+(const LogComplex& a, const LogComplex& b);
  /// Exactly zero when both operands are identical.
  friend LogComplex operator-(const LogComplex& a, const LogComplex& b);

  LogComplex& operator*=(const LogComplex& o) { return *this = *this * o; }
  LogComplex& operator/=(const LogComplex& o) { return *this = *this / o; }
  LogComplex& operator+=(const LogComplex& o) { return *this = *this + o; }

  /// a / b as an ordinary complex number; accurate when |a| and |b| are of
  /// comparable size regardless of how large either is.
  friend cplx ratio(const LogComplex& a, const LogComplex& b);

 private:
  double hi_ = -std::numeric_limits<double>::infinity();
  double lo_ = 0.0;
  double phase_ = 0.0;
};

/// |a - b| / |b| computed without leaving log space.
double relative_difference(const LogComplex& a, const LogComplex& b);

}  // namespace genbeta
