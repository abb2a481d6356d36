#pragma once

#include <cstddef>
#include <vector>

#include "genbeta/errors.hpp"
#include "genbeta/log_complex.hpp"

namespace genbeta::series {

/// Truncated Taylor series c_0 + c_1 h + ... + c_{n-1} h^{n-1}. All
/// operands of one computation share the same length.
using Jet = std::vector<cplx>;

inline Jet constant(cplx c, std::size_t n) {
  Jet r(n, 0.0);
  r[0] = c;
  return r;
}

/// c + h
inline Jet variable(cplx c, std::size_t n) {
  Jet r = constant(c, n);
  if (n > 1) r[1] = 1.0;
  return r;
}

inline Jet operator+(Jet a, const Jet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Jet operator-(Jet a, const Jet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Jet operator*(cplx s, Jet a) {
  for (auto& c : a) c *= s;
  return a;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Jet reciprocal(const Jet& a) {
  if (a[0] == cplx(0.0, 0.0)) throw Error(ErrorKind::radius_violation, "reciprocal of a series vanishing at h = 0");
  Jet r(a.size(), 0.0);
  r[0] = 1.0 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    cplx s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s * r[0];
  }
  return r;
}

/// Principal log of the constant term plus the series of log(1 + ...).
inline Jet log(const Jet& a) {
  if (a[0] == cplx(0.0, 0.0)) throw Error(ErrorKind::radius_violation, "log of a series vanishing at h = 0");
  const std::size_t n = a.size();
  Jet r(n, 0.0);
  r[0] = std::log(a[0]);
  // n r_n a_0 = n a_n - sum_{k=1}^{n-1} k r_k a_{n-k}
  for (std::size_t m = 1; m < n; ++m) {
    cplx s = static_cast<double>(m) * a[m];
    for (std::size_t k = 1; k < m; ++k) s -= static_cast<double>(k) * r[k] * a[m - k];
    r[m] = s / (static_cast<double>(m) * a[0]);
  }
  return r;
}

/// a^alpha with the principal power of the constant term.
inline Jet pow(const Jet& a, cplx alpha) {
  if (a[0] == cplx(0.0, 0.0)) throw Error(ErrorKind::radius_violation, "power of a series vanishing at h = 0");
  const std::size_t n = a.size();
  Jet r(n, 0.0);
  r[0] = std::pow(a[0], alpha);
  // m a_0 r_m = sum_{k=1}^{m} ((alpha + 1) k - m) a_k r_{m-k}
  for (std::size_t m = 1; m < n; ++m) {
    cplx s = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
      s += ((alpha + 1.0) * static_cast<double>(k) - static_cast<double>(m)) * a[k] * r[m - k];
    }
    r[m] = s / (static_cast<double>(m) * a[0]);
  }
  return r;
}

}  // namespace genbeta::series
