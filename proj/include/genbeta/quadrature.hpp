#pragma once

// Globally adaptive 21-point Gauss-Kronrod integration of complex-valued
// integrands, generic over the working real type (double, long double,
// float128). Node and weight tables come from Boost.Math; the subdivision
// strategy and error heuristic follow QUADPACK's QAG.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace genbeta::quadrature {

template <class Real>
struct Value {
  Real re{0};
  Real im{0};

  Value& operator+=(const Value& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(const Value& a, const Value& b) { return {a.re - b.re, a.im - b.im}; }
  friend Value operator*(const Real& s, const Value& v) { return {s * v.re, s * v.im}; }

  Real abs() const {
    using std::sqrt;
    return sqrt(re * re + im * im);
  }
};

/// Abscissa together with its distances to the two ends of the whole
/// integration range. The distances are formed without cancellation, so an
/// integrand can use from_right in place of (1 - x) near x = 1.
template <class Real>
struct Node {
  Real x;
  Real from_left;
  Real from_right;
};

template <class Real>
struct Settings {
  Real rel_tol;
  Real abs_tol{0};
  int max_subdivisions = 4000;
};

template <class Real>
struct Result {
  Value<Real> value;
  Real abs_error{0};
  Real l1_norm{0};
  int panels = 0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

template <class Real>
struct Panel {
  Real a, b;          // endpoints
  Real a_off, b_off;  // a - lower, upper - b
  Value<Real> value;
  Real error;
  Real resabs;
  bool floored;

  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class Real, class F>
Panel<Real> evaluate_panel(F& f, Real a, Real b, Real a_off, Real b_off) {
  using std::abs;
  using std::pow;
  using GK = boost::math::quadrature::gauss_kronrod<Real, 21>;
  using G = boost::math::quadrature::gauss<Real, 10>;
  const auto& xk = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();

  const Real half = (b - a) / 2;
  const Real center = a + half;
  const Real one{1};

  Value<Real> fv[21];
  Real wkr[21];
  fv[0] = f(Node<Real>{center, a_off + half, b_off + half});
  wkr[0] = wk[0];
  Value<Real> kron = wk[0] * fv[0];
  Value<Real> gauss{};
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const Real dx = half * xk[i];
    const Real near = half * (one - xk[i]);
    const Real far = half * (one + xk[i]);
    const Value<Real> lo = f(Node<Real>{center - dx, a_off + near, b_off + far});
    const Value<Real> hi = f(Node<Real>{center + dx, a_off + far, b_off + near});
    fv[2 * i - 1] = lo;
    fv[2 * i] = hi;
    wkr[2 * i - 1] = wk[i];
    wkr[2 * i] = wk[i];
    kron += wk[i] * (lo + hi);
    if (i % 2 == 1) gauss += wg[(i - 1) / 2] * (lo + hi);
  }

  Panel<Real> p{a, b, a_off, b_off, half * kron, Real{0}, Real{0}, false};
  const Value<Real> mean{kron.re / 2, kron.im / 2};
  Real resabs{0};
  Real resasc{0};
  for (int i = 0; i < 21; ++i) {
    resabs += wkr[i] * fv[i].abs();
    resasc += wkr[i] * (fv[i] - mean).abs();
  }
  resabs *= abs(half);
  resasc *= abs(half);
  Real err = (half * (kron - gauss)).abs();
  if (resasc != 0 && err != 0) {
    const Real scaled = pow(Real{200} * err / resasc, Real{1.5});
    err = resasc * (scaled < one ? scaled : one);
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real floor = 50 * eps * resabs;
  if (err <= floor) {
    err = floor;
    p.floored = true;
  }
  p.error = err;
  p.resabs = resabs;
  return p;
}

}  // namespace detail

/// Integrate f over [breakpoints.front(), breakpoints.back()], starting from
/// the panels the breakpoints define and bisecting the worst panel until the
/// summed error estimate is below max(abs_tol, rel_tol * |I|).
template <class Real, class F>
Result<Real> adaptive_gk21(F&& f, const std::vector<Real>& breakpoints, const Settings<Real>& settings) {
  using std::abs;
  using Panel = detail::Panel<Real>;
  Result<Real> out;
  if (breakpoints.size() < 2) return out;
  const Real lower = breakpoints.front();
  const Real upper = breakpoints.back();

  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(settings.max_subdivisions) + breakpoints.size());
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const Real a = breakpoints[i];
    const Real b = breakpoints[i + 1];
    heap.push_back(detail::evaluate_panel(f, a, b, a - lower, upper - b));
  }
  std::make_heap(heap.begin(), heap.end());
  out.evaluations = 21 * static_cast<int>(heap.size());

  auto resum = [&heap](Value<Real>& value, Real& error) {
    value = Value<Real>{};
    error = Real{0};
    for (const Panel& p : heap) {
      value += p.value;
      error += p.error;
    }
  };

  const Real eps = std::numeric_limits<Real>::epsilon();
  Value<Real> value;
  Real error;
  resum(value, error);
  while (true) {
    const Real target = std::max(settings.abs_tol, settings.rel_tol * value.abs());
    if (error <= target) {
      out.converged = true;
      break;
    }
    if (static_cast<int>(heap.size()) >= settings.max_subdivisions) break;
    const Panel& worst = heap.front();
    if (worst.floored) break;  // every remaining panel sits at the roundoff floor
    if (abs(worst.b - worst.a) <= 4 * eps * (abs(worst.a) + abs(worst.b))) break;

    std::pop_heap(heap.begin(), heap.end());
    const Panel split = heap.back();
    heap.pop_back();
    const Real mid = split.a + (split.b - split.a) / 2;
    Panel left = detail::evaluate_panel(f, split.a, mid, split.a_off, split.b_off + (split.b - mid));
    Panel right = detail::evaluate_panel(f, mid, split.b, split.a_off + (mid - split.a), split.b_off);
    out.evaluations += 42;
    value = value - split.value + left.value + right.value;
    error = error - split.error + left.error + right.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
  resum(value, error);

  Real l1{0};
  for (const Panel& p : heap) l1 += p.resabs;
  out.value = value;
  out.abs_error = error;
  out.l1_norm = l1;
  out.panels = static_cast<int>(heap.size());
  return out;
}

}  // namespace genbeta::quadrature
