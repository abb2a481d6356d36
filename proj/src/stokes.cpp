#include "genbeta/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "genbeta/cubic.hpp"
#include "genbeta/errors.hpp"

namespace genbeta {

namespace {

constexpr double max_continuation_step = 0.0025 * pi;
constexpr int scan_points = 4000;

std::array<cplx, 3> cubic_roots(double alpha, double theta) {
  const cplx ap = alpha * std::polar(1.0, -theta);
  return solve_cubic(1.0, -1.0, -2.0 * ap, ap).roots;
}

double cubic_residual(double alpha, double theta, cplx t) {
  const cplx ap = alpha * std::polar(1.0, -theta);
  return std::abs(((t - 1.0) * t - 2.0 * ap) * t + ap);
}

std::array<cplx, 3> initial_saddles(double alpha) {
  auto r = cubic_roots(alpha, 0.0);
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  return {r[1], r[2], r[0]};
}

// One matching step; false if the nearest-root assignment is not clear cut.
bool match_step(double alpha, double theta, std::array<cplx, 3>& s) {
  const auto r = cubic_roots(alpha, theta);
  std::array<cplx, 3> next{};
  std::array<bool, 3> used{};
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> d{};
    for (int j = 0; j < 3; ++j) d[j] = std::abs(r[j] - s[i]);
    const int best = static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin());
    double second = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 3; ++j) {
      if (j != best) second = std::min(second, d[j]);
    }
    if (used[best] || d[best] > 0.5 * second) return false;
    used[best] = true;
    next[i] = r[best];
  }
  s = next;
  return true;
}

std::array<cplx, 3> continue_saddles(double alpha, double from, std::array<cplx, 3> s, double to) {
  double theta = from;
  double step = max_continuation_step;
  while (theta != to) {
    const double target = std::abs(to - theta) <= step ? to : theta + std::copysign(step, to - theta);
    auto trial = s;
    if (match_step(alpha, target, trial)) {
      s = trial;
      theta = target;
      step = std::min(2.0 * step, max_continuation_step);
    } else {
      step *= 0.5;
      if (step < 1e-10) throw Error(ErrorKind::continuation_jump, "saddle labels cannot be continued in theta");
    }
  }
  return s;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::parameter_domain, "alpha must be positive");
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= pi)) throw Error(ErrorKind::parameter_domain, "theta must lie in [0, pi]");
}

void check_saddle_index(int idx) {
  if (idx != 0 && idx != 1) throw Error(ErrorKind::invalid_argument, "saddle index must be 0 or 1");
}

double wrap_step(double d) {
  if (d > pi) d -= 2.0 * pi;
  if (d < -pi) d += 2.0 * pi;
  return d;
}

double re_psi_continued(double alpha, double theta, cplx t, double arg_one) {
  const cplx L(std::log(std::abs(1.0 - t)), arg_one);
  return (alpha / (t * (1.0 - t)) - std::polar(1.0, theta) * L).real();
}

PathTrace trace_one(double alpha, double theta, const std::array<cplx, 3>& s, int idx, int sign, bool descent) {
  const cplx t0 = s[idx];
  const int other = 1 - idx;
  const cplx o = s[other];
  const double sep = std::abs(t0 - o);
  const double orient = descent ? 1.0 : -1.0;

  const cplx pp = stokes_d2psi(alpha, theta, t0);
  cplx dir = std::polar(1.0, -0.5 * std::arg(pp)) * static_cast<double>(sign);
  if (!descent) dir *= cplx(0.0, 1.0);

  auto velocity = [&](cplx t) {
    const cplx g = stokes_dpsi(alpha, theta, t);
    const double m = std::abs(g);
    if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorKind::step_failure, "psi' vanishes or is singular on the path");
    return orient * std::conj(g) / m;
  };

  PathTrace out;
  out.direction_sign = sign;
  out.descent = descent;
  cplx t = t0 + dir * (1e-3 * sep);
  double arg_one = std::arg(1.0 - t);
  out.points = {t0, t};
  out.re_psi = {re_psi_continued(alpha, theta, t0, std::arg(1.0 - t0)), re_psi_continued(alpha, theta, t, arg_one)};

  for (int it = 0; it < 400000; ++it) {
    double h = 0.02 * std::min({std::abs(t), std::abs(1.0 - t), 1.0});
    h = std::min(h, std::max(0.02 * std::abs(t - o), 1e-6));
    if (h < 1e-12) throw Error(ErrorKind::step_failure, "path step collapsed");

    const cplx k1 = velocity(t);
    const cplx k2 = velocity(t + 0.5 * h * k1);
    const cplx k3 = velocity(t + 0.5 * h * k2);
    const cplx k4 = velocity(t + h * k3);
    const cplx tn = t + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    arg_one += wrap_step(std::arg(1.0 - tn) - std::arg(1.0 - t));
    t = tn;
    out.points.push_back(t);
    out.re_psi.push_back(re_psi_continued(alpha, theta, t, arg_one));
    out.final_arg_one = arg_one;

    if (std::abs(t) < 1e-4) {
      out.terminus = std::abs(std::arg(t)) < 0.5 * pi ? Terminus::origin : Terminus::origin_left;
      return out;
    }
    if (std::abs(1.0 - t) < 1e-4) {
      out.terminus = std::abs(arg_one) < 0.5 * pi ? Terminus::one : Terminus::one_adjacent_sheet;
      return out;
    }
    if (std::abs(arg_one) > 3.0 * pi || std::abs(t) > 1e3) {
      out.terminus = Terminus::spiral_infinity;
      return out;
    }
    if (std::abs(t - o) < 1e-3 * sep) {
      out.terminus = Terminus::other_saddle;
      out.other_saddle = other;
      return out;
    }
  }
  throw Error(ErrorKind::step_failure, "path did not reach a terminus");
}

std::pair<PathTrace, PathTrace> trace_pair(double alpha, double theta, int idx, bool descent) {
  check_alpha(alpha);
  check_theta(theta);
  check_saddle_index(idx);
  const auto s = saddles_complex(alpha, theta).t;
  return {trace_one(alpha, theta, s, idx, +1, descent), trace_one(alpha, theta, s, idx, -1, descent)};
}

cplx psi_difference(double alpha, double theta, const std::array<cplx, 3>& s) {
  return stokes_psi(alpha, theta, s[0]) - stokes_psi(alpha, theta, s[1]);
}

// Zeros of one component of psi(t0) - psi(t1) along the scan. Jumps of the
// principal log show up as sign changes too; they are rejected because the
// bisected bracket keeps a finite gap.
template <class Part>
std::vector<double> scan_zeros(double alpha, const std::vector<double>& grid,
                               const std::vector<std::array<cplx, 3>>& saddles, Part part) {
  std::vector<double> zeros;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double va = part(psi_difference(alpha, grid[k - 1], saddles[k - 1]));
    const double vb = part(psi_difference(alpha, grid[k], saddles[k]));
    if ((va < 0.0) == (vb < 0.0)) continue;
    double lo = grid[k - 1], hi = grid[k];
    double flo = va, fhi = vb;
    while (hi - lo > 1e-12 * pi) {
      const double mid = 0.5 * (lo + hi);
      const double fm = part(psi_difference(alpha, mid, continue_saddles(alpha, grid[k - 1], saddles[k - 1], mid)));
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
        fhi = fm;
      }
    }
    if (std::abs(fhi - flo) < 1e-6) zeros.push_back(0.5 * (lo + hi));
  }
  return zeros;
}

std::vector<Terminus> descent_termini(double alpha, double theta) {
  const auto d = trace_descent(alpha, theta, 0);
  return {d.first.terminus, d.second.terminus};
}

}  // namespace

PhaseConfig PhaseConfig::make(double xmod, double theta, cplx y, double p) {
  if (!(xmod > 0.0) || !std::isfinite(xmod)) throw Error(ErrorKind::parameter_domain, "|x| must be positive");
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(ErrorKind::parameter_domain, "p must be positive");
  check_theta(theta);
  PhaseConfig c;
  c.alpha = p / (4.0 * xmod);
  c.theta = theta;
  c.xmod = xmod;
  c.y = y;
  c.p = p;
  return c;
}

cplx stokes_psi(double alpha, double theta, cplx t) {
  return alpha / (t * (1.0 - t)) - std::polar(1.0, theta) * std::log(1.0 - t);
}

cplx stokes_dpsi(double alpha, double theta, cplx t) {
  const cplx s = 1.0 - t;
  return alpha * (2.0 * t - 1.0) / (t * t * s * s) + std::polar(1.0, theta) / s;
}

cplx stokes_d2psi(double alpha, double theta, cplx t) {
  const cplx s = 1.0 - t;
  const cplx u = 2.0 * t - 1.0;
  return alpha * (2.0 / (t * t * s * s) - 2.0 * u / (t * t * t * s * s) + 2.0 * u / (t * t * s * s * s)) +
         std::polar(1.0, theta) / (s * s);
}

ComplexSaddles saddles_complex(double alpha, double theta) {
  check_alpha(alpha);
  check_theta(theta);
  ComplexSaddles out;
  out.t = continue_saddles(alpha, 0.0, initial_saddles(alpha), theta);
  for (const cplx& t : out.t) out.max_residual = std::max(out.max_residual, cubic_residual(alpha, theta, t));
  return out;
}

ComplexSaddles continue_saddles(double alpha, double from, const ComplexSaddles& start, double to) {
  check_alpha(alpha);
  check_theta(from);
  check_theta(to);
  ComplexSaddles out;
  out.t = continue_saddles(alpha, from, start.t, to);
  for (const cplx& t : out.t) out.max_residual = std::max(out.max_residual, cubic_residual(alpha, to, t));
  return out;
}

std::string_view to_string(Terminus t) noexcept {
  switch (t) {
    case Terminus::origin: return "origin";
    case Terminus::origin_left: return "origin_left";
    case Terminus::one: return "one";
    case Terminus::one_adjacent_sheet: return "one_adjacent_sheet";
    case Terminus::spiral_infinity: return "spiral_infinity";
    case Terminus::other_saddle: return "other_saddle";
  }
  return "unknown";
}

std::pair<PathTrace, PathTrace> trace_descent(double alpha, double theta, int saddle_index) {
  return trace_pair(alpha, theta, saddle_index, true);
}

std::pair<PathTrace, PathTrace> trace_ascent(double alpha, double theta, int saddle_index) {
  return trace_pair(alpha, theta, saddle_index, false);
}

CriticalAngles critical_angles(double alpha) {
  check_alpha(alpha);
  std::vector<double> grid(scan_points + 1);
  std::vector<std::array<cplx, 3>> saddles(scan_points + 1);
  grid[0] = 0.0;
  saddles[0] = initial_saddles(alpha);
  for (int k = 1; k <= scan_points; ++k) {
    grid[k] = pi * k / scan_points;
    saddles[k] = continue_saddles(alpha, grid[k - 1], saddles[k - 1], grid[k]);
  }

  const auto im_zeros = scan_zeros(alpha, grid, saddles, [](cplx d) { return d.imag(); });
  if (im_zeros.size() < 2) throw Error(ErrorKind::bracket_failure, "Im(psi(t0) - psi(t1)) has fewer than two zeros in (0, pi)");

  CriticalAngles out;
  out.theta0 = im_zeros.front();
  out.theta1 = im_zeros.back();

  const auto re_zeros = scan_zeros(alpha, grid, saddles, [](cplx d) { return d.real(); });
  const auto star = std::find_if(re_zeros.begin(), re_zeros.end(),
                                 [&](double z) { return z > out.theta0 && z < out.theta1; });
  if (star == re_zeros.end()) throw Error(ErrorKind::bracket_failure, "no zero of Re(psi(t0) - psi(t1)) between the critical angles");
  out.theta_star = *star;

  const double delta = 1e-3 * pi;
  try {
    out.theta0_confirmed = descent_termini(alpha, out.theta0 - delta) != descent_termini(alpha, out.theta0 + delta);
  } catch (const Error&) {
    out.theta0_confirmed = false;
  }
  return out;
}

SaddleContribution saddle_contribution(const PhaseConfig& cfg, int saddle_index) {
  check_saddle_index(saddle_index);
  const cplx t = saddles_complex(cfg.alpha, cfg.theta).t[saddle_index];
  const cplx pp = stokes_d2psi(cfg.alpha, cfg.theta, t);
  double ar = std::arg(pp);
  if (ar < 0.0) ar += 2.0 * pi;
  // Rounding-level Im psi'' below a positive real axis is read as arg 0,
  // the closed end of [0, 2 pi).
  const bool ambiguous = ar < 1e-8 || ar > 2.0 * pi - 1e-8;
  if (ar > 2.0 * pi - 1e-8) ar = 0.0;
  const cplx x = std::polar(cfg.xmod, cfg.theta);
  const cplx log_j = 0.5 * std::log(2.0 * pi / cfg.xmod) - 0.5 * cplx(std::log(std::abs(pp)), ar) +
                     (cfg.y - 1.0) * std::log(t) + (x - 1.0) * std::log(1.0 - t) - cfg.p / (4.0 * t * (1.0 - t));
  SaddleContribution out;
  out.value = LogComplex::from_log(log_j);
  out.branch_ambiguous = ambiguous;
  return out;
}

std::string_view to_string(StokesRegime r) noexcept {
  switch (r) {
    case StokesRegime::t0_only: return "t0_only";
    case StokesRegime::both: return "both";
    case StokesRegime::t1_only: return "t1_only";
  }
  return "unknown";
}

StokesResult asymptotic_b_complex_x(const PhaseConfig& cfg) {
  return asymptotic_b_complex_x(cfg, critical_angles(cfg.alpha));
}

StokesResult asymptotic_b_complex_x(const PhaseConfig& cfg, const CriticalAngles& angles) {
  StokesResult out;
  out.angles = angles;
  out.j0 = saddle_contribution(cfg, 0);
  out.j1 = saddle_contribution(cfg, 1);
  if (cfg.theta < angles.theta0) {
    out.regime = StokesRegime::t0_only;
    out.value = out.j0.value;
  } else if (cfg.theta < angles.theta1) {
    out.regime = StokesRegime::both;
    out.value = out.j0.value - out.j1.value;
  } else {
    out.regime = StokesRegime::t1_only;
    out.value = out.j1.value;
  }
  const double band = 1e-3 * pi;
  out.near_critical = std::abs(cfg.theta - angles.theta0) < band || std::abs(cfg.theta - angles.theta1) < band;
  return out;
}

std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::t0_dominant: return "t0";
    case Dominance::t1_dominant: return "t1";
    case Dominance::equal: return "equal";
  }
  return "unknown";
}

Dominance dominance(double alpha, double theta) {
  const auto s = saddles_complex(alpha, theta).t;
  const double r0 = stokes_psi(alpha, theta, s[0]).real();
  const double r1 = stokes_psi(alpha, theta, s[1]).real();
  if (std::abs(r0 - r1) <= 1e-8 * std::max({1.0, std::abs(r0), std::abs(r1)})) return Dominance::equal;
  return r0 < r1 ? Dominance::t0_dominant : Dominance::t1_dominant;
}

}  // namespace genbeta
