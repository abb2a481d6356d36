#include "genbeta/cubic.hpp"

#include <algorithm>
#include <cmath>

#include "genbeta/errors.hpp"

namespace genbeta {

CubicRoots solve_cubic(cplx c3, cplx c2, cplx c1, cplx c0) {
  if (c3 == cplx(0.0, 0.0)) throw Error(ErrorKind::degenerate_cubic, "leading coefficient of the cubic is zero");
  const cplx b = c2 / c3, c = c1 / c3, d = c0 / c3;

  // t = s - b/3 gives s^3 + P s + Q = 0
  const cplx shift = -b / 3.0;
  const cplx P = c - b * b / 3.0;
  const cplx Q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

  const cplx disc = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
  // larger of the two candidates avoids cancellation
  const cplx w1 = -Q / 2.0 + disc, w2 = -Q / 2.0 - disc;
  const cplx w = std::abs(w1) >= std::abs(w2) ? w1 : w2;

  CubicRoots out;
  const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
  if (w == cplx(0.0, 0.0)) {
    out.roots = {shift, shift, shift};
  } else {
    cplx u = std::pow(w, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
      out.roots[k] = u - P / (3.0 * u) + shift;
      u *= omega;
    }
  }

  auto poly = [&](cplx t) { return ((c3 * t + c2) * t + c1) * t + c0; };
  auto dpoly = [&](cplx t) { return (3.0 * c3 * t + 2.0 * c2) * t + c1; };
  for (auto& t : out.roots) {
    for (int it = 0; it < 3; ++it) {
      const cplx dp = dpoly(t);
      if (dp == cplx(0.0, 0.0)) break;
      const cplx step = poly(t) / dp;
      out.max_polish_step = std::max(out.max_polish_step, std::abs(step));
      t -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(t))) break;
    }
    out.max_residual = std::max(out.max_residual, std::abs(poly(t)));
  }
  return out;
}

}  // namespace genbeta
