#pragma once

#include <array>

#include "genbeta/log_complex.hpp"

namespace genbeta {

struct CubicRoots {
  std::array<cplx, 3> roots;
  double max_residual = 0.0;    // |c3 t^3 + c2 t^2 + c1 t + c0| at each root
  double max_polish_step = 0.0;  // largest Newton correction applied
};

/// Roots of c3 t^3 + c2 t^2 + c1 t + c0 from Cardano's formula, each then
/// polished by Newton's method. Throws degenerate_cubic when c3 = 0.
CubicRoots solve_cubic(cplx c3, cplx c2, cplx c1, cplx c0);

}  // namespace genbeta
