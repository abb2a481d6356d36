#pragma once

#include "genbeta/log_complex.hpp"

namespace genbeta {

/// Arguments of B(x, y; p).
struct Parameters {
  cplx x;
  cplx y;
  cplx p;

  Parameters swapped() const { return {y, x, p}; }
};

}  // namespace genbeta
