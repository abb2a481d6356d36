#pragma once

#include <vector>

#include "genbeta/log_complex.hpp"
#include "genbeta/parameters.hpp"

namespace genbeta {

/// c_j(x,y) = (1/2)_j (y+1/2)_j / j! * 3F2(-j, (y-x)/2, (y-x)/2+1/2; 1/2, y+1/2; 1).
/// When y+1/2 meets a pole the arguments are exchanged (c_j is symmetric);
/// when both orders do, the prefactor is folded into the sum, which is
/// pole-free.
cplx coeff_c(int j, cplx x, cplx y);

/// c_0 .. c_{M-1} for one (x, y).
struct LargePCoefficients {
  cplx x;
  cplx y;
  std::vector<cplx> values;

  static LargePCoefficients compute(cplx x, cplx y, int count);
};

/// Value of a truncated asymptotic series together with the modulus of the
/// first omitted term relative to the partial sum.
struct ExpansionResult {
  LogComplex value;
  int terms_used = 0;
  double error_estimate = 0.0;
};

inline constexpr int default_large_p_terms = 6;
inline constexpr int max_large_p_terms = 20;

/// B(x,y;p) ~ 2^{1-x-y} sqrt(pi) p^{-1/2} e^{-p} sum_{j<M} (-1)^j c_j p^{-j}
/// for |arg p| < pi/2. Throws sector_violation outside that sector.
ExpansionResult expand_large_p(const Parameters& params, int M = default_large_p_terms);

struct WhittakerSeriesResult {
  LogComplex value;
  int terms = 0;                 // W evaluations actually summed
  double last_term_ratio = 0.0;  // |last term| / |partial sum|
  bool converged = false;        // series terminated or last_term_ratio <= 1e-8
  bool swapped = false;          // x and y were exchanged before summing
};

/// Convergent expansion
///   B = 2^{1-x-y} sqrt(pi) p^{(y-1)/2} e^{-p/2}
///       * sum_k ((y-x)/2)_k ((1+y-x)/2)_k / k! W_{-k-y/2, y/2}(p)
/// with at most K terms. The pair (x, y) is first ordered so that the
/// series terminates when either order allows it, and otherwise so that
/// Re x >= Re y, which gives the faster decay.
WhittakerSeriesResult whittaker_series(const Parameters& params, int K);

}  // namespace genbeta
