#pragma once

#include "genbeta/log_complex.hpp"

namespace genbeta {

/// log Gamma(z) on some branch; exp() of it is Gamma(z). Stirling series
/// (after an upward shift) for Re z >= 1/2, reflection otherwise. Throws
/// gamma_pole at non-positive integers.
cplx log_gamma(cplx z);

/// Gamma(z), relative error around 1e-14 for |z| <= 50.
cplx complex_gamma(cplx z);

/// (a)_j = a (a+1) ... (a+j-1) by running product; (a)_0 = 1.
cplx pochhammer(cplx a, int j);

/// Terminating 3F2(-j, upper2, upper3; lower1, lower2; 1), summed forward
/// with the term ratio in long double.
cplx hyp3f2_terminating(int j, cplx upper2, cplx upper3, cplx lower1, cplx lower2);

/// Whittaker W_{kappa,mu}(z) from its Laplace-type integral
///
///   W = z^{mu+1/2} e^{-z/2} / Gamma(1/2+mu-kappa)
///       * int_0^inf e^{-z t} t^{mu-kappa-1/2} (1+t)^{mu+kappa-1/2} dt,
///
/// valid for Re z > 0 and Re(mu - kappa + 1/2) > 0.
LogComplex whittaker_w(cplx kappa, cplx mu, cplx z);

}  // namespace genbeta
