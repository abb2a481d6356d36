#include "genbeta/large_p.hpp"

#include <cmath>
#include <optional>

#include "genbeta/errors.hpp"
#include "genbeta/special_functions.hpp"

namespace genbeta {

namespace {

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Does (a)_k vanish for some k in [0, j)?  That is, is a in {0, -1, ..., 1-j}?
bool pochhammer_hits_zero(cplx a, int j) { return is_nonpositive_integer(a) && -a.real() < j; }

std::optional<cplx> coeff_closed_form(int j, cplx x, cplx y) {
  const cplx lower = y + 0.5;
  if (pochhammer_hits_zero(lower, j)) return std::nullopt;
  const cplx d = 0.5 * (y - x);
  cplx prefactor = pochhammer(0.5, j) * pochhammer(lower, j);
  for (int k = 2; k <= j; ++k) prefactor /= static_cast<double>(k);
  return prefactor * hyp3f2_terminating(j, d, d + 0.5, 0.5, lower);
}

// sum_k (-j)_k (d)_k (d+1/2)_k / (k! (1/2)_k) * (1/2)_j (y+1/2+k)_{j-k} / j!
cplx coeff_merged(int j, cplx x, cplx y) {
  const cplx d = 0.5 * (y - x);
  cplx sum = 0.0;
  cplx term = 1.0;  // (-j)_k (d)_k (d+1/2)_k / (k! (1/2)_k)
  for (int k = 0; k <= j; ++k) {
    if (k > 0) {
      const double kk = k - 1;
      term *= (kk - j) * (d + kk) * (d + 0.5 + kk) / ((kk + 1.0) * (0.5 + kk));
    }
    sum += term * pochhammer(y + 0.5 + static_cast<double>(k), j - k);
  }
  cplx prefactor = pochhammer(0.5, j);
  for (int k = 2; k <= j; ++k) prefactor /= static_cast<double>(k);
  return prefactor * sum;
}

}  // namespace

cplx coeff_c(int j, cplx x, cplx y) {
  if (j < 0) throw Error(ErrorKind::invalid_argument, "coeff_c needs j >= 0");
  if (auto c = coeff_closed_form(j, x, y)) return *c;
  if (auto c = coeff_closed_form(j, y, x)) return *c;
  return coeff_merged(j, x, y);
}

LargePCoefficients LargePCoefficients::compute(cplx x, cplx y, int count) {
  if (count < 1) throw Error(ErrorKind::invalid_argument, "need at least one coefficient");
  LargePCoefficients out{x, y, {}};
  out.values.reserve(count);
  for (int j = 0; j < count; ++j) out.values.push_back(coeff_c(j, x, y));
  return out;
}

ExpansionResult expand_large_p(const Parameters& params, int M) {
  const cplx x = params.x, y = params.y, p = params.p;
  if (M < 1 || M > max_large_p_terms) {
    throw Error(ErrorKind::invalid_argument, "large-p truncation must lie in 1..20");
  }
  if (!(p.real() > 0.0)) throw Error(ErrorKind::sector_violation, "large-p expansion needs |arg p| < pi/2");

  const auto coeffs = LargePCoefficients::compute(x, y, M + 1);
  const cplx inv_p = 1.0 / p;
  cplx sum = 0.0;
  cplx power = 1.0;  // (-1/p)^j
  for (int j = 0; j < M; ++j) {
    sum += coeffs.values[j] * power;
    power *= -inv_p;
  }
  const double omitted = std::abs(coeffs.values[M] * power);

  // 2^{1-x-y} sqrt(pi) p^{-1/2} e^{-p}; the real part is kept in long double
  // because e^{-p} pushes log|B| far from zero for the p of interest.
  const long double ln2 = std::log(2.0L);
  const long double log_abs_p = std::log(static_cast<long double>(std::abs(p)));
  const long double arg_p = std::arg(p);
  const long double re = (1.0L - x.real() - y.real()) * ln2 + 0.5L * std::log(static_cast<long double>(pi)) -
                         0.5L * log_abs_p - static_cast<long double>(p.real());
  const long double im = -(x.imag() + y.imag()) * ln2 - 0.5L * arg_p - static_cast<long double>(p.imag());

  ExpansionResult out;
  out.value = LogComplex::from_log(re, im) * LogComplex::from_complex(sum);
  out.terms_used = M;
  out.error_estimate = omitted / std::abs(sum);
  return out;
}

WhittakerSeriesResult whittaker_series(const Parameters& params, int K) {
  if (K < 1) throw Error(ErrorKind::invalid_argument, "whittaker_series needs K >= 1");
  const cplx p = params.p;
  if (!(p.real() > 0.0)) throw Error(ErrorKind::parameter_domain, "whittaker_series needs Re p > 0");

  auto terminates = [](cplx x, cplx y) {
    const cplx d = 0.5 * (y - x);
    return is_nonpositive_integer(d) || is_nonpositive_integer(d + 0.5);
  };
  auto admissible = [](cplx y) { return y.real() > -0.5; };  // W integral at k = 0

  bool swap = false;
  const cplx x0 = params.x, y0 = params.y;
  if (terminates(x0, y0) && admissible(y0)) {
    swap = false;
  } else if (terminates(y0, x0) && admissible(x0)) {
    swap = true;
  } else {
    swap = y0.real() > x0.real();
    if (!admissible(swap ? x0 : y0)) swap = !swap;
  }
  const cplx x = swap ? y0 : x0;
  const cplx y = swap ? x0 : y0;
  if (!admissible(y)) throw Error(ErrorKind::parameter_domain, "whittaker_series needs Re y > -1/2 in some order");

  const cplx d = 0.5 * (y - x);
  LogComplex sum;
  LogComplex last;
  cplx weight = 1.0;  // (d)_k (d+1/2)_k / k!
  int used = 0;
  bool terminated = false;
  for (int k = 0; k < K; ++k) {
    if (k > 0) {
      const double kk = k - 1;
      weight *= (d + kk) * (d + 0.5 + kk) / (kk + 1.0);
    }
    if (weight == cplx(0.0, 0.0)) {
      terminated = true;
      break;
    }
    last = LogComplex::from_complex(weight) * whittaker_w(-static_cast<double>(k) - 0.5 * y, 0.5 * y, p);
    sum += last;
    ++used;
  }
  if (!terminated && used == K) {
    const double kk = K - 1;
    terminated = (d + kk) * (d + 0.5 + kk) == cplx(0.0, 0.0);
  }

  const cplx log_prefactor = (1.0 - x - y) * std::log(2.0) + 0.5 * std::log(pi) +
                             0.5 * (y - 1.0) * std::log(p) - 0.5 * p;
  WhittakerSeriesResult out;
  out.value = LogComplex::from_log(log_prefactor) * sum;
  out.terms = used;
  out.swapped = swap;
  out.last_term_ratio = terminated ? 0.0 : std::abs(ratio(last, sum));
  out.converged = terminated || out.last_term_ratio <= 1e-8;
  return out;
}

}  // namespace genbeta
