#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "genbeta/log_complex.hpp"
#include "genbeta/special_functions.hpp"

// Closed forms and brute-force enumerations that serve as independent
// references for the library's recurrences.
namespace genbeta::oracles {

inline cplx c1_poly(cplx x, cplx y) { return 0.25 * (1.0 + x + y + 2.0 * x * y - x * x - y * y); }

inline cplx c2_poly(cplx x, cplx y) {
  const cplx xy = x * y;
  return (9.0 + 6.0 * (2.0 + xy) * (x + y + xy) - (7.0 + 4.0 * xy) * (x * x + y * y) - 6.0 * (x * x * x + y * y * y) +
          x * x * x * x + y * y * y * y + 14.0 * xy) /
         32.0;
}

/// c_j(x, x) = (1/2)_j (x+1/2)_j / j!
inline cplx diagonal(int j, cplx x) {
  cplx v = pochhammer(0.5, j) * pochhammer(x + 0.5, j);
  for (int k = 2; k <= j; ++k) v /= static_cast<double>(k);
  return v;
}

using Rational = boost::rational<long long>;

/// Sum over ordered compositions of k into j positive parts of prod a_part.
inline Rational bell_brute(int k, int j, const std::vector<Rational>& a) {
  if (j == 0) return k == 0 ? Rational(1) : Rational(0);
  Rational total(0);
  for (int first = 1; first <= k - (j - 1); ++first) total += a[first] * bell_brute(k - first, j - 1, a);
  return total;
}

}  // namespace genbeta::oracles
