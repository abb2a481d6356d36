#pragma once

#include <vector>

#include "genbeta/errors.hpp"

namespace genbeta {

/// Table of partial ordinary Bell polynomials B[k][j], 0 <= j <= k <= kmax,
/// from
///   B_{k0} = delta_{k0},   B_{kj} = sum_{r=1}^{k-j+1} a_r B_{k-r, j-1}.
/// a[0] is ignored; a must hold a_1 .. a_kmax.
template <class T>
std::vector<std::vector<T>> bell_table(int kmax, const std::vector<T>& a) {
  if (kmax < 0) throw Error(ErrorKind::invalid_argument, "bell_table needs kmax >= 0");
  if (static_cast<int>(a.size()) <= kmax) throw Error(ErrorKind::invalid_argument, "too few coefficients for bell_table");
  std::vector<std::vector<T>> B(kmax + 1, std::vector<T>(kmax + 1, T(0)));
  B[0][0] = T(1);
  for (int j = 1; j <= kmax; ++j) {
    for (int k = j; k <= kmax; ++k) {
      T s(0);
      for (int r = 1; r <= k - j + 1; ++r) s += a[r] * B[k - r][j - 1];
      B[k][j] = s;
    }
  }
  return B;
}

/// Single entry B_{kj}; 0 <= j <= k.
template <class T>
T bell_partial(int k, int j, const std::vector<T>& a) {
  if (j < 0 || j > k) throw Error(ErrorKind::invalid_argument, "bell_partial needs 0 <= j <= k");
  return bell_table(k, a)[k][j];
}

}  // namespace genbeta
