#pragma once

#include <array>

// B(100, y; 100a) for the four (a, y) columns, from the float128 Euler
// quadrature at rel_tol 1e-22. Regenerate with `genbeta table 2 --regenerate-golden`.
namespace genbeta::cli {

struct Table2Reference {
  long double log_mod;
  double phase;
};

inline constexpr std::array<Table2Reference, 4> table2_reference_values = {{
    {-155.2997204494479269454299L, 0},
    {-97.86921499225439030622553L, 0},
    {-209.5982453370082087551474L, 0},
    {-261.3821467216737890748579L, 0},
}};

}  // namespace genbeta::cli
