#pragma once

#include <array>
#include <complex>

// Published reference values for the four tables that the `table` command
// regenerates. Kept verbatim, typos included; see README for the one entry
// that does not reproduce.
namespace genbeta::published {

struct Table1Column {
  double a;
  double y;
  std::array<double, 6> c2n;  // C_0, C_2, ..., C_10
};

inline constexpr std::array<Table1Column, 4> table1_columns = {{
    {1.0, 1.0, {0.2668661228, 0.0982652355, -0.0635656655, 0.0186002666, -0.0039253710, 0.0012059654}},
    {0.5, 1.5, {0.1364219142, 0.2683838462, -0.1085963949, 0.0151339630, -0.0003383888, 0.0004533741}},
    {1.5, 1.25, {0.2036093538, 0.0762869817, -0.0456489054, 0.0137423943, -0.0026770977, 0.0003423270}},
    {2.0, 0.5, {0.3909054941, -0.0309094064, -0.0039290992, 0.0024209801, -0.0005115807, 0.0000299402}},
}};

/// Relative error of the fixed-y expansion at x = 100, rows n0 = 0..5,
/// columns as in table1_columns.
inline constexpr std::array<std::array<double, 4>, 6> table2_rel_error = {{
    {1.838e-3, 9.682e-3, 1.853e-3, 3.963e-4},
    {1.770e-5, 5.892e-5, 1.666e-5, 7.426e-7},
    {1.295e-7, 2.058e-7, 1.255e-7, 1.153e-8},
    {9.506e-10, 1.517e-10, 8.562e-10, 8.568e-11},
    {1.295e-11, 9.526e-12, 5.011e-12, 2.332e-13},
    {3.688e-12, 1.933e-13, 5.472e-14, 6.917e-15},
}};

inline constexpr double table2_x = 100.0;

struct Table3Row {
  double alpha;
  double theta0;  // units of pi
  double theta1;
  double theta_star;
};

inline constexpr std::array<Table3Row, 7> table3_rows = {{
    {0.30, 0.603324, 0.752315, 0.688289},
    {0.25, 0.536784, 0.798621, 0.681218},
    {0.20, 0.476795, 0.840611, 0.672858},
    {0.15, 0.418651, 0.879708, 0.662628},
    {0.10, 0.358268, 0.916935, 0.649359},
    {0.05, 0.288029, 0.953688, 0.629820},
    {0.01, 0.198480, 0.986248, 0.597144},
}};

/// Critical angles quoted for alpha = 1/3 (units of pi).
inline constexpr double fig2_theta0 = 0.65595;
inline constexpr double fig2_theta1 = 0.71782;

struct Table4Row {
  double theta;  // units of pi
  std::complex<double> asymptotic;
  std::complex<double> calculated;
};

inline constexpr double table4_xmod = 50.0;
inline constexpr double table4_p = 2.0;
inline constexpr double table4_y = 0.5;

inline const std::array<Table4Row, 8> table4_rows = {{
    {0.0, {5.175e-6, 0.0}, {5.187e-6, 0.0}},
    {0.2, {-8.210e-6, 2.081e-6}, {-8.223e-6, 2.096e-6}},
    {0.4, {3.468e-5, -6.934e-6}, {3.470e-5, -7.020e-6}},
    {0.5, {2.647e-6, -9.853e-5}, {2.402e-6, -9.855e-5}},
    {0.6, {-8.837e-4, -3.821e-3}, {-8.781e-4, -3.823e-3}},
    {0.7, {-5.944e28, 1.659e28}, {-5.952e28, 1.652e28}},
    {0.8, {2.786e54, 3.451e54}, {2.786e54, 3.459e54}},
    {1.0, {4.146e77, 0.0}, {4.154e77, 0.0}},
}};

}  // namespace genbeta::published
