// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "genbeta/bell.hpp"
#include "genbeta/large_p.hpp"
#include "genbeta/published_tables.hpp"
#include "genbeta/reference_oracle.hpp"
#include "genbeta/saddle.hpp"
#include "genbeta/special_functions.hpp"
#include "genbeta/stokes.hpp"
#include "oracles/formulas.hpp"

using namespace genbeta;
namespace pub = genbeta::published;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// Published entries are rounded; agreement to three significant figures means a
// difference below half a unit in the third digit of each nonzero component.
bool three_figures(cplx v, cplx ref) {
  auto ok = [&](double c, double pc) {
    if (pc == 0.0) return std::abs(c) <= 5e-4 * std::abs(ref);
    const double unit = std::pow(10.0, std::floor(std::log10(std::abs(pc))) - 2.0);
    return std::abs(c - pc) <= 0.5 * unit;
  };
  return ok(v.real(), ref.real()) && ok(v.imag(), ref.imag());
}

Outcome table1() {
  double worst = 0.0;
  for (const auto& col : pub::table1_columns) {
    const auto C = wojdylo_coefficients(local_series(solve_saddles_s3(col.a), col.y, 10), 5);
    for (int n = 0; n <= 5; ++n) worst = std::max(worst, std::abs(C.values[2 * n] - col.c2n[n]));
  }
  return {worst <= 1e-9, fmt("max |dC| = %.2e over 24 coefficients", worst)};
}

Outcome table2() {
  bool pass = true;
  std::string worst_detail;
  double worst = 1.0;
  for (int c = 0; c < 4; ++c) {
    const auto& col = pub::table1_columns[c];
    const auto ref = b_euler({pub::table2_x, col.y, pub::table2_x * col.a}, QuadratureConfig::extended(1e-22)).value;
    for (int n0 = 0; n0 <= 5; ++n0) {
      const double err = relative_difference(expand_s3(pub::table2_x, col.y, col.a, n0).value, ref);
      const double ref = pub::table2_rel_error[n0][c];
      const double ratio = std::max(err / ref, ref / err);
      const double allowed = ref >= 1e-12 ? 2.0 : 10.0;
      if (ratio > allowed) {
        pass = false;
        worst_detail += fmt(" [n0=%.0f col=%.0f: computed %.3e", n0, c + 1, err) + fmt(" vs published %.3e]", ref);
      }
      worst = std::max(worst, ratio);
    }
  }
  return {pass, fmt("max ratio %.2f", worst) + worst_detail};
}

Outcome table3() {
  double worst = 0.0;
  bool ordered = true;
  for (const auto& r : pub::table3_rows) {
    const auto c = critical_angles(r.alpha);
    ordered = ordered && c.theta0 < c.theta_star && c.theta_star < c.theta1;
    worst = std::max({worst, std::abs(c.theta0 / pi - r.theta0), std::abs(c.theta1 / pi - r.theta1),
                      std::abs(c.theta_star / pi - r.theta_star)});
  }
  const auto f = critical_angles(1.0 / 3.0);
  const double fig = std::max(std::abs(f.theta0 / pi - pub::fig2_theta0), std::abs(f.theta1 / pi - pub::fig2_theta1));
  return {ordered && worst <= 1e-5 && fig <= 1e-4, fmt("max |d theta|/pi = %.2e (21 entries), alpha=1/3: %.2e", worst, fig)};
}

Outcome table4() {
  const double xmod = pub::table4_xmod, p = pub::table4_p, y = pub::table4_y;
  const auto angles = critical_angles(p / (4.0 * xmod));
  bool calc_ok = true;
  double worst_asym = 0.0, worst_calc = 0.0;
  for (const auto& r : pub::table4_rows) {
    const double theta = r.theta * pi;
    const cplx calc = b_euler_complex_x(xmod, theta, y, p, QuadratureConfig::extended(1e-12)).value.to_complex();
    const cplx asym = asymptotic_b_complex_x(PhaseConfig::make(xmod, theta, y, p), angles).value.to_complex();
    calc_ok = calc_ok && three_figures(calc, r.calculated);
    worst_calc = std::max(worst_calc, rel(calc, r.calculated));
    worst_asym = std::max(worst_asym, rel(asym, r.asymptotic));
  }
  return {calc_ok && worst_asym <= 0.02,
          std::string("calculated column ") + (calc_ok ? "agrees" : "disagrees") + " to 3 figures" +
              fmt(" (max rel %.2e); asymptotic max rel %.2e", worst_calc, worst_asym)};
}

Outcome coefficients() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = std::abs(coeff_c(0, {0.3, 1.0}, {-1.2, 0.4}) - 1.0);
  for (int i = 0; i < 50; ++i) {
    const cplx x(u(rng), u(rng)), y(u(rng), u(rng));
    worst = std::max(worst, std::abs(coeff_c(1, x, y) - oracles::c1_poly(x, y)) / std::max(1.0, std::abs(oracles::c1_poly(x, y))));
    worst = std::max(worst, std::abs(coeff_c(2, x, y) - oracles::c2_poly(x, y)) / std::max(1.0, std::abs(oracles::c2_poly(x, y))));
  }
  double diag = 0.0;
  for (const cplx x : {cplx(0.7, 0.0), cplx(1.5, -2.0), cplx(-0.3, 0.8), cplx(3.0, 0.0)}) {
    for (int j = 0; j <= 10; ++j) {
      const cplx d = oracles::diagonal(j, x);
      diag = std::max(diag, std::abs(coeff_c(j, x, x) - d) / std::max(1.0, std::abs(d)));
    }
  }
  return {worst <= 1e-12 && diag <= 1e-12, fmt("c0/c1/c2 max dev %.2e; diagonal j<=10 max dev %.2e", worst, diag)};
}

Outcome decay() {
  bool pass = true;
  std::string detail = "slopes";
  for (int M : {2, 4, 6}) {
    double prev = 0.0;
    for (double p : {10.0, 20.0, 40.0}) {
      const auto ref = b_euler({1.0, 1.0, p}, QuadratureConfig::extended(1e-20)).value;
      const double err = relative_difference(expand_large_p({1.0, 1.0, p}, M).value, ref);
      if (prev > 0.0) {
        const double slope = std::log2(prev / err);
        pass = pass && std::abs(slope - M) <= 0.5;
        detail += fmt(" M=%.0f:%.2f", M, slope);
      }
      prev = err;
    }
  }
  return {pass, detail};
}

Outcome cross_representation() {
  double worst = 0.0;
  std::string where;
  for (double x : {0.7, 1.5, 3.0}) {
    for (double y : {0.7, 1.5, 3.0}) {
      for (double p : {1.0, 4.0}) {
        const Parameters prm{x, y, p};
        const LogComplex e = b_euler(prm, QuadratureConfig{1e-13}).value;
        const LogComplex m = b_mellin_barnes(prm, default_contour(prm), 1e-12).value;
        const LogComplex w = whittaker_series(prm, 200).value;
        const double d = std::max({relative_difference(e, m), relative_difference(e, w), relative_difference(m, w)});
        if (d > worst) {
          worst = d;
          where = fmt(" at (x,y,p)=(%.1f,%.1f,%.0f)", x, y, p);
        }
      }
    }
  }
  return {worst <= 1e-7, fmt("max pairwise rel dev %.2e", worst) + where};
}

Outcome whittaker_identity() {
  bool pass = true;
  std::string detail;
  for (double x : {20.0, 40.0}) {
    const double p = x;
    const auto e = expand_s4(x, 1.0, 1.0, default_saddle_depth);
    const LogComplex closed = LogComplex::from_log(cplx((1 - 2 * x) * std::log(2.0) + 0.5 * std::log(pi) +
                                                         (x - 1) / 2 * std::log(p) - p / 2, 0.0)) *
                              whittaker_w(-x / 2, x / 2, p);
    const double d = relative_difference(e.value, closed);
    pass = pass && d <= e.error_estimate;
    detail += fmt(" x=%.0f: dev %.2e, estimate %.2e", x, d, e.error_estimate);
  }
  return {pass, detail.substr(1)};
}

Outcome bell() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<oracles::Rational> a(8);
    for (int i = 1; i < 8; ++i) a[i] = oracles::Rational(d(rng), 1 + (d(rng) + 9) % 5);
    const auto table = bell_table(7, a);
    for (int k = 0; k <= 7; ++k) {
      for (int j = 0; j <= k; ++j) {
        if (table[k][j] != oracles::bell_brute(k, j, a)) return {false, fmt("mismatch at k=%.0f j=%.0f", k, j)};
        ++checked;
      }
    }
  }
  return {true, fmt("%.0f exact rational comparisons, k <= 7", checked)};
}

Outcome stokes_jump() {
  const double alpha = 0.01, xmod = 50.0, p = 4.0 * alpha * xmod, y = 0.5;
  const auto c = critical_angles(alpha);
  const auto below = trace_descent(alpha, c.theta0 - 1e-3 * pi, 0);
  const auto above = trace_descent(alpha, c.theta0 + 1e-3 * pi, 0);
  const bool flip = below.first.terminus != above.first.terminus || below.second.terminus != above.second.terminus;

  bool swap = true, oracle_ok = true;
  double worst = 0.0;
  for (double side : {-1.0, 1.0}) {
    const double theta = c.theta_star + side * 0.05 * pi;
    const auto r = asymptotic_b_complex_x(PhaseConfig::make(xmod, theta, y, p), c);
    const bool j0_larger = r.j0.value.log_mod() > r.j1.value.log_mod();
    swap = swap && (side < 0 ? j0_larger : !j0_larger);
    swap = swap && dominance(alpha, theta) == (side < 0 ? Dominance::t0_dominant : Dominance::t1_dominant);
    const LogComplex ref = b_euler_complex_x(xmod, theta, y, p, QuadratureConfig::extended(1e-12)).value;
    const double dm = std::abs(std::exp(r.value.log_mod() - ref.log_mod()) - 1.0);
    worst = std::max(worst, dm);
    oracle_ok = oracle_ok && dm <= 0.02;
  }
  return {flip && swap && oracle_ok,
          std::string("t0 termini ") + (flip ? "flip" : "do not flip") + " across theta0; dominance " +
              (swap ? "swaps" : "does not swap") + " across theta*" + fmt("; |B| vs oracle max rel %.2e", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "table 1 coefficients", 10.0, table1},
      {2, "table 2 relative errors", 60.0, table2},
      {3, "table 3 critical angles", 120.0, table3},
      {4, "table 4 calculated and asymptotic values", 0.0, table4},
      {5, "coefficient identities", 0.0, coefficients},
      {6, "large-p error decay", 0.0, decay},
      {7, "Euler / Mellin-Barnes / Whittaker agreement", 0.0, cross_representation},
      {8, "proportional-y Whittaker identity", 0.0, whittaker_identity},
      {9, "Bell polynomial recursion", 0.0, bell},
      {10, "Stokes jump and dominance exchange", 0.0, stokes_jump},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && dt > c.time_limit) {
      o.pass = false;
      o.detail += fmt("; runtime %.1fs exceeds %.0fs", dt, c.time_limit);
    }
    std::printf("%s criterion %d: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), dt);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
