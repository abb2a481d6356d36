#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "genbeta/extended.hpp"

#include "genbeta/bell.hpp"
#include "genbeta/cubic.hpp"
#include "genbeta/errors.hpp"
#include "genbeta/reference_oracle.hpp"
#include "genbeta/saddle.hpp"
#include "genbeta/special_functions.hpp"
#include "genbeta/published_tables.hpp"
#include "oracles/formulas.hpp"

using namespace genbeta;
using oracles::bell_brute;
using oracles::Rational;

namespace {

// Sign-change bisection on [lo, hi] to full double resolution.
double bisect(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  REQUIRE(glo * g(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double cubic_s3(double a, double t) { return t * (1 - t) * (1 - t) + a / 4 * (1 - 2 * t); }
double cubic_s4(double a, double b, double t) { return t * (1 - t) * (1 - (b + 1) * t) + a / 4 * (1 - 2 * t); }

LogComplex oracle(cplx x, cplx y, cplx p) {
  return b_euler({x, y, p}, QuadratureConfig::extended(1e-20)).value;
}

}  // namespace

TEST_CASE("fixed-y saddles") {
  for (double a : {1e-8, 0.01, 1.0 / 3.0, 0.5, 1.0, 1.5, 2.0, 10.0}) {
    const SaddleSet s = solve_saddles_s3(a);
    CHECK(s.max_residual <= 1e-12);
    CHECK(s.max_polish_step <= 1e-8);
    CHECK(s.t2.real() < 0.0);
    CHECK(s.t0.real() >= 0.0);
    CHECK(s.t0.real() <= 1.0);
    CHECK(s.t1.real() > 1.0);
  }
  // a -> 0: t(1-t)^2 = 0 leaves t2 -> 0 from below and t0, t1 = 1 -+ sqrt(a)/2
  const SaddleSet tiny = solve_saddles_s3(1e-8);
  CHECK(std::abs(tiny.t2.real()) < 1e-3);
  CHECK(tiny.t0.real() == doctest::Approx(1.0 - 0.5e-4).epsilon(1e-8));
  CHECK(tiny.t1.real() == doctest::Approx(1.0 + 0.5e-4).epsilon(1e-8));

  for (double a : {1.0 / 3.0, 1.0}) {
    const double t0 = bisect([a](double t) { return cubic_s3(a, t); }, 1e-12, 0.999);
    const double t1 = bisect([a](double t) { return cubic_s3(a, t); }, 1.0, 4.0);
    CHECK(std::abs(solve_saddles_s3(a).t0.real() - t0) < 1e-13);
    CHECK(std::abs(solve_saddles_s3(a).t1.real() - t1) < 1e-12);
  }
  CHECK(solve_saddles_s3(1.0).t0.real() == doctest::Approx(0.655553908733).epsilon(1e-11));
  CHECK_THROWS_AS(solve_saddles_s3(0.0), Error);
}

TEST_CASE("proportional-y saddles") {
  const SaddleSet sym = solve_saddles_s4(1.0, 1.0);
  CHECK(std::abs(sym.t0 - 0.5) < 1e-14);
  CHECK(std::abs(cubic_s4(1.0, 1.0, sym.t0.real())) < 1e-15);

  const SaddleSet s = solve_saddles_s4(0.5, 2.0);
  const double t0 = bisect([](double t) { return cubic_s4(0.5, 2.0, t); }, 1e-9, 0.999);
  CHECK(std::abs(s.t0.real() - t0) < 1e-13);
  CHECK(s.t1.real() > 1.0);
  CHECK(s.t2.real() < 0.0);
  CHECK(s.max_residual <= 1e-12);

  const SaddleSet near3 = solve_saddles_s4(0.7, 1e-10);
  const SaddleSet s3 = solve_saddles_s3(0.7);
  CHECK(std::abs(near3.t0 - s3.t0) < 1e-8);
  CHECK(std::abs(near3.t1 - s3.t1) < 1e-8);
  CHECK(std::abs(near3.t2 - s3.t2) < 1e-8);
  CHECK_THROWS_AS(solve_saddles_s4(1.0, 0.0), Error);
}

TEST_CASE("cubic solver") {
  const auto r = solve_cubic(2.0, {0.0, -1.0}, 3.0, {1.0, 1.0});
  for (const cplx t : r.roots) CHECK(std::abs(((2.0 * t + cplx(0.0, -1.0)) * t + 3.0) * t + cplx(1.0, 1.0)) < 1e-13);
  CHECK_THROWS_AS(solve_cubic(0.0, 1.0, 1.0, 1.0), Error);
  const auto triple = solve_cubic(1.0, -3.0, 3.0, -1.0);  // (t-1)^3
  for (const cplx t : triple.roots) CHECK(std::abs(t - 1.0) < 1e-5);
}

TEST_CASE("local series against finite differences") {
  const double a = 1.0, y = 1.5;
  const SaddleSet s = solve_saddles_s3(a);
  const LocalSeries ls = local_series(s, y, 6);
  using Q = boost::multiprecision::float128;
  const Q t0 = s.t0.real();
  auto psi = [&](Q t) -> Q { return Q(a) / (4 * t * (1 - t)) - log(t); };
  auto f = [&](Q t) -> Q { return pow(1 - t, Q(y) - 1) / t; };

  CHECK(ls.a_coeffs[0].real() == doctest::Approx(psi2_closed_form_s3(s.t0.real()) / 2).epsilon(1e-12));
  CHECK(ls.b_coeffs[0].real() == doctest::Approx(static_cast<double>(f(t0))).epsilon(1e-14));
  CHECK(std::abs(ls.psi_at_saddle.real() - static_cast<double>(psi(t0))) < 1e-14);

  // k-th derivative / k! by central differences in 113-bit arithmetic
  // with one Richardson step to remove the O(h^2) error
  auto taylor = [](const std::function<Q(Q)>& g, Q t, int k) {
    auto central = [&](Q h) {
      Q sum = 0, binom = 1, fact = 1;
      for (int i = 0; i <= k; ++i) {
        sum += ((i % 2) ? -binom : binom) * g(t + (Q(k) / 2 - i) * h);
        binom = binom * (k - i) / (i + 1);
        if (i > 0) fact *= i;
      }
      for (int i = 1; i <= k; ++i) sum /= h;
      return sum / fact;
    };
    const Q h = 1e-4;
    return static_cast<double>((4 * central(h / 2) - central(h)) / 3);
  };
  for (int r = 1; r <= 4; ++r) {
    const double fd = taylor(psi, t0, r + 2);
    INFO("a_" << r);
    CHECK(std::abs(ls.a_coeffs[r].real() - fd) <= 1e-6 * std::abs(fd));
  }
  for (int r = 1; r <= 4; ++r) {
    const double fd = taylor(f, t0, r);
    INFO("b_" << r);
    CHECK(std::abs(ls.b_coeffs[r].real() - fd) <= 1e-6 * std::abs(fd));
  }

  // proportional-y case at b = 2
  const SaddleSet s4 = solve_saddles_s4(0.5, 2.0);
  const LocalSeries l4 = local_series(s4, 2.0, 4);
  CHECK(l4.a_coeffs[0].real() == doctest::Approx(psi2_closed_form_s4(s4.t0.real(), 2.0) / 2).epsilon(1e-12));
  CHECK(l4.b_coeffs[0].real() == doctest::Approx(1.0 / (s4.t0.real() * (1 - s4.t0.real()))).epsilon(1e-14));

  // t0 = 1/2 is harmless for the series itself
  CHECK_NOTHROW(local_series(solve_saddles_s4(1.0, 1.0), 1.0, 6));

  SaddleSet bad = s;
  bad.t0 = 1e-7;
  CHECK_THROWS_AS(local_series(bad, y, 4), Error);
}

TEST_CASE("Bell polynomials") {
  const std::vector<cplx> a = {0.0, 2.0, 3.0, 5.0, 7.0};
  const cplx a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4];
  CHECK(bell_partial(0, 0, a) == cplx(1.0));
  CHECK(bell_partial(3, 0, a) == cplx(0.0));
  CHECK(bell_partial(4, 1, a) == a4);
  CHECK(bell_partial(4, 2, a) == a2 * a2 + 2.0 * a1 * a3);
  CHECK(bell_partial(4, 3, a) == 3.0 * a1 * a1 * a2);
  CHECK(bell_partial(4, 4, a) == a1 * a1 * a1 * a1);
  CHECK_THROWS_AS(bell_partial(2, 3, a), Error);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> r(8);
    for (int i = 1; i < 8; ++i) r[i] = Rational(d(rng), 1 + (d(rng) + 9) % 4);
    const auto table = bell_table(7, r);
    for (int k = 0; k <= 7; ++k)
      for (int j = 0; j <= k; ++j) REQUIRE(table[k][j] == bell_brute(k, j, r));
  }
}

TEST_CASE("C_2n on the reference grid") {
  for (int col = 0; col < 4; ++col) {
    const auto& c = published::table1_columns[col];
    const auto w = wojdylo_coefficients(local_series(solve_saddles_s3(c.a), c.y, 10), 5);
    for (int n = 0; n <= 5; ++n) {
      INFO("column " << col << " n=" << n);
      CHECK(std::abs(w.values[2 * n].real() - c.c2n[n]) <= 1e-9);
      CHECK(std::abs(w.values[2 * n].imag()) <= 1e-15);
    }
  }
  const LocalSeries ls = local_series(solve_saddles_s3(0.8), 0.3, 4);
  const auto w = wojdylo_coefficients(ls, 2);
  CHECK(std::abs(w.values[0] - ls.b_coeffs[0] / (2.0 * std::sqrt(ls.a_coeffs[0]))) < 1e-15);

  LocalSeries flat = ls;
  flat.a_coeffs[0] = 0.0;
  CHECK_THROWS_AS(wojdylo_coefficients(flat, 2), Error);
}

TEST_CASE("leading term of the fixed-y expansion") {
  const double a = 1.5, y = 1.25, x = 60.0;
  const SaddleSet s = solve_saddles_s3(a);
  const double t0 = s.t0.real();
  const double psi0 = a / (4 * t0 * (1 - t0)) - std::log(t0);
  const double lead = std::sqrt(2 * pi / (x * psi2_closed_form_s3(t0))) * std::pow(1 - t0, y - 1) / t0;
  const LogComplex want = LogComplex::from_complex(lead) * LogComplex(-x * psi0, 0.0);
  CHECK(relative_difference(expand_s3(x, y, a, 0).value, want) < 1e-13);
  CHECK_THROWS_AS(expand_s3(-3.0, y, a), Error);
}

TEST_CASE("fixed-y expansion improves with depth") {
  for (int col = 0; col < 4; ++col) {
    const auto& c = published::table1_columns[col];
    const LogComplex ref = oracle(100.0, c.y, 100.0 * c.a);
    double prev = 1.0;
    for (int n0 = 0; n0 <= 4; ++n0) {
      const double err = relative_difference(expand_s3(100.0, c.y, c.a, n0).value, ref);
      CHECK(err < prev);
      prev = err;
    }
  }
  // the expansion is for B(x,y;ax); the oracle with x and y exchanged agrees
  const auto e = expand_s3(80.0, 0.7, 1.2, 5);
  const LogComplex swapped = oracle(0.7, 80.0, 96.0);
  CHECK(relative_difference(e.value, swapped) <= e.error_estimate * 10);
  CHECK(relative_difference(e.value, swapped) < 1e-10);
}

TEST_CASE("proportional-y expansion at x = 80, n0 = 3 lies within its first omitted term") {
  const auto e = expand_s4(80.0, 0.5, 2.0, 3);
  CHECK(relative_difference(e.value, oracle(80.0, 160.0, 40.0)) <= e.error_estimate);
}

TEST_CASE("proportional-y expansion") {
  // C_8 is unusually small here, so bound by the next two omitted terms
  const LogComplex ref = oracle(80.0, 160.0, 40.0);
  const auto e3 = expand_s4(80.0, 0.5, 2.0, 3);
  const auto e4 = expand_s4(80.0, 0.5, 2.0, 4);
  CHECK(relative_difference(e3.value, ref) <= e3.error_estimate + e4.error_estimate);
  CHECK(relative_difference(e4.value, ref) <= e4.error_estimate);

  const SaddleSet s = solve_saddles_s4(0.5, 2.0);
  const LocalSeries ls = local_series(s, 2.0, 2);
  CHECK(2.0 * ls.a_coeffs[0].real() == doctest::Approx(psi2_closed_form_s4(s.t0.real(), 2.0)).epsilon(1e-12));

  // b -> 0: the leading term tends to that of the fixed-y case with (1-t)^{-1}/t, i.e. y = 0
  const double x = 50.0;
  const auto small_b = expand_s4(x, 0.3, 1e-8, 0);
  const auto s3 = expand_s3(x, 0.0, 0.3, 0);
  CHECK(relative_difference(small_b.value, s3.value) < 1e-5);
}

TEST_CASE("proportional-y expansion at b = 1 reproduces the Whittaker closed form") {
  for (double x : {20.0, 40.0}) {
    const double p = x;  // a = 1
    const auto e = expand_s4(x, 1.0, 1.0, 5);
    const LogComplex closed = LogComplex::from_log(cplx((1 - 2 * x) * std::log(2.0) + 0.5 * std::log(pi) +
                                                         (x - 1) / 2 * std::log(p) - p / 2, 0.0)) *
                              whittaker_w(-x / 2, x / 2, p);
    INFO("x=" << x << " estimate=" << e.error_estimate);
    CHECK(relative_difference(e.value, closed) <= e.error_estimate);
  }
}
