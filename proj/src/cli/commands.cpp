#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "genbeta/cli.hpp"
#include "genbeta/errors.hpp"
#include "genbeta/large_p.hpp"
#include "genbeta/published_tables.hpp"
#include "genbeta/reference_oracle.hpp"
#include "genbeta/saddle.hpp"
#include "genbeta/stokes.hpp"
#include "table2_reference.hpp"

namespace genbeta::cli {

namespace {

struct Options {
  std::string format = "text";
  double rel_tol = 1e-12;
  std::string precision = "auto";

  std::string method = "quadrature";
  std::string x, y, p;
  std::string xmod, theta;
  std::optional<double> a, b;
  int M = default_large_p_terms;
  int n0 = default_saddle_depth;
  int K = 40;
  std::optional<double> contour_c;
  double half_height = 0.0;
  int nodes = 64;

  std::string kind;
  std::vector<double> alphas;
  std::string alpha;
  int table_id = 0;
  bool regenerate_golden = false;
};

Error usage(const std::string& what) { return Error(ErrorKind::invalid_argument, what); }

cplx need_complex(const std::string& s, const char* name) {
  if (s.empty()) throw usage(std::string("--") + name + " is required");
  return parse_complex(s);
}

double need_real(const std::string& s, const char* name) {
  const cplx z = need_complex(s, name);
  if (z.imag() != 0.0) throw usage(std::string("--") + name + " must be real");
  return z.real();
}

double need_angle(const std::string& s) {
  if (s.empty()) throw usage("--theta is required");
  return parse_angle(s);
}

// + 0.0 turns a negative zero into +0 so output never shows "-0".
Json complex_json(cplx z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

QuadratureConfig quad_config(const Options& o, bool extended) {
  QuadratureConfig cfg = extended ? QuadratureConfig::extended(o.rel_tol) : QuadratureConfig{o.rel_tol};
  return cfg;
}

// "auto" tries double precision first and falls back to float128 when the
// tolerance needs it or the integrand cancels too much.
template <class F>
OracleValue with_precision(const Options& o, F f) {
  if (o.precision == "extended") return f(quad_config(o, true));
  if (o.precision == "standard") return f(quad_config(o, false));
  if (o.rel_tol < 1e-14) return f(quad_config(o, true));
  try {
    return f(quad_config(o, false));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::non_convergence) throw;
    return f(quad_config(o, true));
  }
}

double a_from(const Options& o, cplx x) {
  if (o.a) return *o.a;
  if (o.p.empty()) throw usage("give --a, or --p with a real ratio p/x");
  const cplx r = parse_complex(o.p) / x;
  if (std::abs(r.imag()) > 1e-15 * std::abs(r)) throw usage("p/x must be real for the saddle expansions; give --a");
  return r.real();
}

double b_from(const Options& o, cplx x) {
  if (o.b) return *o.b;
  if (o.y.empty()) throw usage("give --b, or --y with a real ratio y/x");
  const cplx r = parse_complex(o.y) / x;
  if (std::abs(r.imag()) > 1e-15 * std::abs(r)) throw usage("y/x must be real for the proportional-y expansion; give --b");
  return r.real();
}

Json cmd_eval(const Options& o) {
  Json doc;
  doc["command"] = "eval";
  doc["method"] = o.method;
  const std::string& m = o.method;

  if (m == "quadrature" && !o.xmod.empty()) {
    const double xmod = need_real(o.xmod, "xmod"), theta = need_angle(o.theta);
    const cplx y = need_complex(o.y, "y");
    const double p = need_real(o.p, "p");
    const auto v = with_precision(o, [&](const QuadratureConfig& c) { return b_euler_complex_x(xmod, theta, y, p, c); });
    doc["inputs"] = {{"xmod", xmod}, {"theta_over_pi", theta / pi}, {"y", complex_json(y)}, {"p", p}};
    doc["value"] = value_json(v.value);
    doc["error_estimate"] = v.rel_error;
    doc["panels"] = v.panels;
    return doc;
  }

  if (m == "stokes") {
    const double xmod = need_real(o.xmod, "xmod"), theta = need_angle(o.theta);
    const cplx y = need_complex(o.y, "y");
    const double p = need_real(o.p, "p");
    const auto r = asymptotic_b_complex_x(PhaseConfig::make(xmod, theta, y, p));
    doc["inputs"] = {{"xmod", xmod}, {"theta_over_pi", theta / pi}, {"y", complex_json(y)}, {"p", p}, {"alpha", p / (4.0 * xmod)}};
    doc["value"] = value_json(r.value);
    doc["error_estimate"] = nullptr;
    doc["regime"] = std::string(to_string(r.regime));
    doc["near_critical"] = r.near_critical;
    doc["branch_ambiguous"] = r.j0.branch_ambiguous || r.j1.branch_ambiguous;
    doc["theta0_over_pi"] = r.angles.theta0 / pi;
    doc["theta1_over_pi"] = r.angles.theta1 / pi;
    doc["j0"] = value_json(r.j0.value);
    doc["j1"] = value_json(r.j1.value);
    if (r.near_critical) doc["warning"] = "theta is within 1e-3 pi of a critical angle; the regime choice is discontinuous there";
    return doc;
  }

  const cplx x = need_complex(o.x, "x");
  if (m == "steepest-s3") {
    const cplx y = need_complex(o.y, "y");
    const double a = a_from(o, x);
    const auto r = expand_s3(x, y, a, o.n0);
    doc["inputs"] = {{"x", complex_json(x)}, {"y", complex_json(y)}, {"a", a}, {"n0", o.n0}};
    doc["value"] = value_json(r.value);
    doc["error_estimate"] = r.error_estimate;
    doc["terms_used"] = r.terms_used;
    return doc;
  }
  if (m == "steepest-s4") {
    const double a = a_from(o, x), b = b_from(o, x);
    const auto r = expand_s4(x, a, b, o.n0);
    doc["inputs"] = {{"x", complex_json(x)}, {"a", a}, {"b", b}, {"n0", o.n0}};
    doc["value"] = value_json(r.value);
    doc["error_estimate"] = r.error_estimate;
    doc["terms_used"] = r.terms_used;
    return doc;
  }

  const Parameters prm{x, need_complex(o.y, "y"), need_complex(o.p, "p")};
  doc["inputs"] = {{"x", complex_json(prm.x)}, {"y", complex_json(prm.y)}, {"p", complex_json(prm.p)}};
  if (m == "quadrature") {
    const auto v = with_precision(o, [&](const QuadratureConfig& c) { return b_euler(prm, c); });
    doc["value"] = value_json(v.value);
    doc["error_estimate"] = v.rel_error;
    doc["panels"] = v.panels;
  } else if (m == "mellin-barnes") {
    MBContour c = default_contour(prm);
    if (o.contour_c) c.c = *o.contour_c;
    c.half_height = o.half_height;
    c.nodes = o.nodes;
    const auto v = b_mellin_barnes(prm, c, o.rel_tol);
    doc["inputs"]["contour_c"] = c.c;
    doc["value"] = value_json(v.value);
    doc["error_estimate"] = v.rel_error;
    doc["nodes"] = v.panels;
  } else if (m == "large-p") {
    const auto r = expand_large_p(prm, o.M);
    doc["inputs"]["M"] = o.M;
    doc["value"] = value_json(r.value);
    doc["error_estimate"] = r.error_estimate;
    doc["terms_used"] = r.terms_used;
  } else if (m == "whittaker") {
    const auto r = whittaker_series(prm, o.K);
    doc["inputs"]["K"] = o.K;
    doc["value"] = value_json(r.value);
    doc["error_estimate"] = r.last_term_ratio;
    doc["terms_used"] = r.terms;
    doc["converged"] = r.converged;
    doc["swapped"] = r.swapped;
  } else {
    throw usage("unknown method '" + m + "'");
  }
  return doc;
}

Json coeff_rows(const std::vector<cplx>& v, int stride) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < v.size(); i += static_cast<std::size_t>(stride)) {
    rows.push_back({{"index", static_cast<int>(i)}, {"re", v[i].real()}, {"im", v[i].imag()}});
  }
  return rows;
}

Json cmd_coeffs(const Options& o) {
  Json doc;
  doc["command"] = "coeffs";
  const std::string kind = o.kind.empty() ? "large-p" : o.kind;
  doc["kind"] = kind;
  if (kind == "large-p") {
    const cplx x = need_complex(o.x, "x"), y = need_complex(o.y, "y");
    if (o.M < 1 || o.M > max_large_p_terms) throw usage("--M must lie in 1.." + std::to_string(max_large_p_terms));
    doc["inputs"] = {{"x", complex_json(x)}, {"y", complex_json(y)}, {"M", o.M}};
    doc["rows"] = coeff_rows(LargePCoefficients::compute(x, y, o.M).values, 1);
  } else if (kind == "s3" || kind == "s4") {
    if (!o.a) throw usage("--a is required");
    SaddleSet s;
    cplx y = 0.0;
    if (kind == "s3") {
      y = need_complex(o.y, "y");
      s = solve_saddles_s3(*o.a);
      doc["inputs"] = {{"a", *o.a}, {"y", complex_json(y)}, {"n0", o.n0}};
    } else {
      if (!o.b) throw usage("--b is required");
      s = solve_saddles_s4(*o.a, *o.b);
      doc["inputs"] = {{"a", *o.a}, {"b", *o.b}, {"n0", o.n0}};
    }
    const auto C = wojdylo_coefficients(local_series(s, y, 2 * o.n0), o.n0);
    doc["rows"] = coeff_rows(C.values, 2);
  } else {
    throw usage("unknown coefficient kind '" + kind + "'");
  }
  return doc;
}

Json root_row(const char* label, cplx t) { return {{"saddle", label}, {"re", t.real()}, {"im", t.imag()}}; }

Json cmd_saddles(const Options& o) {
  Json doc;
  doc["command"] = "saddles";
  const std::string kind = o.kind.empty() ? "stokes" : o.kind;
  doc["kind"] = kind;
  Json rows = Json::array();
  if (kind == "stokes") {
    const double alpha = need_real(o.alpha, "alpha"), theta = need_angle(o.theta);
    const auto s = saddles_complex(alpha, theta);
    doc["inputs"] = {{"alpha", alpha}, {"theta_over_pi", theta / pi}};
    doc["max_residual"] = s.max_residual;
    rows = {root_row("t0", s.t[0]), root_row("t1", s.t[1]), root_row("t2", s.t[2])};
  } else if (kind == "s3" || kind == "s4") {
    if (!o.a) throw usage("--a is required");
    SaddleSet s;
    if (kind == "s3") {
      s = solve_saddles_s3(*o.a);
      doc["inputs"] = {{"a", *o.a}};
    } else {
      if (!o.b) throw usage("--b is required");
      s = solve_saddles_s4(*o.a, *o.b);
      doc["inputs"] = {{"a", *o.a}, {"b", *o.b}};
    }
    doc["max_residual"] = s.max_residual;
    rows = {root_row("t0", s.t0), root_row("t1", s.t1), root_row("t2", s.t2)};
  } else {
    throw usage("unknown saddle kind '" + kind + "'");
  }
  doc["rows"] = rows;
  return doc;
}

Json cmd_critical_angles(const Options& o) {
  Json doc;
  doc["command"] = "critical-angles";
  std::vector<double> alphas = o.alphas;
  if (alphas.empty()) {
    for (const auto& r : published::table3_rows) alphas.push_back(r.alpha);
  }
  Json rows = Json::array();
  for (double a : alphas) {
    const auto c = critical_angles(a);
    rows.push_back({{"alpha", a},
                    {"theta0_over_pi", c.theta0 / pi},
                    {"theta_star_over_pi", c.theta_star / pi},
                    {"theta1_over_pi", c.theta1 / pi},
                    {"theta0_confirmed", c.theta0_confirmed}});
  }
  doc["rows"] = rows;
  return doc;
}

Json table1() {
  Json rows = Json::array();
  double worst = 0.0;
  for (const auto& col : published::table1_columns) {
    const auto C = wojdylo_coefficients(local_series(solve_saddles_s3(col.a), col.y, 10), 5);
    for (int n = 0; n <= 5; ++n) {
      const double v = C.values[2 * n].real();
      const double d = std::abs(v - col.c2n[n]);
      worst = std::max(worst, d);
      rows.push_back({{"a", col.a}, {"y", col.y}, {"coefficient", "C" + std::to_string(2 * n)}, {"computed", v}, {"published", col.c2n[n]}, {"abs_diff", d}});
    }
  }
  return {{"command", "table"}, {"table", 1}, {"max_abs_diff", worst}, {"rows", rows}};
}

LogComplex table2_reference(int col) {
  const auto& r = table2_reference_values[col];
  return LogComplex::from_log(r.log_mod, r.phase);
}

Json table2() {
  Json rows = Json::array();
  double worst_ratio = 1.0;
  for (int c = 0; c < 4; ++c) {
    const auto& col = published::table1_columns[c];
    const LogComplex ref = table2_reference(c);
    for (int n0 = 0; n0 <= 5; ++n0) {
      const double err = relative_difference(expand_s3(published::table2_x, col.y, col.a, n0).value, ref);
      const double ref = published::table2_rel_error[n0][c];
      const double ratio = std::max(err / ref, ref / err);
      worst_ratio = std::max(worst_ratio, ratio);
      rows.push_back({{"a", col.a}, {"y", col.y}, {"n0", n0}, {"computed", err}, {"published", ref}, {"ratio", ratio}});
    }
  }
  return {{"command", "table"}, {"table", 2}, {"x", published::table2_x}, {"max_ratio", worst_ratio}, {"rows", rows}};
}

Json table3() {
  Json rows = Json::array();
  double worst = 0.0;
  auto add = [&](double alpha, const char* q, double v, double ref) {
    const double d = std::abs(v - ref);
    worst = std::max(worst, d);
    rows.push_back({{"alpha", alpha}, {"angle", q}, {"computed_over_pi", v}, {"published_over_pi", ref}, {"abs_diff", d}});
  };
  for (const auto& r : published::table3_rows) {
    const auto c = critical_angles(r.alpha);
    add(r.alpha, "theta0", c.theta0 / pi, r.theta0);
    add(r.alpha, "theta1", c.theta1 / pi, r.theta1);
    add(r.alpha, "theta_star", c.theta_star / pi, r.theta_star);
  }
  return {{"command", "table"}, {"table", 3}, {"max_abs_diff", worst}, {"rows", rows}};
}

Json table4(const Options& o) {
  Json rows = Json::array();
  const double xmod = published::table4_xmod, p = published::table4_p, y = published::table4_y;
  const auto angles = critical_angles(p / (4.0 * xmod));
  double worst_asym = 0.0, worst_calc = 0.0;
  for (const auto& r : published::table4_rows) {
    const double theta = r.theta * pi;
    const cplx asym = asymptotic_b_complex_x(PhaseConfig::make(xmod, theta, y, p), angles).value.to_complex();
    const cplx calc = with_precision(o, [&](const QuadratureConfig& c) { return b_euler_complex_x(xmod, theta, y, p, c); }).value.to_complex();
    const double da = std::abs(asym - r.asymptotic) / std::abs(r.asymptotic);
    const double dc = std::abs(calc - r.calculated) / std::abs(r.calculated);
    worst_asym = std::max(worst_asym, da);
    worst_calc = std::max(worst_calc, dc);
    rows.push_back({{"theta_over_pi", r.theta},
                    {"asymptotic", complex_json(asym)},
                    {"published_asymptotic", complex_json(r.asymptotic)},
                    {"asymptotic_rel_diff", da},
                    {"calculated", complex_json(calc)},
                    {"published_calculated", complex_json(r.calculated)},
                    {"calculated_rel_diff", dc}});
  }
  return {{"command", "table"},
          {"table", 4},
          {"xmod", xmod},
          {"p", p},
          {"y", y},
          {"max_asymptotic_rel_diff", worst_asym},
          {"max_calculated_rel_diff", worst_calc},
          {"rows", rows}};
}

// Prints a fresh table2_reference.hpp computed by the float128 oracle.
std::string regenerate_table2() {
  std::string s =
      "#pragma once\n\n"
      "#include <array>\n\n"
      "// B(100, y; 100a) for the four (a, y) columns, from the float128 Euler\n"
      "// quadrature at rel_tol 1e-22. Regenerate with `genbeta table 2 --regenerate-golden`.\n"
      "namespace genbeta::cli {\n\n"
      "struct Table2Reference {\n  long double log_mod;\n  double phase;\n};\n\n"
      "inline constexpr std::array<Table2Reference, 4> table2_reference_values = {{\n";
  for (const auto& col : published::table1_columns) {
    const auto v = b_euler({published::table2_x, col.y, published::table2_x * col.a}, QuadratureConfig::extended(1e-22));
    char buf[160];
    std::snprintf(buf, sizeof buf, "    {%.25LgL, %.17g},\n", v.value.log_mod_extended(), v.value.phase());
    s += buf;
  }
  s += "}};\n\n}  // namespace genbeta::cli\n";
  return s;
}

Json cmd_table(const Options& o) {
  switch (o.table_id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return table4(o);
    default: throw usage("table id must be 1, 2, 3 or 4");
  }
}

Json cmd_paths(const Options& o) {
  const double alpha = need_real(o.alpha, "alpha"), theta = need_angle(o.theta);
  const std::string kind = o.kind.empty() ? "both" : o.kind;
  if (kind != "both" && kind != "descent" && kind != "ascent") throw usage("--kind must be descent, ascent or both");
  Json rows = Json::array(), traces = Json::array();
  auto emit = [&](const PathTrace& tr, int saddle) {
    const std::string label = "t" + std::to_string(saddle);
    const std::string branch = std::string(tr.descent ? "descent" : "ascent") + (tr.direction_sign > 0 ? "+" : "-");
    traces.push_back({{"saddle", label}, {"branch", branch}, {"terminus", std::string(to_string(tr.terminus))}, {"points", tr.points.size()}});
    for (std::size_t i = 0; i < tr.points.size(); ++i) {
      rows.push_back({{"saddle", label}, {"branch", branch}, {"index", i}, {"re_t", tr.points[i].real()}, {"im_t", tr.points[i].imag()}, {"terminus", std::string(to_string(tr.terminus))}});
    }
  };
  for (int s : {0, 1}) {
    if (kind != "ascent") {
      const auto d = trace_descent(alpha, theta, s);
      emit(d.first, s);
      emit(d.second, s);
    }
    if (kind != "descent") {
      const auto a = trace_ascent(alpha, theta, s);
      emit(a.first, s);
      emit(a.second, s);
    }
  }
  return {{"command", "paths"}, {"alpha", alpha}, {"theta_over_pi", theta / pi}, {"traces", traces}, {"rows", rows}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised Beta function B(x,y;p): reference values, asymptotic expansions and Stokes analysis"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("GENBETA_REL_TOL")) {
    try {
      o.rel_tol = std::stod(env);
    } catch (const std::exception&) {
      err << "error: GENBETA_REL_TOL is not a number\n";
      return 2;
    }
  }
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--rel-tol", o.rel_tol, "Relative tolerance for quadrature (default from GENBETA_REL_TOL, else 1e-12)");
  app.add_option("--precision", o.precision, "Quadrature working precision")->check(CLI::IsMember({"auto", "standard", "extended"}));
  app.fallthrough();

  auto add_xyp = [&](CLI::App* c) {
    c->add_option("--x", o.x, "Complex x, e.g. 0.4+2i");
    c->add_option("--y", o.y, "Complex y");
    c->add_option("--p", o.p, "Complex p");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate B(x,y;p) by one method");
  eval->add_option("--method", o.method, "Method")
      ->check(CLI::IsMember({"quadrature", "mellin-barnes", "large-p", "steepest-s3", "steepest-s4", "stokes", "whittaker"}));
  add_xyp(eval);
  eval->add_option("--xmod", o.xmod, "|x| for complex-phase evaluation");
  eval->add_option("--theta", o.theta, "arg x in units of pi (e.g. 0.4 or 0.4pi)");
  eval->add_option("--a", o.a, "a = p/x for the saddle expansions");
  eval->add_option("--b", o.b, "b = y/x for the proportional-y expansion");
  eval->add_option("--M", o.M, "Terms of the large-p expansion");
  eval->add_option("--n0", o.n0, "Depth of the saddle expansions");
  eval->add_option("--K", o.K, "Maximum terms of the Whittaker series");
  eval->add_option("--contour-c", o.contour_c, "Abscissa of the Mellin-Barnes line");
  eval->add_option("--half-height", o.half_height, "Truncation of the Mellin-Barnes line (0 = automatic)");
  eval->add_option("--nodes", o.nodes, "Initial Mellin-Barnes panels");

  auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients");
  coeffs->add_option("--kind", o.kind, "large-p (c_j), s3 or s4 (C_2n)")->check(CLI::IsMember({"large-p", "s3", "s4"}));
  add_xyp(coeffs);
  coeffs->add_option("--a", o.a, "a");
  coeffs->add_option("--b", o.b, "b");
  coeffs->add_option("--M", o.M, "Number of c_j");
  coeffs->add_option("--n0", o.n0, "Largest n of C_2n");

  auto* saddles = app.add_subcommand("saddles", "Saddle points");
  saddles->add_option("--kind", o.kind, "s3, s4 or stokes")->check(CLI::IsMember({"s3", "s4", "stokes"}));
  saddles->add_option("--a", o.a, "a");
  saddles->add_option("--b", o.b, "b");
  saddles->add_option("--alpha", o.alpha, "alpha = p/(4|x|)");
  saddles->add_option("--theta", o.theta, "arg x in units of pi");

  auto* crit = app.add_subcommand("critical-angles", "Critical angles theta0, theta*, theta1");
  crit->add_option("--alpha", o.alphas, "alpha values (default: the published grid)");

  auto* table = app.add_subcommand("table", "Regenerate a published table with side-by-side comparison");
  table->add_option("id", o.table_id, "1, 2, 3 or 4")->required();
  table->add_flag("--regenerate-golden", o.regenerate_golden)->group("");

  auto* paths = app.add_subcommand("paths", "Steepest descent and ascent paths");
  paths->add_option("--alpha", o.alpha, "alpha = p/(4|x|)");
  paths->add_option("--theta", o.theta, "arg x in units of pi");
  paths->add_option("--kind", o.kind, "descent, ascent or both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format format = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::text;
  try {
    if (!(o.rel_tol > 0.0)) throw usage("--rel-tol must be positive");
    Json doc;
    if (eval->parsed()) {
      doc = cmd_eval(o);
    } else if (coeffs->parsed()) {
      doc = cmd_coeffs(o);
    } else if (saddles->parsed()) {
      doc = cmd_saddles(o);
    } else if (crit->parsed()) {
      doc = cmd_critical_angles(o);
    } else if (table->parsed()) {
      if (o.regenerate_golden) {
        if (o.table_id != 2) throw usage("--regenerate-golden applies to table 2");
        out << regenerate_table2();
        return 0;
      }
      doc = cmd_table(o);
    } else {
      doc = cmd_paths(o);
    }
    if (doc.contains("warning")) err << "warning: " << doc["warning"].get<std::string>() << '\n';
    out << render(doc, format);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::invalid_argument ? 2 : 1;
  }
}

}  // namespace genbeta::cli
