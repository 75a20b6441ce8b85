#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadform/bench.hpp"
#include "quadform/classify.hpp"
#include "quadform/muller.hpp"
#include "quadform/solvers.hpp"
#include "quadform/well.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace quadform;

constexpr int kTextDigits = 6;

// ---------------------------------------------------------------------------
// parsing helpers

// Accepts "1.5", "1,2" and "(1,2)" (the latter two meaning 1+2i).
std::optional<Complex> parse_complex(std::string text) {
  auto trim = [](std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
  };
  trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  auto parse_real = [&trim](std::string part) -> std::optional<double> {
    trim(part);
    if (part.empty()) {
      return std::nullopt;
    }
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end != part.c_str() + part.size()) {
      return std::nullopt;
    }
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    const auto re = parse_real(text);
    if (!re) {
      return std::nullopt;
    }
    return Complex(*re);
  }
  if (text.find(',', comma + 1) != std::string::npos) {
    return std::nullopt;
  }
  const auto re = parse_real(text.substr(0, comma));
  const auto im = parse_real(text.substr(comma + 1));
  if (!re || !im) {
    return std::nullopt;
  }
  return Complex(*re, *im);
}

// Comma-separated coefficients, highest degree first.  Complex entries must be
// parenthesized, e.g. "(0,1),0,(0,-1)"; bare entries are real.
std::optional<std::vector<Complex>> parse_poly(const std::string& text) {
  std::vector<Complex> out;
  std::string token;
  int depth = 0;
  auto flush = [&]() -> bool {
    const auto z = parse_complex(token);
    token.clear();
    if (!z) {
      return false;
    }
    out.push_back(*z);
    return true;
  };
  for (char ch : text) {
    if (ch == '(') {
      ++depth;
    } else if (ch == ')') {
      --depth;
    }
    if (ch == ',' && depth == 0) {
      if (!flush()) {
        return std::nullopt;
      }
      continue;
    }
    token += ch;
  }
  if (depth != 0 || !flush() || out.empty()) {
    return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------------
// formatting helpers

std::string fmt_double(double v, int digits) {
  if (v == 0.0) {
    v = 0.0;  // display -0 as 0
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fmt_complex(Complex z, int digits) {
  if (z.imag() == 0.0) {
    return fmt_double(z.real(), digits);
  }
  const std::string re = fmt_double(z.real(), digits);
  const std::string im = fmt_double(std::abs(z.imag()), digits);
  return re + (std::signbit(z.imag()) ? " - " : " + ") + im + "i";
}

json jcomplex(Complex z) { return json::array({z.real(), z.imag()}); }

void emit(const json& doc, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------------------
// solve

struct MethodReport {
  std::string name;
  bool applicable = false;
  std::string reason;
  RootPair roots;
  std::optional<NormalUV> uv;          // echoed for the symmetric form
  std::optional<TrigHypParam> param;   // echoed for tanh/tan forms
};

MethodReport run_method(const std::string& name, const Quadratic& eq) {
  MethodReport rep;
  rep.name = name;
  // The tanh/tan forms assume a > 0; flip an all-real equation first.
  Quadratic local = eq;
  if ((name == "hyperbolic" || name == "trigonometric") &&
      eq.a.imag() == 0.0 && eq.b.imag() == 0.0 && eq.c.imag() == 0.0 &&
      eq.a.real() < 0.0) {
    local = Quadratic{-eq.a, -eq.b, -eq.c};
  }
  try {
    if (name == "classical") {
      rep.roots = solve_classical(local);
    } else if (name == "reciprocal") {
      rep.roots = solve_reciprocal(local);
    } else if (name == "alternative") {
      const NormalUV uv = to_uv(local);
      rep.uv = uv;
      rep.roots = solve_alternative(uv);
    } else if (name == "hyperbolic") {
      rep.param = hyperbolic_param(local);
      rep.roots = solve_hyperbolic(local);
    } else if (name == "trigonometric") {
      rep.param = trigonometric_param(local);
      rep.roots = solve_trigonometric(local);
    } else {
      rep.roots = solve_robust(local);
    }
    rep.applicable = true;
  } catch (const SolveError& err) {
    if (err.kind() == ErrorKind::no_root) {
      throw;  // a = b = 0 is an input failure, not a method mismatch
    }
    rep.reason = err.what();
  }
  return rep;
}

int run_solve(const std::string& a_str, const std::string& b_str,
              const std::string& c_str, const std::string& method,
              bool as_json) {
  const auto a = parse_complex(a_str);
  const auto b = parse_complex(b_str);
  const auto c = parse_complex(c_str);
  if (!a || !b || !c) {
    std::cerr << "error: --a, --b, --c must be real or \"re,im\" numbers\n";
    return 2;
  }
  const Quadratic eq{*a, *b, *c};

  std::vector<std::string> methods;
  if (method == "all") {
    methods = {"classical",  "reciprocal",    "alternative",
               "hyperbolic", "trigonometric", "robust"};
  } else {
    methods = {method};
  }

  std::vector<MethodReport> reports;
  try {
    for (const auto& name : methods) {
      reports.push_back(run_method(name, eq));
    }
  } catch (const SolveError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }

  json doc;
  doc["command"] = "solve";
  doc["a"] = jcomplex(eq.a);
  doc["b"] = jcomplex(eq.b);
  doc["c"] = jcomplex(eq.c);
  doc["method"] = method;
  doc["results"] = json::array();

  std::ostringstream text;
  text << "equation: a = " << fmt_complex(eq.a, kTextDigits)
       << ", b = " << fmt_complex(eq.b, kTextDigits)
       << ", c = " << fmt_complex(eq.c, kTextDigits) << "\n";

  bool any_ok = false;
  for (const MethodReport& rep : reports) {
    json jr;
    jr["method"] = rep.name;
    jr["applicable"] = rep.applicable;
    if (!rep.applicable) {
      jr["reason"] = rep.reason;
      doc["results"].push_back(jr);
      text << rep.name << ": not applicable (" << rep.reason << ")\n";
      continue;
    }
    any_ok = true;
    const RootPair& r = rep.roots;
    jr["x1"] = jcomplex(r.x1);
    jr["x2"] = r.is_degenerate_linear ? json() : jcomplex(r.x2);
    jr["is_double"] = r.is_double;
    jr["is_degenerate_linear"] = r.is_degenerate_linear;
    jr["abs_residuals"] = json::array();
    jr["abs_residuals"].push_back(std::abs(residual(eq, r.x1)));
    if (!r.is_degenerate_linear) {
      jr["abs_residuals"].push_back(std::abs(residual(eq, r.x2)));
    }
    if (rep.uv) {
      jr["u"] = jcomplex(rep.uv->u);
      jr["v"] = jcomplex(rep.uv->v);
    }
    if (rep.param) {
      jr["alpha"] = rep.param->alpha;
      jr["d"] = rep.param->d;
      jr["scale"] = rep.param->scale;
    }
    doc["results"].push_back(jr);

    text << rep.name << ": ";
    if (r.is_degenerate_linear) {
      text << "x = " << fmt_complex(r.x1, kTextDigits)
           << " (degenerate linear, single root)";
    } else {
      text << "x1 = " << fmt_complex(r.x1, kTextDigits)
           << ", x2 = " << fmt_complex(r.x2, kTextDigits);
      if (r.is_double) {
        text << " (double root)";
      }
    }
    text << ", |residual| = " << fmt_double(std::abs(residual(eq, r.x1)), kTextDigits);
    if (!r.is_degenerate_linear) {
      text << ", " << fmt_double(std::abs(residual(eq, r.x2)), kTextDigits);
    }
    if (rep.uv) {
      text << "\n  u = " << fmt_complex(rep.uv->u, kTextDigits)
           << ", v = " << fmt_complex(rep.uv->v, kTextDigits);
    }
    if (rep.param) {
      text << "\n  alpha = " << fmt_double(rep.param->alpha, kTextDigits)
           << ", d = " << fmt_double(rep.param->d, kTextDigits)
           << ", scale = " << fmt_double(rep.param->scale, kTextDigits);
    }
    text << "\n";
  }

  emit(doc, as_json, text.str());
  return any_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify

int run_classify(double u, double v2, double tol, bool as_json) {
  if (!(tol >= 0.0)) {
    std::cerr << "error: --tol must be >= 0\n";
    return 2;
  }
  const Classification cls = classify(u, v2, tol);

  json doc;
  doc["command"] = "classify";
  doc["u"] = u;
  doc["v2"] = v2;
  doc["tol"] = tol;
  doc["kind"] = to_string(cls.kind);
  if (cls.double_value) {
    doc["double_value"] = *cls.double_value;
  }

  std::ostringstream text;
  text << "verdict: " << to_string(cls.kind) << "\n";
  if (cls.double_value) {
    text << "double value: " << fmt_double(*cls.double_value, kTextDigits)
         << "\n";
  }
  emit(doc, as_json, text.str());
  return 0;
}

// ---------------------------------------------------------------------------
// well

int run_well(double t, double c, double g, std::optional<int> series_order,
             bool as_json) {
  if (t < 0.0 || c <= 0.0 || g <= 0.0) {
    std::cerr << "error: need t >= 0, c > 0, g > 0\n";
    return 2;
  }
  const WellParams params{t, c, g};
  const WellSolution sol = well_depth(params);

  json doc;
  doc["command"] = "well";
  doc["t"] = t;
  doc["c"] = c;
  doc["g"] = g;
  doc["depth"] = sol.depth;
  doc["other_root"] = sol.other_root;
  doc["fall_time"] = sol.fall_time;
  doc["sound_time"] = sol.sound_time;
  doc["tau"] = sol.tau;
  doc["char_length"] = sol.char_length;

  std::ostringstream text;
  text << "depth = " << fmt_double(sol.depth, kTextDigits) << " m\n"
       << "fall time = " << fmt_double(sol.fall_time, kTextDigits) << " s\n"
       << "sound time = " << fmt_double(sol.sound_time, kTextDigits) << " s\n"
       << "tau = " << fmt_double(sol.tau, kTextDigits) << " s\n"
       << "char length = " << fmt_double(sol.char_length, kTextDigits) << " m\n"
       << "other root = " << fmt_double(sol.other_root, kTextDigits)
       << " m (not physical)\n";
  if (series_order) {
    const double s = well_series(params, *series_order);
    doc["series_order"] = *series_order;
    doc["series_value"] = s;
    doc["series_deviation"] = s - sol.depth;
    text << "series(order " << *series_order
         << ") = " << fmt_double(s, kTextDigits) << " m, deviation = "
         << fmt_double(s - sol.depth, kTextDigits) << " m\n";
  }
  emit(doc, as_json, text.str());
  return 0;
}

// ---------------------------------------------------------------------------
// muller

int run_muller(const std::string& poly_str, const std::string& x0_str,
               const std::string& x1_str, const std::string& x2_str,
               double tol, int max_iter, bool as_json) {
  const auto poly = parse_poly(poly_str);
  if (!poly) {
    std::cerr << "error: --poly expects comma-separated coefficients, "
                 "complex ones parenthesized like (re,im)\n";
    return 2;
  }
  const auto x0 = parse_complex(x0_str);
  const auto x1 = parse_complex(x1_str);
  const auto x2 = parse_complex(x2_str);
  if (!x0 || !x1 || !x2) {
    std::cerr << "error: --x0, --x1, --x2 must be real or \"re,im\" numbers\n";
    return 2;
  }
  if (max_iter < 1 || !(tol >= 0.0)) {
    std::cerr << "error: need --max-iter >= 1 and --tol >= 0\n";
    return 2;
  }

  const auto f = [&poly](Complex x) {
    Complex acc = 0.0;
    for (Complex coeff : *poly) {
      acc = acc * x + coeff;
    }
    return acc;
  };

  MullerOptions opts;
  opts.residual_tol = tol;
  opts.max_iter = max_iter;
  MullerResult res;
  try {
    res = muller_solve(f, *x0, *x1, *x2, opts);
  } catch (const SolveError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }

  json doc;
  doc["command"] = "muller";
  doc["poly"] = json::array();
  for (Complex coeff : *poly) {
    doc["poly"].push_back(jcomplex(coeff));
  }
  doc["x0"] = jcomplex(*x0);
  doc["x1"] = jcomplex(*x1);
  doc["x2"] = jcomplex(*x2);
  doc["residual_tol"] = opts.residual_tol;
  doc["step_tol"] = opts.step_tol;
  doc["max_iter"] = opts.max_iter;
  doc["root"] = jcomplex(res.root);
  doc["residual"] = jcomplex(res.residual);
  doc["abs_residual"] = std::abs(res.residual);
  doc["iterations"] = res.iterations;
  doc["converged"] = res.converged;

  std::ostringstream text;
  text << "root = " << fmt_complex(res.root, kTextDigits) << "\n"
       << "|residual| = " << fmt_double(std::abs(res.residual), kTextDigits)
       << "\n"
       << "iterations = " << res.iterations << "\n"
       << "converged = " << (res.converged ? "yes" : "no") << "\n";
  emit(doc, as_json, text.str());
  return res.converged ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

int run_bench_cmd(const std::string& family_str, double param, int count,
                  std::uint64_t seed, const std::string& methods_str,
                  const std::string& out_path, const std::string& format) {
  BenchFamilyName family_name;
  if (!parse_family(family_str, family_name)) {
    std::cerr << "error: unknown family \"" << family_str << "\"\n";
    return 2;
  }
  std::vector<BenchMethod> methods;
  {
    std::stringstream ss(methods_str);
    std::string item;
    while (std::getline(ss, item, ',')) {
      BenchMethod m;
      if (!parse_method(item, m)) {
        std::cerr << "error: unknown method \"" << item << "\"\n";
        return 2;
      }
      methods.push_back(m);
    }
  }
  if (methods.empty()) {
    std::cerr << "error: --methods must name at least one method\n";
    return 2;
  }

  const BenchFamily family{family_name, param, count, seed};
  std::vector<BenchRecord> records;
  try {
    records = run_bench(family, methods);
  } catch (const SolveError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  std::ostringstream body;
  if (format == "json") {
    json doc;
    doc["command"] = "bench";
    doc["family"] = to_string(family_name);
    doc["parameter"] = param;
    doc["count"] = count;
    doc["seed"] = seed;
    doc["rng"] = kBenchRngName;
    doc["methods"] = json::array();
    for (BenchMethod m : methods) {
      doc["methods"].push_back(to_string(m));
    }
    doc["records"] = json::array();
    for (const BenchRecord& r : records) {
      json jr;
      jr["instance_id"] = r.instance_id;
      jr["method"] = to_string(r.method);
      jr["root_index"] = to_string(r.root_index);
      jr["rel_error"] = r.rel_error ? json(*r.rel_error) : json();
      jr["oracle_precision_bits"] = r.oracle_precision_bits;
      doc["records"].push_back(jr);
    }
    body << doc.dump(2) << "\n";
  } else {
    write_csv(body, records);
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 1;
    }
    out << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic equation toolkit: direct solvers, root "
               "classification, Muller iteration, the falling-stone well "
               "problem, and an accuracy benchmark"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a x^2 + b x + c = 0");
  std::string a_str, b_str, c_str;
  std::string method = "robust";
  std::string solve_format = "text";
  solve->add_option("--a", a_str, "coefficient a, real or re,im")->required();
  solve->add_option("--b", b_str, "coefficient b, real or re,im")->required();
  solve->add_option("--c", c_str, "coefficient c, real or re,im")->required();
  solve->add_option("--method", method, "solution method")
      ->check(CLI::IsMember({"classical", "reciprocal", "alternative",
                             "hyperbolic", "trigonometric", "robust", "all"}));
  solve->add_option("--format", solve_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // classify
  auto* cls = app.add_subcommand(
      "classify", "root type of x^2 - 4 u x + 4 v^2 = 0 from real u, v^2");
  double u = 0.0, v2 = 0.0, ctol = kClassifyTol;
  std::string cls_format = "text";
  cls->add_option("--u", u, "u coefficient")->required();
  cls->add_option("--v2", v2, "v squared")->required();
  cls->add_option("--tol", ctol, "boundary tolerance");
  cls->add_option("--format", cls_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // well
  auto* well = app.add_subcommand(
      "well", "depth of a well from the time until a dropped stone is heard");
  double t = 0.0, c_sound = 343.0, g = 9.81;
  std::optional<int> series_order;
  std::string well_format = "text";
  well->add_option("--t", t, "seconds until the sound arrives")->required();
  well->add_option("--c", c_sound, "speed of sound, m/s");
  well->add_option("--g", g, "gravitational acceleration, m/s^2");
  well->add_option("--series", series_order,
                   "also print the series approximation of this order")
      ->check(CLI::IsMember({2, 3}));
  well->add_option("--format", well_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // muller
  auto* muller = app.add_subcommand(
      "muller", "find a polynomial root with Muller's method");
  std::string poly_str, x0_str, x1_str, x2_str;
  double mtol = 1e-12;
  int max_iter = 100;
  std::string muller_format = "text";
  muller
      ->add_option("--poly", poly_str,
                   "coefficients, highest degree first; complex entries "
                   "parenthesized like (re,im)")
      ->required();
  muller->add_option("--x0", x0_str, "first start point")->required();
  muller->add_option("--x1", x1_str, "second start point")->required();
  muller->add_option("--x2", x2_str, "third start point")->required();
  muller->add_option("--tol", mtol, "residual tolerance");
  muller->add_option("--max-iter", max_iter, "iteration limit");
  muller->add_option("--format", muller_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // bench
  auto* bench = app.add_subcommand(
      "bench", "accuracy benchmark against the extended-precision oracle");
  std::string family_str, out_path;
  std::string methods_str = "classical,reciprocal,alternative,robust,trig_hyp";
  std::string bench_format = "csv";
  double param = 0.0;
  int count = 100;
  std::uint64_t seed = 0;
  bench->add_option("--family", family_str, "instance family")->required();
  bench->add_option("--param", param, "family severity parameter (eps)");
  bench->add_option("--count", count, "number of instances");
  bench->add_option("--seed", seed, "generator seed");
  bench->add_option("--methods", methods_str, "comma-separated method list");
  bench->add_option("--out", out_path, "write output to this file");
  bench->add_option("--format", bench_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (solve->parsed()) {
    return run_solve(a_str, b_str, c_str, method, solve_format == "json");
  }
  if (cls->parsed()) {
    return run_classify(u, v2, ctol, cls_format == "json");
  }
  if (well->parsed()) {
    return run_well(t, c_sound, g, series_order, well_format == "json");
  }
  if (muller->parsed()) {
    return run_muller(poly_str, x0_str, x1_str, x2_str, mtol, max_iter,
                      muller_format == "json");
  }
  if (bench->parsed()) {
    return run_bench_cmd(family_str, param, count, seed, methods_str, out_path,
                         bench_format);
  }
  return 2;
}
