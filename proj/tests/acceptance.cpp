// Acceptance gate: one self-contained check per release criterion, each
// printing a single PASS or FAIL line.  Exit status is the failure count.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quadform/bench.hpp"
#include "quadform/classify.hpp"
#include "quadform/muller.hpp"
#include "quadform/solvers.hpp"
#include "quadform/well.hpp"

using namespace quadform;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// --------------------------------------------------------------------------
// 1. Five solvers return the same root multiset on 1e5 random quadratics.

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(1001);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  auto logu = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, unit(gen));
  };

  const int trials = 100000;
  int mismatches = 0;
  for (int k = 0; k < trials; ++k) {
    const Complex a = std::polar(logu(0.1, 10.0), phase(gen));
    const Complex x1 = std::polar(logu(0.01, 100.0), phase(gen));
    Complex x2 = std::polar(logu(0.01, 100.0), phase(gen));
    while (std::abs(x1 - x2) < 1e-6 * std::max(std::abs(x1), std::abs(x2))) {
      x2 = std::polar(logu(0.01, 100.0), phase(gen));
    }
    const Quadratic eq{a, -a * (x1 + x2), a * (x1 * x2)};
    const RootPair ref = solve_classical(eq);
    if (!same_roots(solve_reciprocal(eq), ref, 1e-9) ||
        !same_roots(solve_pq(to_pq(eq)), ref, 1e-9) ||
        !same_roots(solve_alternative(to_uv(eq)), ref, 1e-9) ||
        !same_roots(solve_robust(eq), ref, 1e-9)) {
      ++mismatches;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {mismatches == 0 && secs <= 10.0,
          fmt("%d mismatches in %d random quadratics, five methods, 1e-9 "
              "tolerance, %.2f s (limit 10 s)",
              mismatches, trials, secs)};
}

// --------------------------------------------------------------------------
// 2. a = 0 collapses to the linear root -c/b at full working precision.

Outcome criterion2() {
  std::mt19937_64 gen(1002);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    const double mag = 1e-3 * std::pow(1e6, unit(gen));
    return (gen() & 1u) ? -mag : mag;
  };

  const int trials = 10000;
  int bad = 0;
  for (int k = 0; k < trials; ++k) {
    const double b = draw();
    const double c = draw();
    const Complex expected(-(c / b));
    for (const RootPair& r :
         {solve_reciprocal({0, b, c}), solve_robust({0, b, c})}) {
      if (!r.is_degenerate_linear || r.x1 != expected) {
        ++bad;
      }
    }
  }
  return {bad == 0,
          fmt("%d of %d linear cases off the exact -c/b double, reciprocal "
              "and robust paths",
              bad, 2 * trials)};
}

// --------------------------------------------------------------------------
// 3. Cancellation family: robust and reciprocal beat classical by >= 1e8.

Outcome criterion3() {
  const BenchFamily family{BenchFamilyName::cancellation_small_root, 1e-12,
                           1000, 42};
  const auto records = run_bench(
      family,
      {BenchMethod::classical, BenchMethod::reciprocal, BenchMethod::robust});

  auto median_small = [&records](BenchMethod m) {
    std::vector<double> v;
    for (const BenchRecord& r : records) {
      if (r.method == m && r.root_index == RootIndex::small && r.rel_error) {
        v.push_back(*r.rel_error);
      }
    }
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };

  const double med_classical = median_small(BenchMethod::classical);
  const double med_reciprocal = median_small(BenchMethod::reciprocal);
  const double med_robust = median_small(BenchMethod::robust);
  const double ratio =
      med_classical / std::max(std::max(med_reciprocal, med_robust), 1e-17);
  const bool pass = med_robust <= 1e-14 && med_reciprocal <= 1e-14 &&
                    med_classical >= 1e-5 && ratio >= 1e8;
  return {pass,
          fmt("small-root median rel error: classical %.3g, reciprocal %.3g, "
              "robust %.3g, ratio %.3g (need <=1e-14, <=1e-14, >=1e-5, >=1e8)",
              med_classical, med_reciprocal, med_robust, ratio)};
}

// --------------------------------------------------------------------------
// 4. tanh/tan parametrizations match classical; normalized Vieta products.

Outcome criterion4() {
  std::mt19937_64 gen(1004);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto logu = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, unit(gen));
  };

  const int trials = 10000;
  int mismatches = 0;
  int vieta_bad = 0;
  for (int k = 0; k < trials; ++k) {
    const double sgn = (gen() & 1u) ? -1.0 : 1.0;
    const double m1 = logu(0.1, 10.0);
    double m2 = logu(0.1, 10.0);
    while (std::abs(m1 - m2) < 1e-3 * std::max(m1, m2)) {
      m2 = logu(0.1, 10.0);
    }
    const double a = logu(0.1, 10.0);

    // Same-sign real roots: the tanh branch applies.
    {
      const double x1 = sgn * m1, x2 = sgn * m2;
      const Quadratic eq{a, -a * (x1 + x2), a * x1 * x2};
      const RootPair r = solve_hyperbolic(eq);
      if (!same_roots(r, solve_classical(eq), 1e-9)) {
        ++mismatches;
      }
      const double scale = hyperbolic_param(eq).scale;
      if (std::abs((r.x1 * r.x2).real() / (scale * scale) - 1.0) > 1e-12) {
        ++vieta_bad;
      }
    }
    // Opposite-sign real roots: the tan branch applies.
    {
      const double x1 = m1, x2 = -m2;
      const Quadratic eq{a, -a * (x1 + x2), a * x1 * x2};
      const RootPair r = solve_trigonometric(eq);
      if (!same_roots(r, solve_classical(eq), 1e-9)) {
        ++mismatches;
      }
      const double scale = trigonometric_param(eq).scale;
      if (std::abs((r.x1 * r.x2).real() / (scale * scale) + 1.0) > 1e-12) {
        ++vieta_bad;
      }
    }
  }
  return {mismatches == 0 && vieta_bad == 0,
          fmt("%d root mismatches vs classical, %d normalized Vieta products "
              "off by more than 1e-12, over %d tanh and %d tan instances",
              mismatches, vieta_bad, trials, trials)};
}

// --------------------------------------------------------------------------
// 5. Classification grid vs verdicts recomputed from the actual roots.

Outcome criterion5() {
  int compared = 0;
  int excluded = 0;
  int disagreements = 0;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double u = (i - 50) / 10.0;
      const double v2 = (j - 50) / 10.0;
      if (std::abs(u * u - v2) <= 1e-9 * std::max({1.0, u * u, std::abs(v2)}) ||
          std::abs(v2) <= 1e-9) {
        ++excluded;  // too close to a verdict boundary to call
        continue;
      }
      const RootPair r =
          solve_alternative({Complex(u), principal_sqrt(Complex(v2))});
      const double big = std::max(std::abs(r.x1), std::abs(r.x2));
      const bool real = std::max(std::abs(r.x1.imag()), std::abs(r.x2.imag())) <=
                        1e-9 * (1.0 + big);
      RootKind expected = RootKind::complex_conjugate_pair;
      if (real) {
        expected = (r.x1.real() * r.x2.real() < 0.0)
                       ? RootKind::two_real_opposite_sign
                       : RootKind::two_distinct_real;
      }
      ++compared;
      if (classify(u, v2, 0.0).kind != expected) {
        ++disagreements;
      }
    }
  }
  return {disagreements == 0 && compared > 10000,
          fmt("%d grid points compared, %d excluded near boundaries, "
              "%d disagreements",
              compared, excluded, disagreements)};
}

// --------------------------------------------------------------------------
// 6. Well problem: bisection oracle, fourth-order remainder, cross-check.

Outcome criterion6() {
  const double c = 343.0, g = 9.81;

  auto bisect = [&](double t) {
    double lo = 0.0, hi = 0.5 * g * t * t + 1.0;
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      (std::sqrt(2.0 * mid / g) + mid / c <= t ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  const double depth2 = well_depth({2, c, g}).depth;
  const double oracle2 = bisect(2.0);
  const bool bisect_ok = std::abs(depth2 - oracle2) <= 1e-9 * oracle2;

  double ratios[2];
  {
    const double base = c / g;
    double remainder[3];
    int idx = 0;
    for (const double frac : {0.2, 0.1, 0.05}) {
      const double t = frac * base;
      remainder[idx++] =
          std::abs(well_depth({t, c, g}).depth - well_series({t, c, g}, 3));
    }
    ratios[0] = remainder[0] / remainder[1];
    ratios[1] = remainder[1] / remainder[2];
  }
  const bool remainder_ok = ratios[0] >= 12.0 && ratios[0] <= 20.0 &&
                            ratios[1] >= 12.0 && ratios[1] <= 20.0;

  bool cross_ok = true;
  for (const double t : {2.0, 0.1 * c / g}) {
    const WellSolution s = well_depth({t, c, g});
    const RootPair r = solve_alternative(to_uv(well_quadratic({t, c, g})));
    cross_ok = cross_ok &&
               same_roots(r, make_root_pair(Complex(s.depth), Complex(s.other_root)),
                          1e-9);
  }

  return {bisect_ok && remainder_ok && cross_ok,
          fmt("depth(t=2) %.10f vs bisection %.10f; remainder ratios per "
              "halving %.2f, %.2f (need 12..20); general-solver cross-check %s",
              depth2, oracle2, ratios[0], ratios[1], cross_ok ? "ok" : "off")};
}

// --------------------------------------------------------------------------
// 7. Muller: sqrt(2) run, one-step exactness, convergence order.

Outcome criterion7() {
  const ScalarFn sqrt2_fn = [](Complex x) { return x * x - 2.0; };

  const MullerResult run = muller_solve(sqrt2_fn, 0, 1, 2);
  const bool run_ok = run.converged && run.iterations <= 12 &&
                      std::abs(run.root - std::sqrt(2.0)) <= 1e-12;

  // One step on a quadratic must land on a root within 4 eps relative.
  // Exactly representable coefficients and sample points keep input rounding
  // out of the measurement.
  std::mt19937_64 gen(1007);
  std::uniform_int_distribution<int> quarter(-12, 12);
  std::uniform_int_distribution<int> lead(2, 6);
  double worst = std::abs(muller_step(muller_init(sqrt2_fn, 0, 1, 2), sqrt2_fn)
                              .x_curr -
                          std::sqrt(2.0)) /
                 std::sqrt(2.0);
  int cases = 0;
  while (cases < 10000) {
    const double x1 = quarter(gen) / 4.0;
    const double x2 = quarter(gen) / 4.0;
    if (std::abs(x1) < 0.5 || std::abs(x2) < 0.5 || std::abs(x1 - x2) < 0.75) {
      continue;
    }
    const double a = lead(gen) / 2.0;
    const double s0 = quarter(gen) / 4.0;
    const double s1 = quarter(gen) / 4.0;
    const double s2 = quarter(gen) / 4.0;
    if (std::abs(s0 - s1) < 0.5 || std::abs(s1 - s2) < 0.5 ||
        std::abs(s0 - s2) < 0.5) {
      continue;
    }
    ++cases;
    const double b = -a * (x1 + x2);
    const double cc = a * x1 * x2;
    const auto f = [&](Complex x) { return (a * x + b) * x + cc; };
    const MullerState st = muller_step(muller_init(f, s0, s1, s2), f);
    const double err =
        std::min(std::abs(st.x_curr - Complex(x1)) / std::abs(x1),
                 std::abs(st.x_curr - Complex(x2)) / std::abs(x2));
    worst = std::max(worst, err);
  }
  const bool one_step_ok = worst <= 4 * kUnitRoundoff;

  // Order of convergence on a cubic (a quadratic is solved in one step, so
  // it cannot exhibit the asymptotic rate).
  const ScalarFn cbrt2_fn = [](Complex x) { return x * x * x - 2.0; };
  const double root = std::cbrt(2.0);
  MullerState s = muller_init(cbrt2_fn, 0, 1, 2);
  std::vector<double> errors;
  for (int k = 0; k < 20; ++k) {
    if (s.x_curr == s.x_prev1 || s.x_curr == s.x_prev2 ||
        s.x_prev1 == s.x_prev2) {
      break;
    }
    s = muller_step(s, cbrt2_fn);
    const double err = std::abs(s.x_curr - root) / root;
    if (err < 1e-15) {
      break;
    }
    errors.push_back(err);
  }
  double order = 0.0;
  if (errors.size() >= 2) {
    order = std::log(errors.back()) / std::log(errors[errors.size() - 2]);
  }
  const bool order_ok = errors.size() >= 4 && order >= 1.69 && order <= 1.99;

  return {run_ok && one_step_ok && order_ok,
          fmt("sqrt(2) in %d iterations; one-step worst error %.2f eps over "
              "%d quadratics (limit 4); last order estimate %.3f "
              "(need 1.69..1.99)",
              run.iterations, worst / kUnitRoundoff, cases, order)};
}

// --------------------------------------------------------------------------
// 8. The bench subcommand is byte-deterministic for a fixed seed.

Outcome criterion8() {
  const char* cli = std::getenv("QUADFORM_CLI");
  if (cli == nullptr) {
    return {false, "QUADFORM_CLI not set; cannot locate the CLI binary"};
  }
  const std::string base = "/tmp/quadform_acceptance_bench_";
  std::string contents[2];
  for (int run = 0; run < 2; ++run) {
    const std::string path = base + char('a' + run) + ".csv";
    const std::string cmd = std::string("\"") + cli +
                            "\" bench --family random_real --count 200 "
                            "--seed 123 --out " + path + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc) || WEXITSTATUS(rc) != 0) {
      return {false, fmt("bench invocation %d exited abnormally", run + 1)};
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    contents[run] = ss.str();
    std::remove(path.c_str());
  }
  const long lines =
      std::count(contents[0].begin(), contents[0].end(), '\n');
  const bool pass = !contents[0].empty() && contents[0] == contents[1] &&
                    lines == 1 + 200 * 5 * 2;
  return {pass, fmt("two runs of 200 instances, %zu bytes, %ld lines, %s",
                    contents[0].size(), lines,
                    contents[0] == contents[1] ? "byte-identical"
                                               : "DIFFERENT")};
}

// --------------------------------------------------------------------------
// 9. Sign flips inside the symmetric formula never change the multiset.

Outcome criterion9() {
  std::mt19937_64 gen(1009);
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  const int trials = 10000;
  int mismatches = 0;

  auto same_multiset = [](const RootPair& lhs, Complex y1, Complex y2) {
    return (lhs.x1 == y1 && lhs.x2 == y2) || (lhs.x1 == y2 && lhs.x2 == y1);
  };

  for (int k = 0; k < trials; ++k) {
    const Complex u(d(gen), d(gen));
    const Complex v(d(gen), d(gen));
    const RootPair base = solve_alternative({u, v});

    const RootPair flipped = solve_alternative({u, -v});
    bool ok = same_multiset(base, flipped.x1, flipped.x2);

    const Complex s = principal_sqrt(u + v);
    const Complex t = principal_sqrt(u - v);
    for (int variant = 0; variant < 3 && ok; ++variant) {
      const Complex s2 = (variant == 1) ? s : -s;
      const Complex t2 = (variant == 0) ? t : -t;
      ok = same_multiset(base, (s2 + t2) * (s2 + t2), (s2 - t2) * (s2 - t2));
    }
    if (!ok) {
      ++mismatches;
    }
  }
  return {mismatches == 0,
          fmt("%d of %d draws changed the root multiset under v negation or "
              "explicit square-root sign flips (exact comparison)",
              mismatches, trials)};
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {1, "method agreement", criterion1},
      {2, "degenerate linear case", criterion2},
      {3, "cancellation benchmark", criterion3},
      {4, "trig/hyperbolic equivalence", criterion4},
      {5, "classification grid", criterion5},
      {6, "well problem", criterion6},
      {7, "Muller convergence", criterion7},
      {8, "bench determinism", criterion8},
      {9, "branch and sign invariances", criterion9},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    Outcome outcome;
    try {
      outcome = e.run();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("unexpected exception: ") + ex.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", outcome.pass ? "PASS" : "FAIL",
                e.number, e.title, outcome.detail.c_str());
    if (!outcome.pass) {
      ++failures;
    }
  }
  return failures;
}
