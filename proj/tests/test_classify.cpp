#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "quadform/classify.hpp"
#include "quadform/forms.hpp"
#include "quadform/solvers.hpp"

using namespace quadform;

TEST_CASE("classify reads the root type off u and v squared", "[classify]") {
  const Classification dbl = classify(3, 9);
  REQUIRE(dbl.kind == RootKind::double_root);
  REQUIRE(dbl.double_value.has_value());
  REQUIRE(*dbl.double_value == 6.0);

  const Classification neg = classify(-3, 9);
  REQUIRE(neg.kind == RootKind::double_root);
  REQUIRE(*neg.double_value == -6.0);

  const Classification dist = classify(5, 16);
  REQUIRE(dist.kind == RootKind::two_distinct_real);
  REQUIRE_FALSE(dist.double_value.has_value());

  REQUIRE(classify(0, -1).kind == RootKind::two_real_opposite_sign);
  REQUIRE(classify(1, 2).kind == RootKind::complex_conjugate_pair);
}

TEST_CASE("opposite-sign wins over plain distinct-real", "[classify]") {
  // u^2 > v2 holds as well, but the sign information is more specific.
  REQUIRE(classify(2, -1).kind == RootKind::two_real_opposite_sign);
}

TEST_CASE("the double-root band scales with the input magnitude", "[classify]") {
  REQUIRE(classify(1, 1 + 1e-12).kind == RootKind::double_root);
  REQUIRE(classify(1, 1.001).kind == RootKind::complex_conjugate_pair);
  REQUIRE(classify(1, 0.999).kind == RootKind::two_distinct_real);

  // At u^2 = 1e6 the default band is 1e-4 wide in absolute terms.
  REQUIRE(classify(1000, 1e6 - 1e-5).kind == RootKind::double_root);
  REQUIRE(classify(1000, 1e6 - 1.0).kind == RootKind::two_distinct_real);
}

TEST_CASE("zero tolerance means exact comparisons", "[classify]") {
  REQUIRE(classify(2, 4, 0.0).kind == RootKind::double_root);
  REQUIRE(classify(2, std::nextafter(4.0, 0.0), 0.0).kind ==
          RootKind::two_distinct_real);
  REQUIRE(classify(2, std::nextafter(4.0, 8.0), 0.0).kind ==
          RootKind::complex_conjugate_pair);
  REQUIRE(classify(0, -1e-300, 0.0).kind == RootKind::two_real_opposite_sign);
}

TEST_CASE("classify validates its inputs", "[classify]") {
  for (auto call : {
           +[] { (void)classify(std::nan(""), 1); },
           +[] { (void)classify(1, std::numeric_limits<double>::infinity()); },
           +[] { (void)classify(1, 1, -1e-3); },
       }) {
    try {
      call();
      FAIL("expected SolveError");
    } catch (const SolveError& err) {
      REQUIRE(err.kind() == ErrorKind::domain);
    }
  }
}

TEST_CASE("kind names render as stable identifiers", "[classify]") {
  REQUIRE(std::string(to_string(RootKind::double_root)) == "double_root");
  REQUIRE(std::string(to_string(RootKind::two_distinct_real)) == "two_distinct_real");
  REQUIRE(std::string(to_string(RootKind::two_real_opposite_sign)) ==
          "two_real_opposite_sign");
  REQUIRE(std::string(to_string(RootKind::complex_conjugate_pair)) ==
          "complex_conjugate_pair");
}

namespace {

// Classifies by actually computing the roots, used as an independent check
// below. Returns no verdict for instances too close to a boundary to call.
std::optional<RootKind> verdict_from_roots(double u, double v2) {
  if (std::abs(u * u - v2) <= 1e-9 * std::max({1.0, u * u, std::abs(v2)}) ||
      std::abs(v2) <= 1e-9) {
    return std::nullopt;
  }
  const RootPair r = solve_alternative({Complex(u), principal_sqrt(Complex(v2))});
  const double big = std::max(std::abs(r.x1), std::abs(r.x2));
  const bool real = std::max(std::abs(r.x1.imag()), std::abs(r.x2.imag())) <=
                    1e-9 * (1.0 + big);
  if (!real) {
    return RootKind::complex_conjugate_pair;
  }
  if (r.x1.real() * r.x2.real() < 0.0) {
    return RootKind::two_real_opposite_sign;
  }
  return RootKind::two_distinct_real;
}

}  // namespace

TEST_CASE("classify agrees with the computed roots on a grid", "[classify]") {
  int compared = 0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double u = -5.0 + 0.5 * i;
      const double v2 = -5.0 + 0.5 * j;
      const auto expected = verdict_from_roots(u, v2);
      if (!expected) {
        continue;
      }
      ++compared;
      REQUIRE(classify(u, v2, 0.0).kind == *expected);
      if (v2 < 0) {
        // Negative v2 forces a negative root product, hence opposite signs.
        const RootPair r =
            solve_alternative({Complex(u), principal_sqrt(Complex(v2))});
        REQUIRE((r.x1 * r.x2).real() < 0.0);
      }
    }
  }
  REQUIRE(compared > 350);  // the exclusion band must not swallow the grid
}
