#pragma once

#include <optional>

namespace quadform {

enum class RootKind {
  double_root,
  two_distinct_real,
  two_real_opposite_sign,
  complex_conjugate_pair,
};

struct Classification {
  RootKind kind = RootKind::complex_conjugate_pair;
  // Present only for double_root; equals 2u.
  std::optional<double> double_value;
};

inline constexpr double kClassifyTol = 1e-10;

// Root-type verdict for x^2 - 4ux + 4v^2 = 0 with real u and real v^2, read
// off the coefficients without solving.  Boundaries are banded by tol:
// |u^2 - v^2| within tol (scaled) is a double root, v^2 below -tol means two
// real roots of opposite sign, u^2 above v^2 + tol means two distinct real
// roots, anything else a conjugate complex pair.  Opposite-sign beats plain
// distinct-real when both hold.
Classification classify(double u, double v_squared, double tol = kClassifyTol);

const char* to_string(RootKind kind) noexcept;

}  // namespace quadform
