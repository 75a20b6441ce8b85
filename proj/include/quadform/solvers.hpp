#pragma once

#include "quadform/forms.hpp"

namespace quadform {

// Data backing the tanh/tan solution forms for real quadratics: the equation
// is rescaled to y^2 + d*y +- 1 = 0 and the roots are recovered from a single
// angle-like parameter alpha and the scale factor sqrt(+-c/a).
struct TrigHypParam {
  enum class Flavor { hyperbolic, trigonometric };
  double alpha = 0.0;
  double d = 0.0;
  double scale = 0.0;
  Flavor flavor = Flavor::hyperbolic;
};

// x = (-b +- sqrt(b^2 - 4ac)) / (2a).  Throws degenerate_input when a = 0.
RootPair solve_classical(const Quadratic& eq);

// Roots of x^2 - 2px + q = 0 as p +- sqrt(p^2 - q).
RootPair solve_pq(const NormalPQ& nf);

// x = -2c / (b +- sqrt(b^2 - 4ac)).  Stays usable at a = 0, where it returns
// the single linear root -c/b flagged is_degenerate_linear; a = b = 0 is a
// no_root error.
RootPair solve_reciprocal(const Quadratic& eq);

// Real quadratics with a > 0, c > 0, b != 0 and b^2 >= 4ac: both roots share
// the sign of -b and are sqrt(c/a) * {tanh(alpha), coth(alpha)} with
// tanh(2 alpha) = -2 sqrt(ac)/b.  Anything else is not_applicable.
RootPair solve_hyperbolic(const Quadratic& eq);

// Real quadratics with a > 0, c < 0: roots of opposite sign, equal to
// sqrt(-c/a) * {tan(alpha), -cot(alpha)} with tan(2 alpha) = 2 sqrt(-ac)/b
// and alpha = pi/4 when b = 0.
RootPair solve_trigonometric(const Quadratic& eq);

// Symmetric form: x = (sqrt(u + v) +- sqrt(u - v))^2 for x^2 - 4ux + 4v^2 = 0.
// The returned multiset does not depend on any of the three square root branch
// choices, bit for bit.
RootPair solve_alternative(const NormalUV& nf);

// Cancellation-aware hybrid: the large root from the classical formula with
// the sign that avoids subtracting nearly equal terms, the small root from the
// reciprocal formula with the same denominator.  Covers a = 0 like
// solve_reciprocal.
RootPair solve_robust(const Quadratic& eq);

// Parameter extraction for the two special real forms.  Validate the same
// preconditions as the corresponding solvers and throw not_applicable with the
// violated condition named.  On the hyperbolic boundary b^2 = 4ac the angle is
// +-infinity (tanh saturates at +-1 there).
TrigHypParam hyperbolic_param(const Quadratic& eq);
TrigHypParam trigonometric_param(const Quadratic& eq);

}  // namespace quadform
