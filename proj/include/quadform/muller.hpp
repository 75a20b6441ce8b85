#pragma once

#include <functional>

#include "quadform/scalar.hpp"

namespace quadform {

using ScalarFn = std::function<Complex(Complex)>;

// Sliding three-point window of an iteration, oldest first.
struct MullerState {
  Complex x_prev2, x_prev1, x_curr;
  Complex f_prev2, f_prev1, f_curr;
  int iteration = 0;
};

struct MullerResult {
  Complex root;
  Complex residual;
  int iterations = 0;
  bool converged = false;
};

struct MullerOptions {
  double residual_tol = 1e-12;
  double step_tol = 1e-14;
  int max_iter = 100;
};

// Evaluates f at the three starting points.  The points must be pairwise
// distinct (stagnation error otherwise) and the values finite.
MullerState muller_init(const ScalarFn& f, Complex x0, Complex x1, Complex x2);

// One step of Muller's method: fit the parabola through the window by divided
// differences, move to its root nearest x_curr, shift the window.  The root
// increment comes from the reciprocal formula, so a degenerate (linear)
// parabola still works; only a doubly-zero denominator is a breakdown.
MullerState muller_step(const MullerState& state, const ScalarFn& f);

// Iterates until |f(x)| <= residual_tol, the step shrinks below
// step_tol * max(1, |x|), or max_iter is exhausted (converged = false then).
MullerResult muller_solve(const ScalarFn& f, Complex x0, Complex x1, Complex x2,
                          const MullerOptions& opts = {});

}  // namespace quadform
