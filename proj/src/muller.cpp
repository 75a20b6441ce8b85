#include "quadform/muller.hpp"

#include <cmath>
#include <limits>

namespace quadform {

namespace {

void require_distinct(Complex x0, Complex x1, Complex x2, const char* who) {
  if (x0 == x1 || x1 == x2 || x0 == x2) {
    throw SolveError(ErrorKind::stagnation,
                     std::string(who) + ": coincident sample points");
  }
}

void require_finite_values(const MullerState& st, const char* who) {
  if (!is_finite(st.f_prev2) || !is_finite(st.f_prev1) || !is_finite(st.f_curr)) {
    throw SolveError(ErrorKind::domain,
                     std::string(who) + ": non-finite function value");
  }
}

}  // namespace

MullerState muller_init(const ScalarFn& f, Complex x0, Complex x1, Complex x2) {
  require_distinct(x0, x1, x2, "muller_init");
  MullerState st;
  st.x_prev2 = x0;
  st.x_prev1 = x1;
  st.x_curr = x2;
  st.f_prev2 = f(x0);
  st.f_prev1 = f(x1);
  st.f_curr = f(x2);
  st.iteration = 0;
  require_finite_values(st, "muller_init");
  return st;
}

MullerState muller_step(const MullerState& state, const ScalarFn& f) {
  require_distinct(state.x_prev2, state.x_prev1, state.x_curr, "muller_step");
  require_finite_values(state, "muller_step");

  // Newton divided differences give the interpolating parabola around x_curr:
  // q(x_curr + s) = A s^2 + B s + C.
  const Complex f01 =
      (state.f_prev1 - state.f_prev2) / (state.x_prev1 - state.x_prev2);
  const Complex f12 =
      (state.f_curr - state.f_prev1) / (state.x_curr - state.x_prev1);
  const Complex A = (f12 - f01) / (state.x_curr - state.x_prev2);
  const Complex B = f12 + A * (state.x_curr - state.x_prev1);
  const Complex C = state.f_curr;

  const Complex w = principal_sqrt(B * B - 4.0 * A * C);
  const double dot = B.real() * w.real() + B.imag() * w.imag();
  const Complex denom = (dot >= 0.0) ? B + w : B - w;

  Complex step;
  if (denom == 0.0) {
    if (C != 0.0) {
      throw SolveError(ErrorKind::breakdown,
                       "muller_step: zero denominator on both branches");
    }
    step = 0.0;  // already sitting on a root of the parabola
  } else {
    step = -2.0 * C / denom;
  }

  MullerState next;
  next.x_prev2 = state.x_prev1;
  next.x_prev1 = state.x_curr;
  next.x_curr = state.x_curr + step;
  next.f_prev2 = state.f_prev1;
  next.f_prev1 = state.f_curr;
  next.f_curr = f(next.x_curr);
  next.iteration = state.iteration + 1;
  return next;
}

MullerResult muller_solve(const ScalarFn& f, Complex x0, Complex x1, Complex x2,
                          const MullerOptions& opts) {
  if (opts.max_iter < 1) {
    throw SolveError(ErrorKind::domain, "muller_solve: max_iter must be >= 1");
  }
  if (!(opts.residual_tol >= 0.0) || !(opts.step_tol >= 0.0)) {
    throw SolveError(ErrorKind::domain, "muller_solve: tolerances must be >= 0");
  }

  MullerState st = muller_init(f, x0, x1, x2);
  double last_step = std::numeric_limits<double>::infinity();
  for (;;) {
    const bool small_residual = std::abs(st.f_curr) <= opts.residual_tol;
    const bool small_step =
        last_step <= opts.step_tol * std::max(1.0, std::abs(st.x_curr));
    if (small_residual || small_step) {
      return MullerResult{st.x_curr, st.f_curr, st.iteration, true};
    }
    if (st.iteration >= opts.max_iter) {
      return MullerResult{st.x_curr, st.f_curr, st.iteration, false};
    }
    const MullerState next = muller_step(st, f);
    last_step = std::abs(next.x_curr - st.x_curr);
    st = next;
  }
}

}  // namespace quadform
