#include "quadform/forms.hpp"

#include <cmath>

namespace quadform {

namespace {

void check_finite_coefficients(const Quadratic& eq, const char* who) {
  if (!is_finite(eq.a) || !is_finite(eq.b) || !is_finite(eq.c)) {
    throw SolveError(ErrorKind::domain,
                     std::string(who) + ": non-finite coefficient");
  }
}

}  // namespace

RootPair make_root_pair(Complex x1, Complex x2) noexcept {
  return RootPair{x1, x2, approx_equal(x1, x2), false};
}

NormalPQ to_pq(const Quadratic& eq) {
  check_finite_coefficients(eq, "to_pq");
  if (eq.a == 0.0) {
    throw SolveError(ErrorKind::degenerate_input, "to_pq: a = 0");
  }
  return NormalPQ{-eq.b / (2.0 * eq.a), eq.c / eq.a};
}

NormalUV to_uv(const Quadratic& eq) {
  check_finite_coefficients(eq, "to_uv");
  if (eq.a == 0.0) {
    throw SolveError(ErrorKind::degenerate_input, "to_uv: a = 0");
  }
  return NormalUV{-eq.b / (4.0 * eq.a), principal_sqrt(eq.c / (4.0 * eq.a))};
}

Quadratic from_uv(const NormalUV& nf) {
  return Quadratic{Complex(1.0), -4.0 * nf.u, 4.0 * (nf.v * nf.v)};
}

Complex residual(const Quadratic& eq, Complex x) noexcept {
  return (eq.a * x + eq.b) * x + eq.c;
}

double residual_scale(const Quadratic& eq, Complex x) noexcept {
  const double ax = std::abs(x);
  return std::abs(eq.a) * ax * ax + std::abs(eq.b) * ax + std::abs(eq.c);
}

bool same_roots(const RootPair& lhs, const RootPair& rhs, double tol) noexcept {
  if (lhs.is_degenerate_linear != rhs.is_degenerate_linear) {
    return false;
  }
  if (lhs.is_degenerate_linear) {
    return approx_equal(lhs.x1, rhs.x1, tol);
  }
  const bool direct = approx_equal(lhs.x1, rhs.x1, tol) &&
                      approx_equal(lhs.x2, rhs.x2, tol);
  const bool swapped = approx_equal(lhs.x1, rhs.x2, tol) &&
                       approx_equal(lhs.x2, rhs.x1, tol);
  return direct || swapped;
}

}  // namespace quadform
