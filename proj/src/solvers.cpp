#include "quadform/solvers.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace quadform {

namespace {

void require_finite(const Quadratic& eq, const char* who) {
  if (!is_finite(eq.a) || !is_finite(eq.b) || !is_finite(eq.c)) {
    throw SolveError(ErrorKind::domain,
                     std::string(who) + ": non-finite coefficient");
  }
}

double max_component(const Quadratic& eq) {
  double m = 0.0;
  for (Complex z : {eq.a, eq.b, eq.c}) {
    m = std::max(m, std::abs(z.real()));
    m = std::max(m, std::abs(z.imag()));
  }
  return m;
}

// Rescale by a power of two when the coefficients are extreme enough that
// b^2 - 4ac could overflow or underflow.  Exact, so the roots are unchanged.
Quadratic prescaled(const Quadratic& eq) {
  const double m = max_component(eq);
  if (m == 0.0 || (m >= 0x1p-500 && m <= 0x1p500)) {
    return eq;
  }
  int exp = 0;
  std::frexp(m, &exp);
  const double s = std::ldexp(1.0, -exp);
  return Quadratic{eq.a * s, eq.b * s, eq.c * s};
}

Complex discriminant_root(const Quadratic& eq) {
  return principal_sqrt(eq.b * eq.b - 4.0 * eq.a * eq.c);
}

// Shared a = 0 handling for the reciprocal-style solvers.  The linear root is
// computed literally as -c/b so that it matches the rounded exact quotient.
RootPair linear_root(const Quadratic& eq, const char* who) {
  if (eq.b == 0.0) {
    throw SolveError(ErrorKind::no_root,
                     std::string(who) + ": a = 0 and b = 0 leave no root");
  }
  RootPair out;
  out.x1 = out.x2 = -eq.c / eq.b;
  out.is_degenerate_linear = true;
  return out;
}

void require_real(const Quadratic& eq, const char* who) {
  if (eq.a.imag() != 0.0 || eq.b.imag() != 0.0 || eq.c.imag() != 0.0) {
    throw SolveError(ErrorKind::not_applicable,
                     std::string(who) + ": requires real coefficients");
  }
}

}  // namespace

RootPair solve_classical(const Quadratic& eq_in) {
  require_finite(eq_in, "solve_classical");
  if (eq_in.a == 0.0) {
    throw SolveError(ErrorKind::degenerate_input, "solve_classical: a = 0");
  }
  const Quadratic eq = prescaled(eq_in);
  const Complex w = discriminant_root(eq);
  const Complex two_a = 2.0 * eq.a;
  return make_root_pair((-eq.b + w) / two_a, (-eq.b - w) / two_a);
}

RootPair solve_pq(const NormalPQ& nf) {
  if (!is_finite(nf.p) || !is_finite(nf.q)) {
    throw SolveError(ErrorKind::domain, "solve_pq: non-finite coefficient");
  }
  const Complex w = principal_sqrt(nf.p * nf.p - nf.q);
  return make_root_pair(nf.p + w, nf.p - w);
}

RootPair solve_reciprocal(const Quadratic& eq_in) {
  require_finite(eq_in, "solve_reciprocal");
  if (eq_in.a == 0.0) {
    return linear_root(eq_in, "solve_reciprocal");
  }
  if (eq_in.c == 0.0) {
    // Both numerators vanish; the roots are 0 and -b/a directly.
    return make_root_pair(Complex(0.0), -eq_in.b / eq_in.a);
  }
  const Quadratic eq = prescaled(eq_in);
  const Complex w = discriminant_root(eq);
  const Complex dp = eq.b + w;
  const Complex dm = eq.b - w;
  // With a != 0 and c != 0 at most one denominator can round to zero; recover
  // that branch's root from the other via the product c/a.
  if (dp == 0.0) {
    const Complex x2 = -2.0 * eq.c / dm;
    return make_root_pair((eq.c / eq.a) / x2, x2);
  }
  if (dm == 0.0) {
    const Complex x1 = -2.0 * eq.c / dp;
    return make_root_pair(x1, (eq.c / eq.a) / x1);
  }
  return make_root_pair(-2.0 * eq.c / dp, -2.0 * eq.c / dm);
}

TrigHypParam hyperbolic_param(const Quadratic& eq) {
  require_finite(eq, "solve_hyperbolic");
  require_real(eq, "solve_hyperbolic");
  const double a = eq.a.real();
  const double b = eq.b.real();
  const double c = eq.c.real();
  if (a <= 0.0) {
    throw SolveError(ErrorKind::not_applicable,
                     "solve_hyperbolic: requires a > 0");
  }
  if (c <= 0.0) {
    throw SolveError(ErrorKind::not_applicable,
                     "solve_hyperbolic: requires c > 0");
  }
  if (b == 0.0) {
    throw SolveError(ErrorKind::not_applicable,
                     "solve_hyperbolic: requires b != 0 (complex roots)");
  }
  const double sqrt_a = std::sqrt(a);
  const double sqrt_c = std::sqrt(c);
  const double d = b / (sqrt_a * sqrt_c);
  if (std::abs(d) < 2.0) {
    throw SolveError(ErrorKind::not_applicable,
                     "solve_hyperbolic: requires b^2 >= 4ac");
  }
  TrigHypParam out;
  out.flavor = TrigHypParam::Flavor::hyperbolic;
  out.d = d;
  out.scale = sqrt_c / sqrt_a;
  out.alpha = 0.5 * std::atanh(-2.0 / d);
  return out;
}

RootPair solve_hyperbolic(const Quadratic& eq) {
  const TrigHypParam p = hyperbolic_param(eq);
  const double th = std::tanh(p.alpha);
  if (std::isinf(p.alpha)) {
    // Boundary b^2 = 4ac: tanh and coth both saturate, double root.
    const Complex x(p.scale * th);
    return make_root_pair(x, x);
  }
  return make_root_pair(Complex(p.scale * th), Complex(p.scale / th));
}

TrigHypParam trigonometric_param(const Quadratic& eq) {
  require_finite(eq, "solve_trigonometric");
  require_real(eq, "solve_trigonometric");
  const double a = eq.a.real();
  const double b = eq.b.real();
  const double c = eq.c.real();
  if (a <= 0.0) {
    throw SolveError(ErrorKind::not_applicable,
                     "solve_trigonometric: requires a > 0");
  }
  if (c >= 0.0) {
    throw SolveError(ErrorKind::not_applicable,
                     "solve_trigonometric: requires c < 0");
  }
  const double sqrt_a = std::sqrt(a);
  const double sqrt_mc = std::sqrt(-c);
  TrigHypParam out;
  out.flavor = TrigHypParam::Flavor::trigonometric;
  out.d = b / (sqrt_a * sqrt_mc);
  out.scale = sqrt_mc / sqrt_a;
  out.alpha = (b == 0.0) ? 0.25 * std::numbers::pi
                         : 0.5 * std::atan(2.0 / out.d);
  return out;
}

RootPair solve_trigonometric(const Quadratic& eq) {
  const TrigHypParam p = trigonometric_param(eq);
  const double tn = std::tan(p.alpha);
  return make_root_pair(Complex(p.scale * tn), Complex(-p.scale / tn));
}

RootPair solve_alternative(const NormalUV& nf) {
  if (!is_finite(nf.u) || !is_finite(nf.v)) {
    throw SolveError(ErrorKind::domain,
                     "solve_alternative: non-finite coefficient");
  }
  const Complex s = principal_sqrt(nf.u + nf.v);
  const Complex t = principal_sqrt(nf.u - nf.v);
  const Complex sum = s + t;
  const Complex dif = s - t;
  return make_root_pair(sum * sum, dif * dif);
}

RootPair solve_robust(const Quadratic& eq_in) {
  require_finite(eq_in, "solve_robust");
  if (eq_in.a == 0.0) {
    return linear_root(eq_in, "solve_robust");
  }
  if (eq_in.c == 0.0) {
    return make_root_pair(-eq_in.b / eq_in.a, Complex(0.0));
  }
  const Quadratic eq = prescaled(eq_in);
  const Complex w = discriminant_root(eq);
  // Align the square root with b: |b + w| >= |b - w| iff Re(conj(b) w) >= 0,
  // and the aligned sum cannot cancel.
  const double dot = eq.b.real() * w.real() + eq.b.imag() * w.imag();
  const Complex denom = (dot >= 0.0) ? eq.b + w : eq.b - w;
  return make_root_pair(-denom / (2.0 * eq.a), -2.0 * eq.c / denom);
}

}  // namespace quadform
