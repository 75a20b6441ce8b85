#include "quadform/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace quadform {

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool approx_equal(Complex a, Complex b, double tol) noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

Complex principal_sqrt(Complex z) {
  if (!is_finite(z)) {
    throw SolveError(ErrorKind::domain, "principal_sqrt: non-finite input");
  }
  Complex w = std::sqrt(z);
  if (w.real() < 0.0) {
    w = -w;
  }
  if (w.real() == 0.0) {
    // Land on the Im >= 0 side of the cut, with a clean +0 real part.
    w = Complex(0.0, std::abs(w.imag()));
  }
  return w;
}

}  // namespace quadform
