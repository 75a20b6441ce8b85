#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace quadform {

using Complex = std::complex<double>;

/// Default relative tolerance for approximate comparisons.
inline constexpr double kDefaultTol = 1e-12;

/// Unit roundoff of double precision (half an ulp at 1).
inline constexpr double kUnitRoundoff = 0x1p-53;

enum class ErrorKind {
  domain,            // non-finite or otherwise out-of-domain input
  degenerate_input,  // a = 0 where the method requires a != 0
  no_root,           // constant equation a = b = 0
  not_applicable,    // trig/hyperbolic preconditions violated
  breakdown,         // both parabola denominators vanished in a Muller step
  stagnation,        // coincident interpolation abscissae
};

class SolveError : public std::runtime_error {
 public:
  SolveError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

bool is_finite(Complex z) noexcept;

/// Mixed absolute/relative comparison: |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(Complex a, Complex b, double tol = kDefaultTol) noexcept;

/// Principal square root: Re(w) >= 0, and Im(w) >= 0 when Re(w) = 0
/// (branch cut along the negative real axis). Throws ErrorKind::domain on
/// non-finite input.
Complex principal_sqrt(Complex z);

}  // namespace quadform
