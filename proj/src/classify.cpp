#include "quadform/classify.hpp"

#include <algorithm>
#include <cmath>

#include "quadform/scalar.hpp"

namespace quadform {

Classification classify(double u, double v_squared, double tol) {
  if (!std::isfinite(u) || !std::isfinite(v_squared) || !std::isfinite(tol)) {
    throw SolveError(ErrorKind::domain, "classify: non-finite input");
  }
  if (tol < 0.0) {
    throw SolveError(ErrorKind::domain, "classify: tol must be >= 0");
  }
  const double u2 = u * u;
  const double band = tol * std::max({1.0, u2, std::abs(v_squared)});
  if (std::abs(u2 - v_squared) <= band) {
    return Classification{RootKind::double_root, 2.0 * u};
  }
  if (v_squared < -tol) {
    return Classification{RootKind::two_real_opposite_sign, std::nullopt};
  }
  if (u2 > v_squared + tol) {
    return Classification{RootKind::two_distinct_real, std::nullopt};
  }
  return Classification{RootKind::complex_conjugate_pair, std::nullopt};
}

const char* to_string(RootKind kind) noexcept {
  switch (kind) {
    case RootKind::double_root:
      return "double_root";
    case RootKind::two_distinct_real:
      return "two_distinct_real";
    case RootKind::two_real_opposite_sign:
      return "two_real_opposite_sign";
    case RootKind::complex_conjugate_pair:
      return "complex_conjugate_pair";
  }
  return "unknown";
}

}  // namespace quadform
