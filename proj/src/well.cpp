#include "quadform/well.hpp"

#include <cmath>

namespace quadform {

namespace {

void validate(const WellParams& p, const char* who) {
  if (!std::isfinite(p.t) || !std::isfinite(p.c_sound) || !std::isfinite(p.g)) {
    throw SolveError(ErrorKind::domain,
                     std::string(who) + ": non-finite parameter");
  }
  if (p.t < 0.0) {
    throw SolveError(ErrorKind::domain, std::string(who) + ": t must be >= 0");
  }
  if (p.c_sound <= 0.0 || p.g <= 0.0) {
    throw SolveError(ErrorKind::domain,
                     std::string(who) + ": c and g must be > 0");
  }
}

}  // namespace

Quadratic well_quadratic(const WellParams& p) {
  validate(p, "well_quadratic");
  const double c = p.c_sound;
  const double tc = p.t * c;
  return Quadratic{Complex(1.0), Complex(-2.0 * c * (c + p.g * p.t) / p.g),
                   Complex(tc * tc)};
}

WellSolution well_depth(const WellParams& p) {
  validate(p, "well_depth");
  const double c = p.c_sound;
  const double h = 2.0 * p.g * p.t / c;
  const double r = std::sqrt(1.0 + h);

  WellSolution out;
  out.tau = c / p.g;
  out.char_length = c * c / (2.0 * p.g);
  // sqrt(1+h) - 1 rewritten as h / (sqrt(1+h) + 1): no cancellation for small h.
  const double bracket = h / (r + 1.0);
  out.depth = out.char_length * bracket * bracket;
  out.other_root = out.char_length * (r + 1.0) * (r + 1.0);
  out.fall_time = std::sqrt(2.0 * out.depth / p.g);
  out.sound_time = out.depth / c;
  return out;
}

double well_series(const WellParams& p, int order) {
  validate(p, "well_series");
  if (order != 2 && order != 3) {
    throw SolveError(ErrorKind::domain, "well_series: order must be 2 or 3");
  }
  const double lead = 0.5 * p.g * p.t * p.t;
  if (order == 2) {
    return lead;
  }
  return lead - 0.5 * p.g * p.g * p.t * p.t * p.t / p.c_sound;
}

}  // namespace quadform
