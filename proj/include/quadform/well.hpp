#pragma once

#include "quadform/forms.hpp"

namespace quadform {

// A stone is dropped into a well; t seconds later the impact is heard.  The
// depth x satisfies sqrt(2x/g) + x/c = t, which squares into a quadratic.
struct WellParams {
  double t = 0.0;        // seconds until the sound arrives
  double c_sound = 343.0;  // speed of sound, m/s
  double g = 9.81;       // gravitational acceleration, m/s^2
};

struct WellSolution {
  double depth = 0.0;        // physical root, meters
  double other_root = 0.0;   // second root of the quadratic, not physical
  double fall_time = 0.0;    // sqrt(2 depth / g)
  double sound_time = 0.0;   // depth / c
  double tau = 0.0;          // c/g
  double char_length = 0.0;  // c^2/(2g)
};

// Coefficients of x^2 - 2x c(c+gt)/g + t^2 c^2 = 0.
Quadratic well_quadratic(const WellParams& params);

// Depth in closed form: c^2/(2g) * (sqrt(1 + 2gt/c) - 1)^2, the smaller root
// of well_quadratic.  Evaluated directly from 2gt/c, which stays accurate for
// small t where the quadratic's coefficients nearly cancel.
WellSolution well_depth(const WellParams& params);

// Series approximation of the depth: order 2 gives g t^2/2 (instantaneous
// sound), order 3 adds the correction -g^2 t^3 / (2c).
double well_series(const WellParams& params, int order);

}  // namespace quadform
