#pragma once

#include "oscbath/types.hpp"

namespace oscbath {

// Quadrature weights for uniformly sampled integrands: composite Simpson,
// closed with a 3/8 rule when the interval count is odd, trapezoid for a
// single interval, all-zero for a single point.
Vector uniform_weights(int n_points, double step);

} // namespace oscbath
