#include "oscbath/quadrature.hpp"

namespace oscbath {

Vector uniform_weights(int n_points, double step) {
  Vector w = Vector::Zero(n_points);
  const int intervals = n_points - 1;
  if (intervals <= 0) return w;
  if (intervals == 1) {
    w(0) = w(1) = step / 2.0;
    return w;
  }
  int simpson_end = n_points; // exclusive end of the pure-Simpson range
  if (intervals % 2 != 0) {
    // Odd interval count: close with a 3/8 rule over the last 3 intervals.
    simpson_end = n_points - 3;
    const double c = 3.0 * step / 8.0;
    w(n_points - 4) += c;
    w(n_points - 3) += 3.0 * c;
    w(n_points - 2) += 3.0 * c;
    w(n_points - 1) += c;
    if (simpson_end == 1) return w; // exactly 3 intervals
  }
  const double c = step / 3.0;
  w(0) += c;
  w(simpson_end - 1) += c;
  for (int i = 1; i < simpson_end - 1; ++i)
    w(i) += c * (i % 2 == 1 ? 4.0 : 2.0);
  return w;
}

} // namespace oscbath
