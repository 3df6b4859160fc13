#pragma once

#include <vector>

#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

// Position-eigenstate boundary data of a correlator matrix element:
// final position y at time t, initial position yprime at time 0.
struct Endpoint {
  Vector y;
  Vector yprime;
  double t{1.0};
};

// Request for an n-point time-ordered correlator, evaluated by nested
// central finite differences of the driven propagator over spike forces.
struct CorrelatorRequest {
  std::vector<double> times;  // insertion times, each in (0, t)
  std::vector<int> indices;   // coordinate index per insertion, in [0, N]
  Endpoint endpoint;
  double fd_step{1e-4};   // spike amplitude for the central differences
  double grid_step{1e-2}; // force sample spacing
};

// <y,t| Y_mu(t1) |y',0> / K(y,t;y',0): closed form
// y'^T F^{-1}(t) F(t-t1) e_mu + y^T F^{-1}(t) F(t1) e_mu.
Complex one_point(const Spectrum& sp, const Endpoint& ep, double t1, int mu);

// Time-ordered two-point matrix element: product of the one-point values
// plus the connected kernel
// i hbar [X diag(sin(z u) sin(z (t-s)) / (z sin(z t))) X^T]_{mu nu}
// with u = min(t1,t2), s = max(t1,t2).
Complex two_point(const Spectrum& sp, const Endpoint& ep, double t1, int mu,
                  double t2, int nu, double hbar = 1.0);

// Generic n-point evaluator: (i hbar)^n times the n-th central finite
// difference of K^(f)/K over unit-area spike forces, Richardson-extrapolated
// once with step ratio 2.
Complex n_point_fd(const Spectrum& sp, const CorrelatorRequest& req,
                   double hbar = 1.0);

} // namespace oscbath
