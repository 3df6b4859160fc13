#pragma once

#include "oscbath/gaussian.hpp"
#include "oscbath/model.hpp"
#include "oscbath/reduced.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

// Thermal summary of the main oscillator at inverse temperature beta.
struct ThermalReport {
  double beta{0.0};
  double logZ{0.0};
  double eta{0.0};
  double mean_sq_y{0.0};
  double mean_sq_p{0.0};
};

// log of the full-system partition function, summed over normal modes in
// log space: logZ = -sum_a [beta hbar z_a / 2 + log(1 - exp(-beta hbar z_a))].
double partition_function(const Spectrum& sp, double beta, double hbar = 1.0);

// Bath back-action correction (B - C)^T (A - D)^{-1} (B - C) evaluated with
// the imaginary-time blocks; zero for N = 0.
double eta(const Spectrum& sp, double beta, double hbar = 1.0);

// Thermal second moments of the main oscillator, zero means:
// <y0^2> = hbar / (2 (a - b - eta)), <p0^2> = hbar (a + b) / 2 in the real
// hyperbolic analogs of the imaginary-time block coefficients.
ReducedGaussian equilibrium_moments(const Spectrum& sp, double beta,
                                    double hbar = 1.0);

// Position-representation equilibrium reduced density matrix on a grid.
ComplexMatrix equilibrium_rho(const Spectrum& sp, double beta,
                              const Vector& grid, double hbar = 1.0);

ThermalReport thermal_report(const Spectrum& sp, double beta,
                             double hbar = 1.0);

// Full-system Gibbs state: normal-mode thermal covariances rotated back to
// the coupled coordinates; stationary under the closed dynamics.
GaussianState gibbs_state(const Spectrum& sp, double beta, double hbar = 1.0);

} // namespace oscbath
