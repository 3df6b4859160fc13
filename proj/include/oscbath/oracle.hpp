#pragma once

#include <functional>
#include <vector>

#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

// Reference implementations used by the test suite. Everything here takes an
// independent numerical route (ODE integration, quadrature, textbook closed
// forms) so that the main library is never compared against itself. Shared
// ground is limited to Eigen, build_B, and the raw eigen-decomposition.

namespace oscbath::oracle {

struct FSolution {
  std::vector<double> times;
  std::vector<Matrix> F;
  std::vector<Matrix> Fdot;
};

// Fixed-step RK4 integration of F'' = -B F with F(0) = 0, F'(0) = I,
// sampled at the requested times. Throws StepTooLarge when the step does
// not resolve the fastest mode (h must be <= 1e-3 * 2*pi/z_max).
FSolution integrate_F_ode(const Matrix& B, const std::vector<double>& times,
                          double h);

// Fixed-step RK4 for the classical driven system y'' = -B y - f(t),
// returning (y, p) at t_end.
std::pair<Vector, Vector> integrate_classical_driven(
    const Matrix& B, const Vector& y0, const Vector& p0,
    const std::function<Vector(double)>& force, double t_end, double h);

// Closed-form single-oscillator propagator with the focal-point phase
// convention: one factor exp(-i pi/2) per focal time crossed.
Complex mehler_1d(double omega, double hbar, double t, double y, double yp);

// Composite Simpson quadrature on uniform grids; n_points must be odd >= 3.
Complex quad_1d(const std::function<Complex(double)>& f, double lo, double hi,
                int n_points);
Complex quad_2d(const std::function<Complex(double, double)>& f, double lo1,
                double hi1, double lo2, double hi2, int n1, int n2);

// Equilibrium main-coordinate moments by direct normal-mode summation:
// <y0^2> = sum_a X(0,a)^2 (hbar/2 z_a) coth(beta hbar z_a / 2), and the
// momentum analog with (hbar z_a / 2).
std::pair<double, double> normal_mode_thermal(const Spectrum& sp, double beta,
                                              double hbar);

// Split-step (Trotterized) grid integration of the driven single-oscillator
// Schroedinger equation, V = omega^2 y^2 / 2 + f(t) y. psi0 holds samples on
// the uniform grid [y_min, y_max) with n points; returns the final samples.
ComplexVector split_step_forced_1d(double omega, double hbar,
                                   const std::function<double(double)>& force,
                                   double t_end, int n_slices, double y_min,
                                   double y_max, const ComplexVector& psi0);

} // namespace oscbath::oracle
