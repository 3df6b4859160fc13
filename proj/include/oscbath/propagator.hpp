#pragma once

#include <functional>

#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

// External force on the coordinates, uniformly sampled on [0, duration]
// with linear interpolation between samples.
struct ForceProfile {
  Matrix samples; // (N+1) x n_samples; row mu holds f_mu at the grid times
  double step{0.0};

  int n_coords() const { return static_cast<int>(samples.rows()); }
  int n_samples() const { return static_cast<int>(samples.cols()); }
  double duration() const { return step * (n_samples() - 1); }
  double value(int mu, double tau) const;

  static ForceProfile from_function(const std::function<Vector(double)>& f,
                                    int n_coords, double t_end,
                                    int n_samples);
  // Force on the main coordinate only.
  static ForceProfile main_only(const std::function<double(double)>& f,
                                int n_coords, double t_end, int n_samples);
};

// Gaussian form of the coordinate-space propagator
//   K(y, t; y', 0) = prefactor * exp( (i/2 hbar) [ y.Myy.y + y'.Mpp.y'
//                    + y'.Mcross.y ] + linear_y.y + linear_yprime.y'
//                    + phase0 ),
// with Myy = Mpp = F^-1 Fdot and Mcross = -2 F^-1. The prefactor carries
// the focal-point branch: per normal mode, sqrt(z/2 pi hbar |sin(z t)|)
// times exp(-i(pi/4 + m pi/2)) with m crossings at positive t, and the
// complex conjugate convention at negative t. The driven terms fill
// linear_y = -(i/hbar) F^-1 Rcheck, linear_yprime = -(i/hbar) F^-1 R and
// phase0 = -i zeta; they stay zero for the free form.
struct PropagatorForm {
  double t{0.0};
  double hbar{1.0};
  Complex prefactor{0.0};
  Matrix Myy;
  Matrix Mpp;
  Matrix Mcross;
  ComplexVector linear_y;
  ComplexVector linear_yprime;
  Complex phase0{0.0};
};

// Drive responses at time t: R = int_0^t F(t - s) f(s) ds,
// Rcheck = int_0^t F(s) f(s) ds, Rdot = int_0^t Fdot(t - s) f(s) ds,
// all by composite Simpson on the force sample grid.
struct DriveDisplacements {
  Vector R;
  Vector Rcheck;
  Vector Rdot;
};

PropagatorForm propagator_form(const Spectrum& sp, double t,
                               double hbar = 1.0);

Complex evaluate_K(const PropagatorForm& form, const Vector& y,
                   const Vector& yprime);

DriveDisplacements drive_displacements(const Spectrum& sp,
                                       const ForceProfile& force, double t);

// Quadratic drive phase: (1/hbar) sum_a int_0^t ds int_0^s du
// phi_a(s) sin(z_a u) sin(z_a (t-s)) / (z_a sin(z_a t)) phi_a(u), with
// phi_a the force projected on normal mode a; Simpson in both variables.
double zeta(const Spectrum& sp, const ForceProfile& force, double t,
            double hbar = 1.0);

PropagatorForm propagator_form_forced(const Spectrum& sp,
                                      const ForceProfile& force, double t,
                                      double hbar = 1.0);

Complex evaluate_K_forced(const Spectrum& sp, const ForceProfile& force,
                          double t, const Vector& y, const Vector& yprime,
                          double hbar = 1.0);

} // namespace oscbath
