#pragma once

#include "oscbath/gaussian.hpp"
#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

// Marginal state of the main oscillator.
using ReducedGaussian = SingleModeGaussian;

// Time-evolution kernel of the reduced density matrix for a thermal bath,
//   rho(y0, y0'; t) = int dy01 dy02 J * rho(y01, y02; 0),
//   J = (b3 / 2 pi) exp{ i b1 X xi + i b2 X0 xi - i b3 X xi0 - i b4 X0 xi0 }
//       * exp{ -a11 xi^2 - a12 xi xi0 - a22 xi0^2 },
// in the mean/difference coordinates X = (y0 + y0')/2, xi = y0 - y0',
// X0 = (y01 + y02)/2, xi0 = y01 - y02. Planck's constant is absorbed into
// the coefficients.
struct ReducedKernel {
  double b1{0.0};
  double b2{0.0};
  double b3{0.0};
  double b4{0.0};
  double a11{0.0};
  double a12{0.0};
  double a22{0.0};
};

// Diagnostics of the kernel assembly: the independently accumulated
// normalization (which must equal b3 / 2 pi) and the largest coefficient
// that the structural form above says must vanish.
struct ReducedKernelDetail {
  ReducedKernel kernel;
  Complex log_prefactor{0.0};
  double structure_residual{0.0};
};

// Marginal moments of the main pair from a full Gaussian state.
ReducedGaussian reduce_to_main(const GaussianState& st);

// Position-representation density matrix of a single-mode Gaussian on a
// grid: rho(y, y') with ybar = (y + y')/2, xi = y - y',
//   rho = (2 pi var_y)^{-1/2} exp{ -(ybar - m_y)^2 / 2 var_y
//         + i [m_p + (cov/var_y)(ybar - m_y)] xi / hbar
//         - (var_y var_p - cov^2) xi^2 / (2 hbar^2 var_y) }.
// Throws NonPhysicalState when the moments violate the uncertainty bound.
ComplexMatrix rho_red_grid(const ReducedGaussian& g, const Vector& grid,
                           double hbar = 1.0);

// Bath elimination in closed form: the propagator pair is contracted with
// the thermal bath kernel by three nested Gaussian integrals (bath
// coordinates of the forward branch, of the backward branch, then the
// traced final coordinates), and the remaining quadratic form in
// (y0, y0', y01, y02) is rotated to the X/xi coordinates above.
ReducedKernelDetail kernel_J_coeffs_detail(const Model& m, const Spectrum& sp,
                                           double beta, double t);
ReducedKernel kernel_J_coeffs(const Model& m, const Spectrum& sp, double beta,
                              double t);

// Applies the kernel to a sampled initial density matrix by 2D Simpson
// quadrature over (y01, y02); the grid must resolve both the initial and
// the evolved Gaussian (>= 200 points spanning several widths).
ComplexMatrix evolve_rho_via_kernel(const ReducedKernel& k,
                                    const ComplexMatrix& rho0,
                                    const Vector& grid);

// Recovers single-mode Gaussian moments from a sampled density matrix
// (least squares on the log-magnitude quadratic form and the near-diagonal
// phases). The sampled state must be Gaussian for the result to mean
// anything.
ReducedGaussian fit_gaussian(const Vector& grid, const ComplexMatrix& rho,
                             double hbar = 1.0);

} // namespace oscbath
