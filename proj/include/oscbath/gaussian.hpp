#pragma once

#include "oscbath/matfun.hpp"
#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

// First and second moments of a single coordinate/momentum pair.
struct SingleModeGaussian {
  double mean_y{0.0};
  double mean_p{0.0};
  double var_y{0.5};
  double var_p{0.5};
  double cov_yp{0.0};
};

// Gaussian state of the full system, coordinates ordered
// (y_0 .. y_N, p_0 .. p_N).
struct GaussianState {
  Vector mean;  // length 2(N+1)
  Matrix cov;   // symmetric, 2(N+1) x 2(N+1)

  int n_coords() const { return static_cast<int>(mean.size()) / 2; }
};

// Verifies symmetry and the uncertainty condition
// cov + (i hbar / 2) J >= 0 (eigenvalues >= -1e-10). Throws
// NonPhysicalState or DimensionMismatch.
void check_state(const GaussianState& st, double hbar);

// Product state: the main oscillator in main_state, each bath mode in its
// own thermal state, <y_k^2> = (hbar/2 omega_k) coth(beta hbar omega_k / 2),
// <p_k^2> = (hbar omega_k / 2) coth(beta hbar omega_k / 2), no cross terms.
GaussianState thermal_bath_state(const Model& m, double beta,
                                 const SingleModeGaussian& main_state);

// Linear flow of means under the closed system: S = [[Fdot, F], [Fddot,
// Fdot]], symplectic for every t.
Matrix symplectic_map(const MatFun& mf);

// Drive displacements subtracted from the mean, (R(t), Rdot(t)).
struct Displacements {
  Vector R;
  Vector Rdot;
};

// mean <- S mean - (R, Rdot); cov <- S cov S^T.
GaussianState evolve_state(const GaussianState& st, const MatFun& mf,
                           const Displacements* drive = nullptr);

// Integral of exp(-x^T Gamma x / 2 + j . x) over R^n:
// (2 pi)^{n/2} det(Gamma)^{-1/2} exp(j . Gamma^-1 j / 2), for complex
// symmetric Gamma with positive definite real part. The determinant branch
// is fixed by taking each eigenvalue to the principal power -1/2 (all args
// lie in (-pi/2, pi/2)). Throws NonConvergentGaussian when the real part is
// not positive definite (min eigenvalue < 1e-12).
Complex gaussian_integral(const ComplexMatrix& Gamma, const ComplexVector& j);

// Blockwise form of the same integral used to reduce quadratic forms:
// given exponent -z^T Q z / 2 over variables z = (x, u), integrating out the
// first n_first variables x yields exponent -u^T Q' u / 2 with
// Q' = Q22 - Q21 Q11^-1 Q12 and a multiplicative prefactor
// (2 pi)^{n/2} det(Q11)^{-1/2}, returned as log_prefactor. Same branch and
// positivity rules as gaussian_integral applied to Q11.
struct MarginalizeResult {
  ComplexMatrix Q;
  Complex log_prefactor;
};
MarginalizeResult gaussian_marginalize(const ComplexMatrix& Q, int n_first);

} // namespace oscbath
