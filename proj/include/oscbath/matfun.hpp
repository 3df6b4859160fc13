#pragma once

#include <vector>

#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

// Trigonometric matrix functions of B at time t, built spectrally:
// F = X diag(sin(z t)/z) X^T, Fdot = X diag(cos(z t)) X^T, Fddot = -B F.
struct MatFun {
  double t{0.0};
  Matrix F;
  Matrix Fdot;
  Matrix Fddot;
  double detF{0.0};                 // prod_a sin(z_a t)/z_a, signed
  std::vector<bool> caustic_flags;  // per mode: |sin(z_a t)| < eps
};

// Partition of F^-1 Fdot and F^-1 into main/bath blocks:
//   F^-1 Fdot = [[a, Bvec^T], [Bvec, A]],  F^-1 = [[b, Cvec^T], [Cvec, D]].
struct Blocks {
  double a{0.0};
  double b{0.0};
  Vector Bvec;
  Vector Cvec;
  Matrix A;
  Matrix D;
};

// Real hyperbolic analogs at imaginary time t = -i hbar beta. Conventions:
// the continuation of F is -i*Fh, of Fdot is Fdoth, and of each block
// quantity (a, b, Bvec, Cvec, and A - D) is i times the field stored here.
struct ImaginaryTimeBlocks {
  Matrix Fh;     // X diag(sinh(z hbar beta)/z) X^T
  Matrix Fdoth;  // X diag(cosh(z hbar beta)) X^T
  double ah{0.0};
  double bh{0.0};
  Vector Bh;
  Vector Ch;
  Matrix Ah;
  Matrix Dh;
};

MatFun matfun_at(const Spectrum& sp, double t, double eps = kCausticEps);

// Spectral inverse X diag(z/sin(z t)) X^T. Throws CausticError naming the
// first offending mode when any |sin(z_a t)| < eps.
Matrix f_inverse(const Spectrum& sp, double t, double eps = kCausticEps);

// Requires f_inverse to succeed at t.
Blocks blocks_at(const Spectrum& sp, double t, double eps = kCausticEps);

// Hyperbolic block quantities; entries with z hbar beta > 700 use the
// saturated asymptotics coth -> 1, 1/sinh -> 0 instead of overflowing.
ImaginaryTimeBlocks imaginary_time_blocks(const Spectrum& sp, double beta,
                                          double hbar = 1.0);

} // namespace oscbath
