#pragma once

#include <vector>

#include "oscbath/types.hpp"

namespace oscbath {

struct BathMode {
  double omega{1.0}; // bath frequency, > 0
  double g{0.0};     // bilinear coupling to the main coordinate
};

// One main oscillator coupled linearly to N independent bath oscillators.
struct Model {
  double omega0{1.0};
  double hbar{1.0};
  std::vector<BathMode> baths;

  int n_baths() const { return static_cast<int>(baths.size()); }
  int dim() const { return n_baths() + 1; } // N + 1 coordinates
};

// Frequency-squared matrix of the coupled system and its eigensystem.
// B is real symmetric with an arrowhead layout: the main frequency in the
// corner, bath frequencies on the diagonal, couplings in row/column zero.
struct Spectrum {
  Vector z;  // normal-mode frequencies, ascending, all > 0
  Matrix X;  // orthogonal; columns are modes, sign fixed by X(0,a) >= 0
};

// Margin of the stability condition: omega0^2 - sum_k g_k^2 / omega_k^2.
double schur_margin(const Model& m);

// Checks frequencies and the stability condition; returns the model
// unchanged on success. Throws NonPositiveFrequency or UnstableModel.
Model validate_model(double omega0, std::vector<BathMode> baths,
                     double hbar = 1.0);

Matrix build_B(const Model& m);

// Eigen-decomposition of B with the deterministic sign convention.
// Throws EigenFailure or NonPositiveEigenvalue.
Spectrum spectrum(const Matrix& B);

// Characteristic function whose roots are the normal-mode frequencies
// squared: z2 - omega0^2 - sum_k g_k^2 / (z2 - omega_k^2).
// Throws PoleInput when z2 sits on a bath frequency squared.
double char_g(const Model& m, double z2);

// Memory kernel sum_k g_k^2 sin(omega_k t) / omega_k and its Laplace
// transform sum_k g_k^2 / (s^2 + omega_k^2).
double susceptibility(const Model& m, double t);
double susceptibility_laplace(const Model& m, double s);

// Retarded response of the main coordinate. The Laplace form is
// 1 / (s^2 + omega0^2 - sum_k g_k^2/(s^2 + omega_k^2)); the frequency form
// is -1/char_g(omega^2). Throws AtPole at zeros of the denominator.
double green_laplace(const Model& m, double s);
double green_frequency(const Model& m, double omega);

// Coefficients of the operator noise built from free bath evolution:
// c_k = g_k cos(omega_k t), s_k = g_k sin(omega_k t) / omega_k.
struct NoiseCoefficients {
  Vector c;
  Vector s;
};
NoiseCoefficients noise_coefficients(const Model& m, double t);

} // namespace oscbath
