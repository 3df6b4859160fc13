#pragma once

#include <vector>

#include "oscbath/model.hpp"

namespace oscbath {

// Ohmic spectral density J(w) = eta * w * exp(-w / cutoff).
struct OhmicSpec {
  double eta{0.1};
  double cutoff{5.0};
  int n_modes{8};
  double omega_max{10.0};
};

// Linear discretization: omega_k = k * dw with dw = omega_max / n_modes,
// g_k^2 = (2/pi) J(omega_k) omega_k dw. Throws UnstableDiscretization with a
// suggested coupling bound when the resulting model would be unstable.
std::vector<BathMode> discretize_ohmic(const OhmicSpec& spec, double omega0);

} // namespace oscbath
