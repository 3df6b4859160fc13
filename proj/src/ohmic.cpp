#include "oscbath/ohmic.hpp"

#include <cmath>
#include <sstream>

#include "oscbath/errors.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

std::vector<BathMode> discretize_ohmic(const OhmicSpec& spec, double omega0) {
  if (spec.n_modes < 1) throw ConfigError("n_modes must be at least 1");
  if (!(spec.omega_max > 0.0)) throw ConfigError("omega_max must be positive");
  if (!(spec.cutoff > 0.0)) throw ConfigError("cutoff must be positive");
  if (spec.eta < 0.0) throw ConfigError("eta must be nonnegative");
  if (!(omega0 > 0.0)) throw NonPositiveFrequency("omega0 must be positive");

  const double dw = spec.omega_max / spec.n_modes;
  std::vector<BathMode> modes(static_cast<std::size_t>(spec.n_modes));
  double shift = 0.0;
  for (int k = 1; k <= spec.n_modes; ++k) {
    const double w = k * dw;
    const double J = spec.eta * w * std::exp(-w / spec.cutoff);
    BathMode& m = modes[static_cast<std::size_t>(k - 1)];
    m.omega = w;
    m.g = std::sqrt(2.0 / kPi * J * w * dw);
    shift += m.g * m.g / (w * w);
  }

  if (omega0 * omega0 - shift <= 0.0) {
    std::ostringstream msg;
    msg << "discretized bath destabilizes the model (omega0^2 = "
        << omega0 * omega0 << ", frequency shift = " << shift
        << "); reduce eta below " << spec.eta * omega0 * omega0 / shift;
    throw UnstableDiscretization(msg.str());
  }
  return modes;
}

} // namespace oscbath
