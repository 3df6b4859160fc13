#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscbath/gaussian.hpp"
#include "oscbath/model.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

enum class Command { Spectrum, Evolve, Equilibrium, Kernel, Propagate,
                     Correlate };
enum class OutputFormat { Csv, Json };

// Uniform time grid t_start + k (t_end - t_start) / steps, k = 0..steps.
struct TimeGrid {
  double t_start{0.0};
  double t_end{1.0};
  int steps{1};
};

struct BetaGrid {
  double start{0.5};
  double end{2.0};
  int steps{1};
};

struct ForceSpec {
  enum class Kind { None, Constant, Sinusoid, Samples };
  Kind kind{Kind::None};
  double value{0.0};     // constant force
  double amplitude{0.0}; // amplitude * sin(frequency * t + phase)
  double frequency{1.0};
  double phase{0.0};
  std::vector<double> values; // pre-sampled force on the main coordinate
  double step{0.0};           // sample spacing for "samples"
  int n_samples{401};         // resolution used for constant/sinusoid
};

struct PositionGrid {
  double y_min{-8.0};
  double y_max{8.0};
  int points{201};
};

struct CorrelatorSpec {
  std::vector<double> times;
  std::vector<int> indices;
  Vector y;
  Vector yprime;
  double t{1.0};
  std::string method{"auto"}; // auto | closed | fd
  double fd_step{1e-4};
  double grid_step{1e-2};
};

struct RunConfig {
  Command command{Command::Spectrum};
  Model model;
  TimeGrid time_grid;
  std::optional<double> beta;
  std::optional<BetaGrid> beta_grid;
  ForceSpec force;
  PositionGrid grid;
  SingleModeGaussian initial;
  std::vector<CorrelatorSpec> correlators;
  std::string out_path; // empty writes to stdout
  OutputFormat format{OutputFormat::Csv};
  bool verbose{false};
};

Command parse_command(const std::string& name);
OutputFormat parse_format(const std::string& name);

// Parse a JSON config document / file. Malformed input raises ConfigError
// with the offending field named; the model is validated on load.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

} // namespace oscbath
