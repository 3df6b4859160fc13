#include <clocale>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "oscbath/config.hpp"
#include "oscbath/errors.hpp"
#include "oscbath/run.hpp"

namespace {

int exit_code(oscbath::ErrorClass cls) {
  switch (cls) {
    case oscbath::ErrorClass::Config: return 2;
    case oscbath::ErrorClass::Unstable: return 3;
    case oscbath::ErrorClass::Caustic: return 4;
    case oscbath::ErrorClass::Numerical: return 5;
  }
  return 5;
}

} // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"coupled harmonic oscillator and bath: exact propagators, "
               "reduced dynamics, thermal states and correlators"};
  app.name("oscbath");

  std::string command, config_path, out_path, format;
  bool verbose = false;
  app.add_option("command", command,
                 "spectrum | evolve | equilibrium | kernel | propagate | "
                 "correlate")
      ->required();
  app.add_option("--config", config_path, "JSON configuration file")
      ->required();
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("-v,--verbose", verbose, "progress notes on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    oscbath::RunConfig cfg = oscbath::load_config(config_path);
    cfg.command = oscbath::parse_command(command);
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!format.empty()) cfg.format = oscbath::parse_format(format);
    cfg.verbose = cfg.verbose || verbose;
    return oscbath::run(cfg);
  } catch (const oscbath::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}
