#pragma once

#include <stdexcept>
#include <string>

namespace oscbath {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorClass {
  Config,    // bad input data or malformed request
  Unstable,  // model fails the stability requirement
  Caustic,   // F(t) singular at a focal time
  Numerical, // solver breakdown, non-convergent integral, singular block, ...
};

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string& msg)
      : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

private:
  ErrorClass cls_;
};

struct NonPositiveFrequency : Error {
  explicit NonPositiveFrequency(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct UnstableModel : Error {
  explicit UnstableModel(const std::string& msg)
      : Error(ErrorClass::Unstable, msg) {}
};

struct UnstableDiscretization : Error {
  explicit UnstableDiscretization(const std::string& msg)
      : Error(ErrorClass::Unstable, msg) {}
};

struct EigenFailure : Error {
  explicit EigenFailure(const std::string& msg)
      : Error(ErrorClass::Numerical, msg) {}
};

struct NonPositiveEigenvalue : Error {
  explicit NonPositiveEigenvalue(const std::string& msg)
      : Error(ErrorClass::Numerical, msg) {}
};

struct PoleInput : Error {
  explicit PoleInput(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct AtPole : Error {
  explicit AtPole(const std::string& msg) : Error(ErrorClass::Config, msg) {}
};

struct CausticError : Error {
  CausticError(double t, int mode, const std::string& msg)
      : Error(ErrorClass::Caustic, msg), t(t), mode(mode) {}
  double t;
  int mode;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct GridTooCoarse : Error {
  explicit GridTooCoarse(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct NonConvergentGaussian : Error {
  explicit NonConvergentGaussian(const std::string& msg)
      : Error(ErrorClass::Numerical, msg) {}
};

struct NonPhysicalState : Error {
  explicit NonPhysicalState(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct SingularBlock : Error {
  explicit SingularBlock(const std::string& msg)
      : Error(ErrorClass::Numerical, msg) {}
};

struct StepCollision : Error {
  explicit StepCollision(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct StepTooLarge : Error {
  explicit StepTooLarge(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct TimeOutOfRange : Error {
  explicit TimeOutOfRange(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg)
      : Error(ErrorClass::Config, msg) {}
};

} // namespace oscbath
