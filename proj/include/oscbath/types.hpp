#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oscbath {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Default tolerance on |sin(z_a t)| below which F(t) is treated as singular
// (focal time of the propagator).
inline constexpr double kCausticEps = 1e-8;

} // namespace oscbath
