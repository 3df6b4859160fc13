#include "oscbath/model.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "oscbath/errors.hpp"

namespace oscbath {

double schur_margin(const Model& m) {
  double s = 0.0;
  for (const auto& b : m.baths) s += b.g * b.g / (b.omega * b.omega);
  return m.omega0 * m.omega0 - s;
}

Model validate_model(double omega0, std::vector<BathMode> baths, double hbar) {
  if (!(omega0 > 0.0))
    throw NonPositiveFrequency("main frequency must be positive, got " +
                               std::to_string(omega0));
  if (!(hbar > 0.0))
    throw NonPositiveFrequency("hbar must be positive, got " +
                               std::to_string(hbar));
  for (std::size_t k = 0; k < baths.size(); ++k) {
    if (!(baths[k].omega > 0.0)) {
      std::ostringstream os;
      os << "bath frequency " << k << " must be positive, got "
         << baths[k].omega;
      throw NonPositiveFrequency(os.str());
    }
  }
  Model m{omega0, hbar, std::move(baths)};
  double margin = schur_margin(m);
  if (!(margin > 0.0)) {
    std::ostringstream os;
    os << "coupled system is not bound: omega0^2 - sum g_k^2/omega_k^2 = "
       << margin << " <= 0";
    throw UnstableModel(os.str());
  }
  return m;
}

Matrix build_B(const Model& m) {
  const int n = m.dim();
  Matrix B = Matrix::Zero(n, n);
  B(0, 0) = m.omega0 * m.omega0;
  for (int k = 0; k < m.n_baths(); ++k) {
    B(k + 1, k + 1) = m.baths[k].omega * m.baths[k].omega;
    B(0, k + 1) = -m.baths[k].g;
    B(k + 1, 0) = -m.baths[k].g;
  }
  return B;
}

Spectrum spectrum(const Matrix& B) {
  if (B.rows() != B.cols())
    throw DimensionMismatch("frequency matrix must be square");
  Eigen::SelfAdjointEigenSolver<Matrix> es(B);
  if (es.info() != Eigen::Success)
    throw EigenFailure("eigen-decomposition of the frequency matrix failed");

  Spectrum sp;
  sp.z = es.eigenvalues();
  sp.X = es.eigenvectors();
  const int n = static_cast<int>(sp.z.size());
  for (int a = 0; a < n; ++a) {
    double z2 = sp.z(a);
    if (!(z2 > 0.0))
      throw NonPositiveEigenvalue(
          "normal-mode frequency squared is not positive: " +
          std::to_string(z2));
    sp.z(a) = std::sqrt(z2);
    // Fix the column sign: main-coordinate entry >= 0, ties broken by the
    // first entry of visible size.
    double pivot = sp.X(0, a);
    if (std::abs(pivot) < 1e-14) {
      for (int i = 1; i < n; ++i) {
        if (std::abs(sp.X(i, a)) > 1e-14) {
          pivot = sp.X(i, a);
          break;
        }
      }
    }
    if (pivot < 0.0) sp.X.col(a) = -sp.X.col(a);
  }
  return sp;
}

double char_g(const Model& m, double z2) {
  double acc = z2 - m.omega0 * m.omega0;
  for (const auto& b : m.baths) {
    double w2 = b.omega * b.omega;
    double denom = z2 - w2;
    if (std::abs(denom) <= 1e-12 * std::max(std::abs(z2), w2))
      throw PoleInput("characteristic function evaluated at a bath "
                      "frequency squared: " +
                      std::to_string(z2));
    acc -= b.g * b.g / denom;
  }
  return acc;
}

double susceptibility(const Model& m, double t) {
  double acc = 0.0;
  for (const auto& b : m.baths)
    acc += b.g * b.g * std::sin(b.omega * t) / b.omega;
  return acc;
}

double susceptibility_laplace(const Model& m, double s) {
  double acc = 0.0;
  for (const auto& b : m.baths)
    acc += b.g * b.g / (s * s + b.omega * b.omega);
  return acc;
}

double green_laplace(const Model& m, double s) {
  double denom = s * s + m.omega0 * m.omega0 - susceptibility_laplace(m, s);
  if (std::abs(denom) < 1e-12)
    throw AtPole("Laplace response evaluated at a pole, s = " +
                 std::to_string(s));
  return 1.0 / denom;
}

double green_frequency(const Model& m, double omega) {
  double g = char_g(m, omega * omega); // PoleInput at bath frequencies
  if (std::abs(g) < 1e-12)
    throw AtPole("frequency response evaluated at a normal mode, omega = " +
                 std::to_string(omega));
  return -1.0 / g;
}

NoiseCoefficients noise_coefficients(const Model& m, double t) {
  const int nb = m.n_baths();
  NoiseCoefficients nc;
  nc.c = Vector(nb);
  nc.s = Vector(nb);
  for (int k = 0; k < nb; ++k) {
    const auto& b = m.baths[k];
    nc.c(k) = b.g * std::cos(b.omega * t);
    nc.s(k) = b.g * std::sin(b.omega * t) / b.omega;
  }
  return nc;
}

} // namespace oscbath
