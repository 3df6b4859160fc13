#include "oscbath/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fftw3.h>

#include "oscbath/errors.hpp"

namespace oscbath::oracle {

namespace {

double spectral_radius_sqrt(const Matrix& B) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(B);
  if (es.info() != Eigen::Success)
    throw EigenFailure("eigen-decomposition failed in the ODE oracle");
  return std::sqrt(es.eigenvalues().maxCoeff());
}

} // namespace

FSolution integrate_F_ode(const Matrix& B, const std::vector<double>& times,
                          double h) {
  const double z_max = spectral_radius_sqrt(B);
  if (h > 1e-3 * (2.0 * kPi / z_max))
    throw StepTooLarge("RK4 step " + std::to_string(h) +
                       " too large for fastest mode z_max = " +
                       std::to_string(z_max));

  const auto n = B.rows();
  FSolution out;
  out.times = times;
  out.F.reserve(times.size());
  out.Fdot.reserve(times.size());

  for (double t_target : times) {
    Matrix F = Matrix::Zero(n, n);
    Matrix G = Matrix::Identity(n, n); // G = dF/dt
    const long steps = std::max(1L, std::lround(t_target / h));
    const double dt = t_target / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
      // RK4 on the first-order system (F, G)' = (G, -B F).
      Matrix k1F = G;
      Matrix k1G = -B * F;
      Matrix k2F = G + 0.5 * dt * k1G;
      Matrix k2G = -B * (F + 0.5 * dt * k1F);
      Matrix k3F = G + 0.5 * dt * k2G;
      Matrix k3G = -B * (F + 0.5 * dt * k2F);
      Matrix k4F = G + dt * k3G;
      Matrix k4G = -B * (F + dt * k3F);
      F += (dt / 6.0) * (k1F + 2.0 * k2F + 2.0 * k3F + k4F);
      G += (dt / 6.0) * (k1G + 2.0 * k2G + 2.0 * k3G + k4G);
    }
    out.F.push_back(F);
    out.Fdot.push_back(G);
  }
  return out;
}

std::pair<Vector, Vector> integrate_classical_driven(
    const Matrix& B, const Vector& y0, const Vector& p0,
    const std::function<Vector(double)>& force, double t_end, double h) {
  Vector y = y0;
  Vector p = p0;
  const long steps = std::max(1L, std::lround(t_end / h));
  const double dt = t_end / static_cast<double>(steps);
  for (long s = 0; s < steps; ++s) {
    const double t = dt * static_cast<double>(s);
    Vector k1y = p;
    Vector k1p = -B * y - force(t);
    Vector k2y = p + 0.5 * dt * k1p;
    Vector k2p = -B * (y + 0.5 * dt * k1y) - force(t + 0.5 * dt);
    Vector k3y = p + 0.5 * dt * k2p;
    Vector k3p = -B * (y + 0.5 * dt * k2y) - force(t + 0.5 * dt);
    Vector k4y = p + dt * k3p;
    Vector k4p = -B * (y + dt * k3y) - force(t + dt);
    y += (dt / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    p += (dt / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
  }
  return {y, p};
}

Complex mehler_1d(double omega, double hbar, double t, double y, double yp) {
  if (t < 0.0) return std::conj(mehler_1d(omega, hbar, -t, y, yp));
  const double s = std::sin(omega * t);
  const double c = std::cos(omega * t);
  if (std::abs(s) < kCausticEps)
    throw CausticError(t, 0, "single-mode propagator at a focal time");
  // Magnitude sqrt(omega / 2 pi hbar |sin|); phase -(pi/4 + m pi/2) with m
  // focal crossings, m = floor(omega t / pi).
  const double m = std::floor(omega * t / kPi);
  const double mag = std::sqrt(omega / (2.0 * kPi * hbar * std::abs(s)));
  const Complex pref = mag * std::polar(1.0, -(kPi / 4.0 + m * kPi / 2.0));
  const double phase =
      omega / (2.0 * hbar * s) * ((y * y + yp * yp) * c - 2.0 * y * yp);
  return pref * std::polar(1.0, phase);
}

Complex quad_1d(const std::function<Complex(double)>& f, double lo, double hi,
                int n_points) {
  if (n_points < 3 || n_points % 2 == 0)
    throw GridTooCoarse("Simpson quadrature needs an odd point count >= 3");
  const double h = (hi - lo) / (n_points - 1);
  Complex acc = f(lo) + f(hi);
  for (int i = 1; i < n_points - 1; ++i)
    acc += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

Complex quad_2d(const std::function<Complex(double, double)>& f, double lo1,
                double hi1, double lo2, double hi2, int n1, int n2) {
  return quad_1d(
      [&](double x) {
        return quad_1d([&](double y) { return f(x, y); }, lo2, hi2, n2);
      },
      lo1, hi1, n1);
}

std::pair<double, double> normal_mode_thermal(const Spectrum& sp, double beta,
                                              double hbar) {
  double y2 = 0.0, p2 = 0.0;
  for (int a = 0; a < sp.z.size(); ++a) {
    const double z = sp.z(a);
    const double w = sp.X(0, a) * sp.X(0, a);
    const double coth = 1.0 / std::tanh(0.5 * beta * hbar * z);
    y2 += w * (hbar / (2.0 * z)) * coth;
    p2 += w * (hbar * z / 2.0) * coth;
  }
  return {y2, p2};
}

ComplexVector split_step_forced_1d(double omega, double hbar,
                                   const std::function<double(double)>& force,
                                   double t_end, int n_slices, double y_min,
                                   double y_max, const ComplexVector& psi0) {
  const int n = static_cast<int>(psi0.size());
  if (n < 8) throw GridTooCoarse("split-step grid needs at least 8 points");
  const double L = y_max - y_min;
  const double dy = L / n;
  const double tau = t_end / n_slices;

  ComplexVector psi = psi0;
  auto* data = reinterpret_cast<fftw_complex*>(psi.data());
  fftw_plan fwd = fftw_plan_dft_1d(n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_dft_1d(n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);

  // Strang split: half potential kick, exact kinetic step in k-space, half
  // potential kick, with the force frozen at the slice midpoint.
  ComplexVector kin(n);
  for (int j = 0; j < n; ++j) {
    const double k =
        2.0 * kPi * (j < n / 2 ? j : j - n) / L;
    kin(j) = std::polar(1.0, -0.5 * tau * hbar * k * k);
  }
  for (int s = 0; s < n_slices; ++s) {
    const double tm = (s + 0.5) * tau;
    const double f = force(tm);
    for (int j = 0; j < n; ++j) {
      const double y = y_min + j * dy;
      const double v = 0.5 * omega * omega * y * y + f * y;
      psi(j) *= std::polar(1.0, -0.5 * tau * v / hbar);
    }
    fftw_execute(fwd);
    psi.array() *= kin.array();
    fftw_execute(bwd);
    psi /= static_cast<double>(n);
    for (int j = 0; j < n; ++j) {
      const double y = y_min + j * dy;
      const double v = 0.5 * omega * omega * y * y + f * y;
      psi(j) *= std::polar(1.0, -0.5 * tau * v / hbar);
    }
  }
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  return psi;
}

} // namespace oscbath::oracle
