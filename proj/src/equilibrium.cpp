#include "oscbath/equilibrium.hpp"

#include <cmath>

#include "oscbath/errors.hpp"
#include "oscbath/matfun.hpp"

namespace oscbath {

double partition_function(const Spectrum& sp, double beta, double hbar) {
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  double logZ = 0.0;
  for (Eigen::Index a = 0; a < sp.z.size(); ++a) {
    const double x = beta * hbar * sp.z(a);
    logZ -= 0.5 * x + std::log1p(-std::exp(-x));
  }
  return logZ;
}

double eta(const Spectrum& sp, double beta, double hbar) {
  const auto N = sp.z.size() - 1;
  if (N == 0) return 0.0;
  const ImaginaryTimeBlocks ib = imaginary_time_blocks(sp, beta, hbar);
  const Matrix AD = ib.Ah - ib.Dh;
  const Vector BC = ib.Bh - ib.Ch;
  const Eigen::FullPivLU<Matrix> lu(AD);
  if (!lu.isInvertible())
    throw SingularBlock("bath block A - D is singular at imaginary time");
  return BC.dot(lu.solve(BC));
}

ReducedGaussian equilibrium_moments(const Spectrum& sp, double beta,
                                    double hbar) {
  const ImaginaryTimeBlocks ib = imaginary_time_blocks(sp, beta, hbar);
  const double et = eta(sp, beta, hbar);
  const double denom = ib.ah - ib.bh - et;
  if (!(denom > 0.0))
    throw NonPhysicalState("thermal position variance is not positive");
  ReducedGaussian g;
  g.mean_y = 0.0;
  g.mean_p = 0.0;
  g.cov_yp = 0.0;
  g.var_y = hbar / (2.0 * denom);
  g.var_p = 0.5 * hbar * (ib.ah + ib.bh);
  return g;
}

ComplexMatrix equilibrium_rho(const Spectrum& sp, double beta,
                              const Vector& grid, double hbar) {
  return rho_red_grid(equilibrium_moments(sp, beta, hbar), grid, hbar);
}

ThermalReport thermal_report(const Spectrum& sp, double beta, double hbar) {
  ThermalReport rep;
  rep.beta = beta;
  rep.logZ = partition_function(sp, beta, hbar);
  rep.eta = eta(sp, beta, hbar);
  const ReducedGaussian g = equilibrium_moments(sp, beta, hbar);
  rep.mean_sq_y = g.var_y;
  rep.mean_sq_p = g.var_p;
  return rep;
}

GaussianState gibbs_state(const Spectrum& sp, double beta, double hbar) {
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  const auto n = sp.z.size();
  Vector dy(n), dp(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double c = 1.0 / std::tanh(0.5 * beta * hbar * z);
    dy(a) = 0.5 * hbar / z * c;
    dp(a) = 0.5 * hbar * z * c;
  }
  GaussianState st;
  st.mean = Vector::Zero(2 * n);
  st.cov = Matrix::Zero(2 * n, 2 * n);
  st.cov.topLeftCorner(n, n) = sp.X * dy.asDiagonal() * sp.X.transpose();
  st.cov.bottomRightCorner(n, n) = sp.X * dp.asDiagonal() * sp.X.transpose();
  return st;
}

} // namespace oscbath
