#include "oscbath/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "oscbath/errors.hpp"

namespace oscbath {

namespace {

// Principal log-determinant of a complex symmetric matrix whose real part is
// positive definite. Every eigenvalue then lies in the open right half
// plane, so the per-eigenvalue principal log is branch-safe.
Complex log_det_principal(const ComplexMatrix& Gamma) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(Gamma);
  if (es.info() != Eigen::Success)
    throw EigenFailure("eigen-decomposition of a Gaussian form failed");
  Complex acc = 0.0;
  for (Eigen::Index k = 0; k < Gamma.rows(); ++k)
    acc += std::log(es.eigenvalues()(k));
  return acc;
}

void require_convergent(const ComplexMatrix& Gamma) {
  Matrix re = 0.5 * (Gamma.real() + Gamma.real().transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(re);
  if (es.info() != Eigen::Success)
    throw EigenFailure("eigen-decomposition of a Gaussian form failed");
  if (es.eigenvalues().minCoeff() < 1e-12)
    throw NonConvergentGaussian(
        "Gaussian form not convergent: min real-part eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()));
}

} // namespace

void check_state(const GaussianState& st, double hbar) {
  const auto d = st.mean.size();
  if (d % 2 != 0 || st.cov.rows() != d || st.cov.cols() != d)
    throw DimensionMismatch("state dimensions are inconsistent");
  if (!st.cov.isApprox(st.cov.transpose(), 1e-12))
    throw NonPhysicalState("covariance is not symmetric");
  const auto n = d / 2;
  ComplexMatrix u = st.cov.cast<Complex>();
  // cov + (i hbar / 2) J with J = [[0, I], [-I, 0]] is Hermitian.
  for (Eigen::Index k = 0; k < n; ++k) {
    u(k, k + n) += Complex(0.0, hbar / 2.0);
    u(k + n, k) += Complex(0.0, -hbar / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(u);
  if (es.info() != Eigen::Success)
    throw EigenFailure("uncertainty check failed to diagonalize");
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw NonPhysicalState(
        "state violates the uncertainty condition, min eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()));
}

GaussianState thermal_bath_state(const Model& m, double beta,
                                 const SingleModeGaussian& main_state) {
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  const int n = m.dim();
  GaussianState st;
  st.mean = Vector::Zero(2 * n);
  st.cov = Matrix::Zero(2 * n, 2 * n);
  st.mean(0) = main_state.mean_y;
  st.mean(n) = main_state.mean_p;
  st.cov(0, 0) = main_state.var_y;
  st.cov(n, n) = main_state.var_p;
  st.cov(0, n) = st.cov(n, 0) = main_state.cov_yp;
  for (int k = 1; k < n; ++k) {
    const double w = m.baths[k - 1].omega;
    const double coth = 1.0 / std::tanh(0.5 * beta * m.hbar * w);
    st.cov(k, k) = m.hbar / (2.0 * w) * coth;
    st.cov(k + n, k + n) = m.hbar * w / 2.0 * coth;
  }
  check_state(st, m.hbar);
  return st;
}

Matrix symplectic_map(const MatFun& mf) {
  const auto n = mf.F.rows();
  Matrix S(2 * n, 2 * n);
  S.topLeftCorner(n, n) = mf.Fdot;
  S.topRightCorner(n, n) = mf.F;
  S.bottomLeftCorner(n, n) = mf.Fddot;
  S.bottomRightCorner(n, n) = mf.Fdot;
  return S;
}

GaussianState evolve_state(const GaussianState& st, const MatFun& mf,
                           const Displacements* drive) {
  const auto n = mf.F.rows();
  if (st.mean.size() != 2 * n)
    throw DimensionMismatch("state and matrix function dimensions differ");
  const Matrix S = symplectic_map(mf);
  GaussianState out;
  out.mean = S * st.mean;
  if (drive != nullptr) {
    if (drive->R.size() != n || drive->Rdot.size() != n)
      throw DimensionMismatch("drive displacement dimensions differ");
    out.mean.head(n) -= drive->R;
    out.mean.tail(n) -= drive->Rdot;
  }
  out.cov = S * st.cov * S.transpose();
  return out;
}

Complex gaussian_integral(const ComplexMatrix& Gamma, const ComplexVector& j) {
  if (Gamma.rows() != Gamma.cols() || Gamma.rows() != j.size())
    throw DimensionMismatch("Gaussian integral dimensions differ");
  require_convergent(Gamma);
  const auto n = Gamma.rows();
  const ComplexVector sol = Gamma.fullPivLu().solve(j);
  const Complex jGj = (j.transpose() * sol)(0, 0); // plain j . Gamma^-1 j
  const Complex log_val = 0.5 * static_cast<double>(n) * std::log(2.0 * kPi) -
                          0.5 * log_det_principal(Gamma) + 0.5 * jGj;
  return std::exp(log_val);
}

MarginalizeResult gaussian_marginalize(const ComplexMatrix& Q, int n_first) {
  const auto m = Q.rows();
  if (m != Q.cols() || n_first <= 0 || n_first >= m)
    throw DimensionMismatch("marginalization block sizes are invalid");
  const auto r = m - n_first;
  const ComplexMatrix Q11 = Q.topLeftCorner(n_first, n_first);
  const ComplexMatrix Q12 = Q.topRightCorner(n_first, r);
  const ComplexMatrix Q22 = Q.bottomRightCorner(r, r);
  require_convergent(Q11);
  MarginalizeResult out;
  out.Q = Q22 - Q12.transpose() * Q11.fullPivLu().solve(Q12);
  // Keep the reduced form exactly symmetric.
  out.Q = 0.5 * (out.Q + out.Q.transpose()).eval();
  out.log_prefactor = 0.5 * static_cast<double>(n_first) *
                          std::log(2.0 * kPi) -
                      0.5 * log_det_principal(Q11);
  return out;
}

} // namespace oscbath
