#include "oscbath/reduced.hpp"

#include <cmath>

#include "oscbath/errors.hpp"
#include "oscbath/matfun.hpp"
#include "oscbath/quadrature.hpp"

namespace oscbath {

namespace {

constexpr Complex kI{0.0, 1.0};

// Accumulates a complex quadratic form: exponent(z) = z^T P z.
struct QuadForm {
  ComplexMatrix P;
  explicit QuadForm(int n) : P(ComplexMatrix::Zero(n, n)) {}
  // exponent += c * z_i * z_j
  void add(int i, int j, Complex c) {
    if (i == j) {
      P(i, i) += c;
    } else {
      P(i, j) += 0.5 * c;
      P(j, i) += 0.5 * c;
    }
  }
};

void require_uniform(const Vector& grid) {
  const auto n = grid.size();
  if (n < 2) throw GridTooCoarse("grid needs at least 2 points");
  const double h = grid(1) - grid(0);
  for (Eigen::Index i = 1; i + 1 < n; ++i)
    if (std::abs(grid(i + 1) - grid(i) - h) > 1e-9 * std::max(1.0, h))
      throw ConfigError("grid spacing is not uniform");
}

} // namespace

ReducedGaussian reduce_to_main(const GaussianState& st) {
  const int n = st.n_coords();
  ReducedGaussian g;
  g.mean_y = st.mean(0);
  g.mean_p = st.mean(n);
  g.var_y = st.cov(0, 0);
  g.var_p = st.cov(n, n);
  g.cov_yp = st.cov(0, n);
  return g;
}

ComplexMatrix rho_red_grid(const ReducedGaussian& g, const Vector& grid,
                           double hbar) {
  if (!(g.var_y > 0.0) || !(g.var_p > 0.0))
    throw NonPhysicalState("variances must be positive");
  const double det2 = g.var_y * g.var_p - g.cov_yp * g.cov_yp;
  if (det2 < hbar * hbar / 4.0 * (1.0 - 1e-9))
    throw NonPhysicalState("moments violate the uncertainty bound");
  const auto n = grid.size();
  ComplexMatrix rho(n, n);
  const double norm = 1.0 / std::sqrt(2.0 * kPi * g.var_y);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double ybar = 0.5 * (grid(i) + grid(j)) - g.mean_y;
      const double xi = grid(i) - grid(j);
      const double re =
          -ybar * ybar / (2.0 * g.var_y) -
          det2 * xi * xi / (2.0 * hbar * hbar * g.var_y);
      const double im =
          (g.mean_p + g.cov_yp / g.var_y * ybar) * xi / hbar;
      rho(i, j) = norm * std::exp(Complex(re, im));
    }
  }
  return rho;
}

ReducedKernelDetail kernel_J_coeffs_detail(const Model& m, const Spectrum& sp,
                                           double beta, double t) {
  const int N = m.n_baths();
  if (sp.z.size() != N + 1)
    throw DimensionMismatch("spectrum and model dimensions differ");
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  const double hbar = m.hbar;

  const Blocks bl = blocks_at(sp, t); // CausticError at focal times
  const MatFun mf = matfun_at(sp, t);

  // Thermal kernel weights of each bath mode; w is the off-branch coupling,
  // wch the same-branch coefficient. With x = beta hbar omega these are
  // (omega/hbar)/sinh(x) and (omega/hbar) coth(x).
  Vector w(N), wch(N);
  for (int k = 0; k < N; ++k) {
    const double om = m.baths[k].omega;
    const double x = beta * hbar * om;
    wch(k) = om / (hbar * std::tanh(x));
    w(k) = (x > 700.0) ? 0.0 : om / (hbar * std::sinh(x));
  }

  // Joint exponent of K(y,t;Y1,0) rho_B(ybar1, ybar2) K*(y',t;Y2,0) with the
  // bath trace set ybar' = ybar, as a quadratic form over
  // (ybar1, ybar2, ybar, y0, y0', y01, y02). The pure ybar.A.ybar pieces of
  // the two branches cancel, which is why the traced block starts empty.
  const int o1 = 0, o2 = N, oy = 2 * N, u0 = 3 * N;
  QuadForm qf(3 * N + 4);
  const Complex ih = kI / hbar;
  const Complex ih2 = 0.5 * kI / hbar;

  for (int k = 0; k < N; ++k) {
    qf.add(o1 + k, o1 + k, Complex(-0.5 * wch(k)));
    qf.add(o2 + k, o2 + k, Complex(-0.5 * wch(k)));
    qf.add(o1 + k, o2 + k, Complex(w(k)));
  }
  for (int k = 0; k < N; ++k) {
    for (int l = 0; l < N; ++l) {
      qf.add(o1 + k, o1 + l, ih2 * bl.A(k, l));
      qf.add(o2 + k, o2 + l, -ih2 * bl.A(k, l));
      qf.add(oy + l, o1 + k, -ih * bl.D(k, l));
      qf.add(oy + l, o2 + k, ih * bl.D(k, l));
    }
    qf.add(u0 + 2, o1 + k, ih * bl.Bvec(k));
    qf.add(u0 + 0, o1 + k, -ih * bl.Cvec(k));
    qf.add(u0 + 3, o2 + k, -ih * bl.Bvec(k));
    qf.add(u0 + 1, o2 + k, ih * bl.Cvec(k));
    qf.add(u0 + 0, oy + k, ih * bl.Bvec(k));
    qf.add(u0 + 1, oy + k, -ih * bl.Bvec(k));
    qf.add(u0 + 2, oy + k, -ih * bl.Cvec(k));
    qf.add(u0 + 3, oy + k, ih * bl.Cvec(k));
  }
  qf.add(u0 + 0, u0 + 0, ih2 * bl.a);
  qf.add(u0 + 1, u0 + 1, -ih2 * bl.a);
  qf.add(u0 + 2, u0 + 2, ih2 * bl.a);
  qf.add(u0 + 3, u0 + 3, -ih2 * bl.a);
  qf.add(u0 + 0, u0 + 2, -ih * bl.b);
  qf.add(u0 + 1, u0 + 3, ih * bl.b);

  ComplexMatrix Q = -2.0 * qf.P;
  Complex log_pref = 0.0;
  if (N > 0) {
    // Forward bath coordinates, then backward, then the traced ones. The
    // traced block has no convergent quadratic part until the first two
    // integrals have been taken, so the order matters.
    for (int step = 0; step < 3; ++step) {
      MarginalizeResult r = gaussian_marginalize(Q, N);
      Q = r.Q;
      log_pref += r.log_prefactor;
    }
  }
  // per-mode normalizer of the thermal state, sqrt(omega tanh(x/2)/(pi hbar));
  // tanh saturates at large x where sinh alone would overflow
  for (int k = 0; k < N; ++k) {
    const double x = beta * hbar * m.baths[k].omega;
    log_pref += 0.5 * std::log(m.baths[k].omega * std::tanh(0.5 * x) /
                               (kPi * hbar));
  }
  log_pref += -std::log(std::abs(mf.detF)) -
              (N + 1) * std::log(2.0 * kPi * hbar);

  // Rotate (y0, y0', y01, y02) = T (X, xi, X0, xi0).
  Matrix T(4, 4);
  T << 1, 0.5, 0, 0,
       1, -0.5, 0, 0,
       0, 0, 1, 0.5,
       0, 0, 1, -0.5;
  const ComplexMatrix Qw =
      T.cast<Complex>().transpose() * Q * T.cast<Complex>();

  ReducedKernelDetail out;
  out.kernel.b1 = (kI * Qw(0, 1)).real();
  out.kernel.b2 = (kI * Qw(1, 2)).real();
  out.kernel.b3 = (-kI * Qw(0, 3)).real();
  out.kernel.b4 = (-kI * Qw(2, 3)).real();
  out.kernel.a11 = 0.5 * Qw(1, 1).real();
  out.kernel.a12 = Qw(1, 3).real();
  out.kernel.a22 = 0.5 * Qw(3, 3).real();
  out.log_prefactor = log_pref;

  double res = 0.0;
  res = std::max(res, std::abs(Qw(0, 0)));
  res = std::max(res, std::abs(Qw(0, 2)));
  res = std::max(res, std::abs(Qw(2, 2)));
  res = std::max(res, std::abs(Qw(0, 1).real()));
  res = std::max(res, std::abs(Qw(1, 2).real()));
  res = std::max(res, std::abs(Qw(0, 3).real()));
  res = std::max(res, std::abs(Qw(2, 3).real()));
  res = std::max(res, 0.5 * std::abs(Qw(1, 1).imag()));
  res = std::max(res, std::abs(Qw(1, 3).imag()));
  res = std::max(res, 0.5 * std::abs(Qw(3, 3).imag()));
  out.structure_residual = res;
  return out;
}

ReducedKernel kernel_J_coeffs(const Model& m, const Spectrum& sp, double beta,
                              double t) {
  return kernel_J_coeffs_detail(m, sp, beta, t).kernel;
}

ComplexMatrix evolve_rho_via_kernel(const ReducedKernel& k,
                                    const ComplexMatrix& rho0,
                                    const Vector& grid) {
  const auto n = grid.size();
  if (n < 200)
    throw GridTooCoarse("kernel evolution needs >= 200 grid points");
  if (rho0.rows() != n || rho0.cols() != n)
    throw DimensionMismatch("initial density matrix does not match grid");
  require_uniform(grid);
  const double h = grid(1) - grid(0);
  const Vector wq = uniform_weights(static_cast<int>(n), h);

  // Split the kernel exponent into input-only, output-only and bilinear
  // parts: the bilinear piece is y01 * alpha + y02 * beta with
  // alpha = p y0 + q y0', beta = r y0 + s y0'.
  const Complex p(-k.a12, 0.5 * (k.b2 - k.b3));
  const Complex q(k.a12, -0.5 * (k.b2 + k.b3));
  const Complex r(k.a12, 0.5 * (k.b2 + k.b3));
  const Complex s(-k.a12, 0.5 * (k.b3 - k.b2));

  ComplexMatrix M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double X0 = 0.5 * (grid(i) + grid(j));
      const double xi0 = grid(i) - grid(j);
      const Complex expo(-k.a22 * xi0 * xi0, -k.b4 * X0 * xi0);
      M(i, j) = wq(i) * wq(j) * rho0(i, j) * std::exp(expo);
    }
  }

  // exp(c * y_k * y_i) tables; the bilinear factors split as
  // exp(alpha y01) = Ep(k, i) * exp(q y0' y_i), so the y01 and y02 sums
  // reduce to one matrix product per output column.
  auto table = [&](Complex c) {
    ComplexMatrix E(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        E(a, b) = std::exp(c * grid(a) * grid(b));
    return E;
  };
  const ComplexMatrix Ep = table(p);
  const ComplexMatrix Er = table(r);
  const ComplexMatrix Eq = table(q);
  const ComplexMatrix Es = table(s);

  ComplexMatrix out(n, n);
  const double norm = k.b3 / (2.0 * kPi);
  ComplexMatrix Ml(n, n), T(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    Ml.noalias() = Eq.col(l).asDiagonal() * M * Es.col(l).asDiagonal();
    T.noalias() = Ep * Ml;
    const ComplexVector sums = (T.array() * Er.array()).rowwise().sum();
    for (Eigen::Index kk = 0; kk < n; ++kk) {
      const double X = 0.5 * (grid(kk) + grid(l));
      const double xi = grid(kk) - grid(l);
      const Complex outer(-k.a11 * xi * xi, k.b1 * X * xi);
      out(kk, l) = norm * std::exp(outer) * sums(kk);
    }
  }
  return out;
}

ReducedGaussian fit_gaussian(const Vector& grid, const ComplexMatrix& rho,
                             double hbar) {
  const auto n = grid.size();
  if (rho.rows() != n || rho.cols() != n)
    throw DimensionMismatch("density matrix does not match grid");
  require_uniform(grid);

  double peak = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      peak = std::max(peak, std::abs(rho(i, j)));
  if (!(peak > 0.0)) throw NonPhysicalState("density matrix is zero");

  // Magnitude fit: ln|rho| = c0 + c1 ybar + c2 ybar^2 + c3 xi^2 over all
  // points of visible weight.
  std::vector<Eigen::Index> is, js;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(rho(i, j)) > 1e-7 * peak) {
        is.push_back(i);
        js.push_back(j);
      }
  const auto m = static_cast<Eigen::Index>(is.size());
  if (m < 12) throw GridTooCoarse("too few significant samples to fit");
  Matrix A(m, 4);
  Vector rhs(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const double ybar = 0.5 * (grid(is[r]) + grid(js[r]));
    const double xi = grid(is[r]) - grid(js[r]);
    A(r, 0) = 1.0;
    A(r, 1) = ybar;
    A(r, 2) = ybar * ybar;
    A(r, 3) = xi * xi;
    rhs(r) = std::log(std::abs(rho(is[r], js[r])));
  }
  const Vector c = A.colPivHouseholderQr().solve(rhs);
  if (!(c(2) < 0.0) || !(c(3) < 0.0))
    throw NonPhysicalState("sampled state is not a normalizable Gaussian");
  ReducedGaussian g;
  g.var_y = -0.5 / c(2);
  g.mean_y = c(1) * g.var_y;

  // Phase fit on near-diagonal samples, where the phase cannot wrap:
  // arg rho = d1 xi + d2 ybar xi.
  std::vector<double> xs, ys, ph;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int d = -2; d <= 2; ++d) {
      const Eigen::Index j = i + d;
      if (d == 0 || j < 0 || j >= n) continue;
      if (std::abs(rho(i, j)) < 1e-3 * peak) continue;
      xs.push_back(grid(i) - grid(j));
      ys.push_back(0.5 * (grid(i) + grid(j)));
      ph.push_back(std::arg(rho(i, j)));
    }
  }
  const auto mp = static_cast<Eigen::Index>(xs.size());
  if (mp < 4) throw GridTooCoarse("too few samples for the phase fit");
  Matrix Ap(mp, 2);
  Vector bp(mp);
  for (Eigen::Index r = 0; r < mp; ++r) {
    Ap(r, 0) = xs[static_cast<std::size_t>(r)];
    Ap(r, 1) = ys[static_cast<std::size_t>(r)] * xs[static_cast<std::size_t>(r)];
    bp(r) = ph[static_cast<std::size_t>(r)];
  }
  const Vector d = Ap.colPivHouseholderQr().solve(bp);
  g.cov_yp = d(1) * hbar * g.var_y;
  g.mean_p = d(0) * hbar + g.cov_yp * g.mean_y / g.var_y;

  const double det2 = -2.0 * hbar * hbar * g.var_y * c(3);
  g.var_p = (det2 + g.cov_yp * g.cov_yp) / g.var_y;
  return g;
}

} // namespace oscbath
