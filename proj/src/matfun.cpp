#include "oscbath/matfun.hpp"

#include <cmath>
#include <string>

#include "oscbath/errors.hpp"

namespace oscbath {

namespace {

Matrix assemble(const Spectrum& sp, const Vector& diag) {
  return sp.X * diag.asDiagonal() * sp.X.transpose();
}

} // namespace

MatFun matfun_at(const Spectrum& sp, double t, double eps) {
  const auto n = sp.z.size();
  Vector fs(n), cs(n), ms(n);
  MatFun mf;
  mf.t = t;
  mf.detF = 1.0;
  mf.caustic_flags.assign(static_cast<std::size_t>(n), false);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double s = std::sin(z * t);
    fs(a) = s / z;
    cs(a) = std::cos(z * t);
    ms(a) = -z * s;
    mf.detF *= s / z;
    if (std::abs(s) < eps) mf.caustic_flags[static_cast<std::size_t>(a)] = true;
  }
  mf.F = assemble(sp, fs);
  mf.Fdot = assemble(sp, cs);
  mf.Fddot = assemble(sp, ms);
  return mf;
}

Matrix f_inverse(const Spectrum& sp, double t, double eps) {
  const auto n = sp.z.size();
  Vector inv(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double s = std::sin(sp.z(a) * t);
    if (std::abs(s) < eps)
      throw CausticError(t, static_cast<int>(a),
                         "F(t) singular at t = " + std::to_string(t) +
                             " (mode " + std::to_string(a) + ")");
    inv(a) = sp.z(a) / s;
  }
  return assemble(sp, inv);
}

Blocks blocks_at(const Spectrum& sp, double t, double eps) {
  const auto n = sp.z.size();
  Vector cot(n), inv(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double s = std::sin(z * t);
    if (std::abs(s) < eps)
      throw CausticError(t, static_cast<int>(a),
                         "block decomposition at a focal time t = " +
                             std::to_string(t));
    cot(a) = z * std::cos(z * t) / s;
    inv(a) = z / s;
  }
  const Matrix M = assemble(sp, cot);   // F^-1 Fdot
  const Matrix Fi = assemble(sp, inv);  // F^-1
  Blocks bl;
  bl.a = M(0, 0);
  bl.b = Fi(0, 0);
  bl.Bvec = M.col(0).tail(n - 1);
  bl.Cvec = Fi.col(0).tail(n - 1);
  bl.A = M.bottomRightCorner(n - 1, n - 1);
  bl.D = Fi.bottomRightCorner(n - 1, n - 1);
  return bl;
}

ImaginaryTimeBlocks imaginary_time_blocks(const Spectrum& sp, double beta,
                                          double hbar) {
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  const auto n = sp.z.size();
  // At t = -i hbar beta: sin(z t) = -i sinh(x), cos(z t) = cosh(x) with
  // x = z hbar beta. Hence F = -i Fh, Fdot = Fdoth, F^-1 Fdot = i Mh with
  // Mh = X diag(z coth x) X^T, and F^-1 = i X diag(z/sinh x) X^T. The block
  // fields collect the real matrices Mh and Fh^-1; overall factors of i are
  // restored by the equilibrium-layer formulas.
  Vector fh(n), ch(n), zc(n), zs(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double x = z * hbar * beta;
    fh(a) = std::sinh(x) / z;
    ch(a) = std::cosh(x);
    if (x > 700.0) {
      // sinh/cosh are near the edge of double range here; the combinations
      // the equilibrium layer needs saturate long before, so switch to the
      // asymptotic values rather than dividing huge numbers.
      zc(a) = z;
      zs(a) = 0.0;
    } else {
      zc(a) = z / std::tanh(x);
      zs(a) = z / std::sinh(x);
    }
  }
  ImaginaryTimeBlocks ib;
  ib.Fh = assemble(sp, fh);
  ib.Fdoth = assemble(sp, ch);
  const Matrix Mh = assemble(sp, zc);
  const Matrix Fih = assemble(sp, zs);
  ib.ah = Mh(0, 0);
  ib.bh = Fih(0, 0);
  ib.Bh = Mh.col(0).tail(n - 1);
  ib.Ch = Fih.col(0).tail(n - 1);
  ib.Ah = Mh.bottomRightCorner(n - 1, n - 1);
  ib.Dh = Fih.bottomRightCorner(n - 1, n - 1);
  return ib;
}

} // namespace oscbath
