#include "oscbath/propagator.hpp"

#include <cmath>
#include <string>

#include "oscbath/errors.hpp"
#include "oscbath/matfun.hpp"
#include "oscbath/quadrature.hpp"

namespace oscbath {

namespace {

// Index of t on the force grid; the time must land on a sample.
int grid_index(const ForceProfile& force, double t) {
  if (force.n_samples() < 3)
    throw GridTooCoarse("force grid needs at least 3 samples");
  const double j = t / force.step;
  const int ji = static_cast<int>(std::lround(j));
  if (std::abs(j - ji) > 1e-9 * std::max(1.0, std::abs(j)) || ji < 0 ||
      ji >= force.n_samples())
    throw ConfigError("time " + std::to_string(t) +
                      " does not land on the force sample grid");
  return ji;
}

} // namespace

double ForceProfile::value(int mu, double tau) const {
  if (mu < 0 || mu >= n_coords())
    throw DimensionMismatch("force coordinate out of range");
  if (tau <= 0.0) return samples(mu, 0);
  if (tau >= duration()) return samples(mu, n_samples() - 1);
  const double j = tau / step;
  const int j0 = static_cast<int>(j);
  const double w = j - j0;
  return (1.0 - w) * samples(mu, j0) + w * samples(mu, j0 + 1);
}

ForceProfile ForceProfile::from_function(
    const std::function<Vector(double)>& f, int n_coords, double t_end,
    int n_samples) {
  if (n_samples < 2) throw GridTooCoarse("force profile needs >= 2 samples");
  if (!(t_end > 0.0)) throw ConfigError("force duration must be positive");
  ForceProfile fp;
  fp.step = t_end / (n_samples - 1);
  fp.samples = Matrix(n_coords, n_samples);
  for (int j = 0; j < n_samples; ++j) {
    Vector v = f(fp.step * j);
    if (v.size() != n_coords)
      throw DimensionMismatch("force function dimension mismatch");
    fp.samples.col(j) = v;
  }
  return fp;
}

ForceProfile ForceProfile::main_only(const std::function<double(double)>& f,
                                     int n_coords, double t_end,
                                     int n_samples) {
  return from_function(
      [&](double s) {
        Vector v = Vector::Zero(n_coords);
        v(0) = f(s);
        return v;
      },
      n_coords, t_end, n_samples);
}

PropagatorForm propagator_form(const Spectrum& sp, double t, double hbar) {
  const auto n = sp.z.size();
  PropagatorForm form;
  form.t = t;
  form.hbar = hbar;
  const double ta = std::abs(t);
  Complex pref = 1.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double s = std::sin(z * ta);
    if (std::abs(s) < kCausticEps)
      throw CausticError(t, static_cast<int>(a),
                         "propagator at a focal time t = " +
                             std::to_string(t));
    const double m = std::floor(z * ta / kPi);
    pref *= std::sqrt(z / (2.0 * kPi * hbar * std::abs(s))) *
            std::polar(1.0, -(kPi / 4.0 + m * kPi / 2.0));
  }
  form.prefactor = (t >= 0.0) ? pref : std::conj(pref);

  Vector cot(n), inv(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double s = std::sin(z * t);
    cot(a) = z * std::cos(z * t) / s;
    inv(a) = z / s;
  }
  form.Myy = sp.X * cot.asDiagonal() * sp.X.transpose();
  form.Mpp = form.Myy;
  form.Mcross = -2.0 * (sp.X * inv.asDiagonal() * sp.X.transpose());
  form.linear_y = ComplexVector::Zero(n);
  form.linear_yprime = ComplexVector::Zero(n);
  form.phase0 = 0.0;
  return form;
}

Complex evaluate_K(const PropagatorForm& form, const Vector& y,
                   const Vector& yprime) {
  const auto n = form.Myy.rows();
  if (y.size() != n || yprime.size() != n)
    throw DimensionMismatch("propagator endpoint dimensions differ");
  const double quad = y.dot(form.Myy * y) + yprime.dot(form.Mpp * yprime) +
                      yprime.dot(form.Mcross * y);
  Complex expo = Complex(0.0, quad / (2.0 * form.hbar));
  expo += (form.linear_y.transpose() * y.cast<Complex>())(0, 0);
  expo += (form.linear_yprime.transpose() * yprime.cast<Complex>())(0, 0);
  expo += form.phase0;
  return form.prefactor * std::exp(expo);
}

DriveDisplacements drive_displacements(const Spectrum& sp,
                                       const ForceProfile& force, double t) {
  const auto n = sp.z.size();
  if (force.n_coords() != n)
    throw DimensionMismatch("force and model dimensions differ");
  const int jt = grid_index(force, t);
  const Vector w = uniform_weights(jt + 1, force.step);

  // Project the force on normal modes once; the kernels are then diagonal.
  Matrix phi = sp.X.transpose() * force.samples.leftCols(jt + 1);
  Vector Rm = Vector::Zero(n), Cm = Vector::Zero(n), Dm = Vector::Zero(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    for (int j = 0; j <= jt; ++j) {
      const double tj = force.step * j;
      Rm(a) += w(j) * std::sin(z * (t - tj)) / z * phi(a, j);
      Cm(a) += w(j) * std::sin(z * tj) / z * phi(a, j);
      Dm(a) += w(j) * std::cos(z * (t - tj)) * phi(a, j);
    }
  }
  DriveDisplacements d;
  d.R = sp.X * Rm;
  d.Rcheck = sp.X * Cm;
  d.Rdot = sp.X * Dm;
  return d;
}

double zeta(const Spectrum& sp, const ForceProfile& force, double t,
            double hbar) {
  const auto n = sp.z.size();
  if (force.n_coords() != n)
    throw DimensionMismatch("force and model dimensions differ");
  const int jt = grid_index(force, t);
  if (jt < 1) return 0.0;
  const Vector w_outer = uniform_weights(jt + 1, force.step);
  const Matrix phi = sp.X.transpose() * force.samples.leftCols(jt + 1);

  double total = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    const double z = sp.z(a);
    const double st = std::sin(z * t);
    if (std::abs(st) < kCausticEps)
      throw CausticError(t, static_cast<int>(a),
                         "drive phase at a focal time t = " +
                             std::to_string(t));
    double outer = 0.0;
    for (int j = 1; j <= jt; ++j) {
      const Vector w_inner = uniform_weights(j + 1, force.step);
      double inner = 0.0;
      for (int i = 0; i <= j; ++i)
        inner += w_inner(i) * std::sin(z * force.step * i) * phi(a, i);
      const double s = force.step * j;
      outer += w_outer(j) * phi(a, j) * std::sin(z * (t - s)) * inner;
    }
    total += outer / (z * st);
  }
  return total / hbar;
}

PropagatorForm propagator_form_forced(const Spectrum& sp,
                                      const ForceProfile& force, double t,
                                      double hbar) {
  PropagatorForm form = propagator_form(sp, t, hbar);
  const DriveDisplacements d = drive_displacements(sp, force, t);
  const Matrix Finv = f_inverse(sp, t);
  const Complex mi_over_h(0.0, -1.0 / hbar);
  form.linear_yprime = mi_over_h * (Finv * d.R).cast<Complex>();
  form.linear_y = mi_over_h * (Finv * d.Rcheck).cast<Complex>();
  form.phase0 = Complex(0.0, -zeta(sp, force, t, hbar));
  return form;
}

Complex evaluate_K_forced(const Spectrum& sp, const ForceProfile& force,
                          double t, const Vector& y, const Vector& yprime,
                          double hbar) {
  return evaluate_K(propagator_form_forced(sp, force, t, hbar), y, yprime);
}

} // namespace oscbath
