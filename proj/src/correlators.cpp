#include "oscbath/correlators.hpp"

#include <cmath>
#include <string>

#include "oscbath/errors.hpp"
#include "oscbath/propagator.hpp"
#include "oscbath/quadrature.hpp"
#include "oscbath/types.hpp"

namespace oscbath {

namespace {

void check_insertion(const Spectrum& sp, const Endpoint& ep, double t1,
                     int mu) {
  const auto n = sp.z.size();
  if (ep.y.size() != n || ep.yprime.size() != n)
    throw DimensionMismatch("endpoint vectors do not match the spectrum");
  if (mu < 0 || mu >= n)
    throw ConfigError("coordinate index out of range: " + std::to_string(mu));
  if (!(t1 > 0.0 && t1 < ep.t))
    throw TimeOutOfRange("insertion time must lie strictly inside (0, t)");
}

void check_caustics(const Spectrum& sp, double t) {
  for (Eigen::Index a = 0; a < sp.z.size(); ++a)
    if (std::abs(std::sin(sp.z(a) * t)) < kCausticEps)
      throw CausticError(t, static_cast<int>(a),
                         "focal time of mode " + std::to_string(a));
}

} // namespace

Complex one_point(const Spectrum& sp, const Endpoint& ep, double t1, int mu) {
  check_insertion(sp, ep, t1, mu);
  check_caustics(sp, ep.t);
  double value = 0.0;
  for (Eigen::Index a = 0; a < sp.z.size(); ++a) {
    const double z = sp.z(a);
    const double st = std::sin(z * ep.t);
    const double wp = ep.yprime.dot(sp.X.col(a)) * std::sin(z * (ep.t - t1));
    const double wy = ep.y.dot(sp.X.col(a)) * std::sin(z * t1);
    value += sp.X(mu, a) * (wp + wy) / st;
  }
  return Complex(value, 0.0);
}

Complex two_point(const Spectrum& sp, const Endpoint& ep, double t1, int mu,
                  double t2, int nu, double hbar) {
  check_insertion(sp, ep, t1, mu);
  check_insertion(sp, ep, t2, nu);
  const Complex g1 = one_point(sp, ep, t1, mu);
  const Complex g2 = one_point(sp, ep, t2, nu);
  const double u = std::min(t1, t2);
  const double s = std::max(t1, t2);
  double ker = 0.0;
  for (Eigen::Index a = 0; a < sp.z.size(); ++a) {
    const double z = sp.z(a);
    ker += sp.X(mu, a) * sp.X(nu, a) * std::sin(z * u) *
           std::sin(z * (ep.t - s)) / (z * std::sin(z * ep.t));
  }
  return g1 * g2 + Complex(0.0, hbar) * ker;
}

Complex n_point_fd(const Spectrum& sp, const CorrelatorRequest& req,
                   double hbar) {
  const auto n_ins = static_cast<int>(req.times.size());
  if (static_cast<int>(req.indices.size()) != n_ins)
    throw DimensionMismatch("times and indices must have equal length");
  if (n_ins == 0) return Complex(1.0, 0.0);
  if (n_ins > 6) throw ConfigError("more than 6 insertions is not supported");
  for (int i = 0; i < n_ins; ++i)
    check_insertion(sp, req.endpoint, req.times[i], req.indices[i]);
  if (!(req.fd_step > 0.0) || !(req.grid_step > 0.0))
    throw ConfigError("fd_step and grid_step must be positive");

  const double t = req.endpoint.t;
  const int n_steps =
      std::max<int>(2, static_cast<int>(std::lround(t / req.grid_step)));
  const double h = t / n_steps;
  const int n_samples = n_steps + 1;

  std::vector<int> nodes(n_ins);
  for (int i = 0; i < n_ins; ++i) {
    nodes[i] = static_cast<int>(std::lround(req.times[i] / h));
    if (nodes[i] < 1 || nodes[i] > n_samples - 2)
      throw TimeOutOfRange("spike does not fit inside the force grid");
  }
  for (int i = 0; i < n_ins; ++i)
    for (int j = i + 1; j < n_ins; ++j)
      if (std::abs(nodes[i] - nodes[j]) < 2)
        throw StepCollision("spike times closer than two grid steps");

  const auto n_coords = static_cast<int>(sp.z.size());
  const Complex K0 =
      evaluate_K(propagator_form(sp, t, hbar), req.endpoint.y,
                 req.endpoint.yprime);

  // One-node spikes, normalized so the force quadrature sees unit area:
  // the drive integrals weight sample i by wq(i), not by h.
  const Vector wq = uniform_weights(n_samples, h);

  // Central n-th difference of K^(f)/K(0) over spike amplitudes.
  auto difference = [&](double eps) {
    Complex acc(0.0, 0.0);
    for (int mask = 0; mask < (1 << n_ins); ++mask) {
      ForceProfile f;
      f.samples = Matrix::Zero(n_coords, n_samples);
      f.step = h;
      double parity = 1.0;
      for (int i = 0; i < n_ins; ++i) {
        const double s = ((mask >> i) & 1) ? 1.0 : -1.0;
        parity *= s;
        f.samples(req.indices[i], nodes[i]) += s * eps / wq(nodes[i]);
      }
      acc += parity * evaluate_K_forced(sp, f, t, req.endpoint.y,
                                        req.endpoint.yprime, hbar);
    }
    return acc / std::pow(2.0 * eps, n_ins) / K0;
  };

  const Complex coarse = difference(req.fd_step);
  const Complex fine = difference(0.5 * req.fd_step);
  const Complex extrapolated = (4.0 * fine - coarse) / 3.0;
  return std::pow(Complex(0.0, hbar), n_ins) * extrapolated;
}

} // namespace oscbath
