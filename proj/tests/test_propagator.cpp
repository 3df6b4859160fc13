#include <cmath>
#include <complex>

#include "doctest.h"
#include "oscbath/errors.hpp"
#include "oscbath/matfun.hpp"
#include "oscbath/model.hpp"
#include "oscbath/oracle.hpp"
#include "oscbath/propagator.hpp"

namespace {

using namespace oscbath;

Spectrum coupled_spectrum() {
  const Model m =
      validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
  return spectrum(build_B(m));
}

} // namespace

TEST_SUITE("propagator") {

TEST_CASE("single mode matches the textbook propagator across focal branches") {
  const Model m0 = validate_model(1.3, {});
  const Spectrum sp = spectrum(build_B(m0));
  Vector y(1), yp(1);
  y << 0.4;
  yp << -0.7;
  // 2.8 is past the first focal time pi/1.3, 5.1 past the second
  for (const double t : {0.7, 2.8, 5.1}) {
    const Complex lib = evaluate_K(propagator_form(sp, t), y, yp);
    const Complex ref = oracle::mehler_1d(1.3, 1.0, t, y(0), yp(0));
    CHECK(std::abs(lib - ref) <= 1e-13 * std::abs(ref));
  }
}

TEST_CASE("propagator is symmetric under swapping the endpoints") {
  const Spectrum sp = coupled_spectrum();
  const PropagatorForm form = propagator_form(sp, 1.1);
  Vector y(3), yp(3);
  y << 0.3, -0.4, 0.2;
  yp << -0.1, 0.25, 0.6;
  const Complex a = evaluate_K(form, y, yp);
  const Complex b = evaluate_K(form, yp, y);
  CHECK(std::abs(a - b) <= 1e-15 * std::abs(a));
}

TEST_CASE("hbar rescaling only rescales the exponent and prefactor") {
  const Spectrum sp = coupled_spectrum();
  const PropagatorForm f1 = propagator_form(sp, 0.9, 1.0);
  const PropagatorForm f2 = propagator_form(sp, 0.9, 2.0);
  // the quadratic blocks carry no hbar; the prefactor scales as hbar^-(n/2)
  CHECK((f1.Myy - f2.Myy).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(f2.prefactor / f1.prefactor - std::pow(2.0, -1.5)) < 1e-14);
}

TEST_CASE("focal times are rejected") {
  const Model m0 = validate_model(1.3, {});
  const Spectrum sp = spectrum(build_B(m0));
  CHECK_THROWS_AS(propagator_form(sp, kPi / 1.3), CausticError);
  CHECK_THROWS_AS(propagator_form(sp, 0.0), CausticError);
}

TEST_CASE("force profile samples, interpolates, and restricts to the main row") {
  auto f = [](double tau) {
    Vector v(2);
    v << std::sin(tau), std::cos(tau);
    return v;
  };
  const ForceProfile p = ForceProfile::from_function(f, 2, 1.0, 101);
  CHECK(p.n_coords() == 2);
  CHECK(p.n_samples() == 101);
  CHECK(p.duration() == doctest::Approx(1.0));
  CHECK(p.value(0, 0.37) == doctest::Approx(std::sin(0.37)).epsilon(1e-4));
  CHECK(p.value(1, 0.0) == doctest::Approx(1.0));
  const ForceProfile q = ForceProfile::main_only(
      [](double tau) { return 2.0 * tau; }, 3, 1.0, 11);
  CHECK(q.value(0, 0.5) == doctest::Approx(1.0));
  CHECK(q.value(1, 0.5) == 0.0);
  CHECK(q.value(2, 0.9) == 0.0);
}

TEST_CASE("drive displacements match direct quadrature of the convolution") {
  const Spectrum sp = coupled_spectrum();
  const double t = 1.3;
  auto f = [](double tau) {
    Vector v = Vector::Zero(3);
    v(0) = 0.8 * std::sin(1.9 * tau + 0.4);
    v(1) = 0.3 * std::cos(0.7 * tau);
    return v;
  };
  const ForceProfile profile = ForceProfile::from_function(f, 3, t, 2001);
  const DriveDisplacements dd = drive_displacements(sp, profile, t);
  for (int mu = 0; mu < 3; ++mu) {
    const Complex R = oracle::quad_1d(
        [&](double s) {
          return Complex((matfun_at(sp, t - s).F * f(s))(mu), 0.0);
        },
        0.0, t, 801);
    const Complex Rdot = oracle::quad_1d(
        [&](double s) {
          return Complex((matfun_at(sp, t - s).Fdot * f(s))(mu), 0.0);
        },
        0.0, t, 801);
    const Complex Rcheck = oracle::quad_1d(
        [&](double s) {
          return Complex((matfun_at(sp, s).F * f(s))(mu), 0.0);
        },
        0.0, t, 801);
    CHECK(dd.R(mu) == doctest::Approx(R.real()).epsilon(1e-9));
    CHECK(dd.Rdot(mu) == doctest::Approx(Rdot.real()).epsilon(1e-9));
    CHECK(dd.Rcheck(mu) == doctest::Approx(Rcheck.real()).epsilon(1e-9));
  }
}

TEST_CASE("forced propagator reduces to the free one at zero force") {
  const Spectrum sp = coupled_spectrum();
  const double t = 0.9;
  const ForceProfile zero = ForceProfile::main_only(
      [](double) { return 0.0; }, 3, t, 201);
  Vector y(3), yp(3);
  y << 0.3, -0.4, 0.2;
  yp << -0.1, 0.25, 0.6;
  const Complex forced = evaluate_K_forced(sp, zero, t, y, yp);
  const Complex free = evaluate_K(propagator_form(sp, t), y, yp);
  CHECK(std::abs(forced - free) <= 1e-14 * std::abs(free));
  const PropagatorForm pf = propagator_form_forced(sp, zero, t);
  CHECK(pf.linear_y.cwiseAbs().maxCoeff() == 0.0);
  CHECK(pf.linear_yprime.cwiseAbs().maxCoeff() == 0.0);
  CHECK(pf.phase0 == Complex(0.0, 0.0));
}

TEST_CASE("forced propagator evolves a wave packet like split-step integration") {
  const double omega = 1.3, hbar = 1.0, t = 1.1;
  const Model m0 = validate_model(omega, {});
  const Spectrum sp = spectrum(build_B(m0));
  auto force = [](double tau) { return 0.9 * std::sin(2.1 * tau + 0.3); };
  const ForceProfile profile = ForceProfile::main_only(force, 1, t, 3001);

  // grid ground state, driven through the split-step oracle
  const double y_min = -12.0, y_max = 12.0;
  const int n = 1 << 12;
  const double dy = (y_max - y_min) / n;
  ComplexVector psi0(n);
  for (int i = 0; i < n; ++i) {
    const double y = y_min + i * dy;
    psi0(i) = std::pow(omega / (kPi * hbar), 0.25) *
              std::exp(-0.5 * omega * y * y / hbar);
  }
  const ComplexVector psi_ref =
      oracle::split_step_forced_1d(omega, hbar, force, t, 8000, y_min, y_max,
                                   psi0);

  // same evolution through the driven propagator, by quadrature over y'
  const PropagatorForm form = propagator_form_forced(sp, profile, t);
  double worst = 0.0;
  for (const int idx : {n / 2 - 137, n / 2, n / 2 + 103, n / 2 + 239}) {
    Vector yv(1);
    yv << y_min + idx * dy;
    const Complex via_K = oracle::quad_1d(
        [&](double yprime) {
          Vector ypv(1);
          ypv << yprime;
          return evaluate_K(form, yv, ypv) *
                 std::pow(omega / (kPi * hbar), 0.25) *
                 std::exp(-0.5 * omega * yprime * yprime / hbar);
        },
        -8.0, 8.0, 1601);
    worst = std::max(worst, std::abs(via_K - psi_ref(idx)));
  }
  CHECK(worst < 5e-6);
}

} // TEST_SUITE
