#include <cmath>
#include <complex>

#include "doctest.h"
#include "oscbath/errors.hpp"
#include "oscbath/gaussian.hpp"
#include "oscbath/matfun.hpp"
#include "oscbath/model.hpp"
#include "oscbath/reduced.hpp"

namespace {

using namespace oscbath;

Vector linspace(double lo, double hi, int n) {
  Vector g(n);
  for (int i = 0; i < n; ++i) g(i) = lo + (hi - lo) * i / (n - 1);
  return g;
}

ReducedGaussian sample_moments() {
  ReducedGaussian g;
  g.mean_y = 0.35;
  g.mean_p = -0.2;
  g.var_y = 0.7;
  g.var_p = 0.5;
  g.cov_yp = 0.12;
  return g;
}

} // namespace

TEST_SUITE("reduced") {

TEST_CASE("sampled density matrix is hermitian with unit trace") {
  const Vector grid = linspace(-8.0, 8.0, 321);
  const ComplexMatrix rho = rho_red_grid(sample_moments(), grid);
  const double h = grid(1) - grid(0);
  // Simpson over the diagonal
  Complex tr(0.0, 0.0);
  for (int i = 0; i < grid.size(); ++i) {
    const double w =
        (i == 0 || i == grid.size() - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    tr += w * rho(i, i);
  }
  tr *= h / 3.0;
  CHECK(std::abs(tr - 1.0) < 1e-10);
  double herm = 0.0;
  for (int i = 0; i < grid.size(); i += 16)
    for (int j = 0; j < grid.size(); j += 16)
      herm = std::max(herm, std::abs(rho(i, j) - std::conj(rho(j, i))));
  CHECK(herm < 1e-15);
}

TEST_CASE("unphysical moments are rejected") {
  ReducedGaussian sharp = sample_moments();
  sharp.var_p = 0.05; // var_y var_p - cov^2 < 1/4
  const Vector grid = linspace(-4.0, 4.0, 201);
  CHECK_THROWS_AS(rho_red_grid(sharp, grid), NonPhysicalState);
}

TEST_CASE("gaussian fit inverts the grid sampling") {
  const Vector grid = linspace(-8.0, 8.0, 251);
  const ReducedGaussian in = sample_moments();
  const ReducedGaussian out = fit_gaussian(grid, rho_red_grid(in, grid));
  CHECK(out.mean_y == doctest::Approx(in.mean_y).epsilon(1e-10));
  CHECK(out.mean_p == doctest::Approx(in.mean_p).epsilon(1e-10));
  CHECK(out.var_y == doctest::Approx(in.var_y).epsilon(1e-10));
  CHECK(out.var_p == doctest::Approx(in.var_p).epsilon(1e-10));
  CHECK(out.cov_yp == doctest::Approx(in.cov_yp).epsilon(1e-8));
}

TEST_CASE("decoupled kernel reduces to the unitary pair of propagators") {
  const Model m0 = validate_model(1.2, {});
  const Spectrum sp = spectrum(build_B(m0));
  const double t = 0.8, w = 1.2;
  const ReducedKernelDetail detail = kernel_J_coeffs_detail(m0, sp, 3.0, t);
  const ReducedKernel k = detail.kernel;
  const double s = std::sin(w * t), c = std::cos(w * t);
  CHECK(k.b1 == doctest::Approx(w * c / s).epsilon(1e-12));
  CHECK(k.b3 == doctest::Approx(w / s).epsilon(1e-12));
  CHECK(k.b2 == doctest::Approx(-w / s).epsilon(1e-12));
  CHECK(k.b4 == doctest::Approx(-w * c / s).epsilon(1e-12));
  CHECK(std::abs(k.a11) < 1e-12);
  CHECK(std::abs(k.a12) < 1e-12);
  CHECK(std::abs(k.a22) < 1e-12);
  CHECK(detail.structure_residual < 1e-12);
}

TEST_CASE("kernel assembly satisfies its own normalization identity") {
  const Model m =
      validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
  const Spectrum sp = spectrum(build_B(m));
  for (const double t : {0.5, 0.9, 1.6}) {
    const ReducedKernelDetail detail = kernel_J_coeffs_detail(m, sp, 1.0, t);
    const double norm = std::abs(std::exp(detail.log_prefactor));
    const double expect = detail.kernel.b3 / (2.0 * kPi);
    CHECK(norm == doctest::Approx(std::abs(expect)).epsilon(1e-9));
    CHECK(detail.structure_residual < 1e-10 * std::abs(detail.kernel.b3));
    CHECK(detail.kernel.a11 > 0.0);
    CHECK(detail.kernel.a22 > 0.0);
  }
}

TEST_CASE("kernel evolution reproduces the exact moment flow") {
  const Model m = validate_model(1.0, {BathMode{1.7, 0.4}});
  const Spectrum sp = spectrum(build_B(m));
  const double beta = 0.8, t = 1.2;

  SingleModeGaussian init;
  init.mean_y = -0.3;
  init.mean_p = 0.25;
  init.var_y = 0.55;
  init.var_p = 0.6;
  init.cov_yp = -0.08;
  const ReducedGaussian expect =
      reduce_to_main(evolve_state(thermal_bath_state(m, beta, init),
                                  matfun_at(sp, t)));

  const Vector grid = linspace(-8.0, 8.0, 221);
  ReducedGaussian g0;
  g0.mean_y = init.mean_y;
  g0.mean_p = init.mean_p;
  g0.var_y = init.var_y;
  g0.var_p = init.var_p;
  g0.cov_yp = init.cov_yp;
  const ComplexMatrix rho_t = evolve_rho_via_kernel(
      kernel_J_coeffs(m, sp, beta, t), rho_red_grid(g0, grid), grid);
  const ReducedGaussian got = fit_gaussian(grid, rho_t);
  CHECK(got.mean_y == doctest::Approx(expect.mean_y).epsilon(1e-7));
  CHECK(got.mean_p == doctest::Approx(expect.mean_p).epsilon(1e-7));
  CHECK(got.var_y == doctest::Approx(expect.var_y).epsilon(1e-7));
  CHECK(got.var_p == doctest::Approx(expect.var_p).epsilon(1e-7));
  CHECK(got.cov_yp == doctest::Approx(expect.cov_yp).epsilon(1e-5));

  // the evolved matrix keeps unit trace
  const double h = grid(1) - grid(0);
  Complex tr(0.0, 0.0);
  for (int i = 0; i < grid.size(); ++i) {
    const double w =
        (i == 0 || i == grid.size() - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    tr += w * rho_t(i, i);
  }
  tr *= h / 3.0;
  CHECK(std::abs(tr - 1.0) < 1e-6);
}

TEST_CASE("grid requirements are enforced") {
  const Model m = validate_model(1.0, {BathMode{1.7, 0.4}});
  const Spectrum sp = spectrum(build_B(m));
  const ReducedKernel k = kernel_J_coeffs(m, sp, 1.0, 0.9);
  const Vector coarse = linspace(-6.0, 6.0, 199);
  const ComplexMatrix rho = rho_red_grid(sample_moments(), coarse);
  CHECK_THROWS_AS(evolve_rho_via_kernel(k, rho, coarse), GridTooCoarse);

  Vector warped = linspace(-6.0, 6.0, 221);
  warped(100) += 1e-3;
  const ComplexMatrix rho2 =
      rho_red_grid(sample_moments(), linspace(-6.0, 6.0, 221));
  CHECK_THROWS_AS(evolve_rho_via_kernel(k, rho2, warped), ConfigError);
  CHECK_THROWS_AS(fit_gaussian(warped, rho2), ConfigError);
}

} // TEST_SUITE
