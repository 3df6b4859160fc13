#include <cmath>

#include "doctest.h"
#include "oscbath/errors.hpp"
#include "oscbath/matfun.hpp"
#include "oscbath/model.hpp"
#include "oscbath/quadrature.hpp"

namespace {

using namespace oscbath;

Spectrum coupled_spectrum() {
  const Model m =
      validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
  return spectrum(build_B(m));
}

} // namespace

TEST_SUITE("matfun") {

TEST_CASE("short-time expansion of F and Fdot") {
  const Model m =
      validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
  const Matrix B = build_B(m);
  const Spectrum sp = spectrum(B);
  const double t = 1e-3;
  const MatFun mf = matfun_at(sp, t);
  const Matrix F_series =
      t * Matrix::Identity(3, 3) - (t * t * t / 6.0) * B;
  const Matrix Fdot_series = Matrix::Identity(3, 3) - 0.5 * t * t * B;
  CHECK((mf.F - F_series).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((mf.Fdot - Fdot_series).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("trig identity holds away from caustics") {
  const Model m =
      validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
  const Matrix B = build_B(m);
  const Spectrum sp = spectrum(B);
  for (const double t : {0.3, 1.7, 4.4}) {
    const MatFun mf = matfun_at(sp, t);
    const Matrix id = mf.Fdot * mf.Fdot + B * mf.F * mf.F;
    CHECK((id - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("determinant factor is the product of mode sines") {
  const Spectrum sp = coupled_spectrum();
  const double t = 0.9;
  const MatFun mf = matfun_at(sp, t);
  double prod = 1.0;
  for (int a = 0; a < sp.z.size(); ++a)
    prod *= std::sin(sp.z(a) * t) / sp.z(a);
  CHECK(mf.detF == doctest::Approx(prod).epsilon(1e-13));
  CHECK(mf.detF == doctest::Approx(mf.F.determinant()).epsilon(1e-12));
}

TEST_CASE("focal times flag the offending mode and block the inverses") {
  const Model m0 = validate_model(1.3, {});
  const Spectrum sp = spectrum(build_B(m0));
  const double t_focal = kPi / 1.3;
  const MatFun mf = matfun_at(sp, t_focal);
  REQUIRE(mf.caustic_flags.size() == 1);
  CHECK(mf.caustic_flags[0]);
  CHECK_FALSE(matfun_at(sp, 0.5 * t_focal).caustic_flags[0]);
  CHECK_THROWS_AS(blocks_at(sp, t_focal), CausticError);
  CHECK_THROWS_AS(blocks_at(sp, 0.0), CausticError);
  CHECK_THROWS_AS(f_inverse(sp, t_focal), CausticError);
  try {
    blocks_at(sp, t_focal);
    CHECK(false);
  } catch (const CausticError& e) {
    CHECK(e.mode == 0);
    CHECK(e.t == doctest::Approx(t_focal));
  }
}

TEST_CASE("column blocks solve the same linear system as the full inverse") {
  const Spectrum sp = coupled_spectrum();
  const double t = 1.1;
  const MatFun mf = matfun_at(sp, t);
  const Blocks bl = blocks_at(sp, t);
  // a, Bvec, A assemble F^-1 Fdot; b, Cvec, D assemble F^-1
  const Matrix G = mf.F.fullPivLu().solve(mf.Fdot);
  const Matrix H = mf.F.fullPivLu().solve(Matrix::Identity(3, 3));
  CHECK(bl.a == doctest::Approx(G(0, 0)).epsilon(1e-11));
  CHECK((bl.Bvec - G.col(0).tail(2)).cwiseAbs().maxCoeff() < 1e-11);
  CHECK((bl.A - G.bottomRightCorner(2, 2)).cwiseAbs().maxCoeff() < 1e-11);
  CHECK(bl.b == doctest::Approx(H(0, 0)).epsilon(1e-11));
  CHECK((bl.Cvec - H.col(0).tail(2)).cwiseAbs().maxCoeff() < 1e-11);
  CHECK((bl.D - H.bottomRightCorner(2, 2)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("imaginary-time blocks satisfy the hyperbolic identity") {
  const Model m =
      validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
  const Matrix B = build_B(m);
  const Spectrum sp = spectrum(B);
  const ImaginaryTimeBlocks ib = imaginary_time_blocks(sp, 0.8);
  const Matrix id = ib.Fdoth * ib.Fdoth - B * ib.Fh * ib.Fh;
  CHECK((id - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-11);
  CHECK(ib.ah > ib.bh);
  CHECK(ib.bh > 0.0);
}

TEST_CASE("imaginary-time blocks stay finite at huge beta") {
  const Spectrum sp = coupled_spectrum();
  const ImaginaryTimeBlocks ib = imaginary_time_blocks(sp, 1e6);
  CHECK(std::isfinite(ib.ah));
  CHECK(ib.bh == 0.0);
  // coth -> 1, so the a-type scalar tends to the plain mode sum
  double limit = 0.0;
  for (int a = 0; a < sp.z.size(); ++a)
    limit += sp.X(0, a) * sp.X(0, a) * sp.z(a);
  CHECK(ib.ah == doctest::Approx(limit).epsilon(1e-12));
}

TEST_CASE("uniform weights integrate low-order polynomials exactly") {
  auto integrate = [](int n, double h, auto f) {
    const Vector w = uniform_weights(n, h);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += w(i) * f(i * h);
    return acc;
  };
  const double h = 0.1;
  // odd sample count: plain Simpson, exact on cubics
  CHECK(integrate(11, h, [](double x) { return x * x * x; }) ==
        doctest::Approx(std::pow(1.0, 4) / 4.0).epsilon(1e-14));
  // even sample count: Simpson closed with a 3/8 tail, still exact on cubics
  CHECK(integrate(12, h, [](double x) { return x * x * x; }) ==
        doctest::Approx(std::pow(1.1, 4) / 4.0).epsilon(1e-14));
  // two samples fall back to the trapezoid rule
  CHECK(integrate(2, h, [](double x) { return 3.0 + 2.0 * x; }) ==
        doctest::Approx(0.05 * (3.0 + 3.2)).epsilon(1e-14));
  CHECK(uniform_weights(1, h).cwiseAbs().maxCoeff() == 0.0);
}

} // TEST_SUITE
