#include <cmath>

#include "doctest.h"
#include "oscbath/errors.hpp"
#include "oscbath/model.hpp"
#include "oscbath/ohmic.hpp"

namespace {

using namespace oscbath;

Model two_bath_model() {
  return validate_model(1.0, {BathMode{1.6, 0.35}, BathMode{2.4, 0.3}});
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("build_B lays out the arrowhead") {
  const Model m = two_bath_model();
  const Matrix B = build_B(m);
  REQUIRE(B.rows() == 3);
  CHECK(B(0, 0) == doctest::Approx(1.0));
  CHECK(B(1, 1) == doctest::Approx(1.6 * 1.6));
  CHECK(B(2, 2) == doctest::Approx(2.4 * 2.4));
  CHECK(B(0, 1) == doctest::Approx(-0.35));
  CHECK(B(1, 0) == doctest::Approx(-0.35));
  CHECK(B(0, 2) == doctest::Approx(-0.3));
  CHECK(B(1, 2) == 0.0);
}

TEST_CASE("validation rejects bad frequencies and unstable couplings") {
  CHECK_THROWS_AS(validate_model(0.0, {}), NonPositiveFrequency);
  CHECK_THROWS_AS(validate_model(-1.0, {}), NonPositiveFrequency);
  CHECK_THROWS_AS(validate_model(1.0, {BathMode{0.0, 0.1}}),
                  NonPositiveFrequency);
  CHECK_THROWS_AS(validate_model(1.0, {BathMode{0.5, 0.6}}), UnstableModel);
  // boundary case: margin exactly zero is still unstable
  CHECK_THROWS_AS(validate_model(1.0, {BathMode{2.0, 2.0}}), UnstableModel);
  CHECK(schur_margin(two_bath_model()) > 0.0);
}

TEST_CASE("spectrum is ascending, orthogonal, sign fixed, and reconstructs B") {
  const Model m = two_bath_model();
  const Matrix B = build_B(m);
  const Spectrum sp = spectrum(B);
  REQUIRE(sp.z.size() == 3);
  CHECK(sp.z(0) > 0.0);
  CHECK(sp.z(0) < sp.z(1));
  CHECK(sp.z(1) < sp.z(2));
  const Matrix gram = sp.X.transpose() * sp.X - Matrix::Identity(3, 3);
  CHECK(gram.cwiseAbs().maxCoeff() < 1e-13);
  for (int a = 0; a < 3; ++a) CHECK(sp.X(0, a) >= 0.0);
  const Matrix recon =
      sp.X * sp.z.array().square().matrix().asDiagonal() * sp.X.transpose();
  CHECK((recon - B).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("characteristic function vanishes at the normal modes") {
  const Model m = two_bath_model();
  const Spectrum sp = spectrum(build_B(m));
  for (int a = 0; a < sp.z.size(); ++a) {
    const double z2 = sp.z(a) * sp.z(a);
    CHECK(std::abs(char_g(m, z2)) < 1e-10);
  }
  CHECK_THROWS_AS(char_g(m, 1.6 * 1.6), PoleInput);
}

TEST_CASE("memory kernel and its Laplace transform agree with the mode sum") {
  const Model m = two_bath_model();
  const double t = 0.85;
  double chi = 0.0;
  for (const BathMode& b : m.baths)
    chi += b.g * b.g * std::sin(b.omega * t) / b.omega;
  CHECK(susceptibility(m, t) == doctest::Approx(chi).epsilon(1e-14));
  CHECK(susceptibility(m, 0.0) == 0.0);
  const double s = 0.7;
  double lap = 0.0;
  for (const BathMode& b : m.baths)
    lap += b.g * b.g / (s * s + b.omega * b.omega);
  CHECK(susceptibility_laplace(m, s) == doctest::Approx(lap).epsilon(1e-14));
}

TEST_CASE("response agrees with the normal-mode partial fractions") {
  const Model m = two_bath_model();
  const Spectrum sp = spectrum(build_B(m));
  for (const double s : {0.4, 1.0, 2.2}) {
    double modes = 0.0;
    for (int a = 0; a < sp.z.size(); ++a)
      modes += sp.X(0, a) * sp.X(0, a) / (s * s + sp.z(a) * sp.z(a));
    CHECK(green_laplace(m, s) == doctest::Approx(modes).epsilon(1e-12));
  }
  const double w = 0.9;
  CHECK(green_frequency(m, w) ==
        doctest::Approx(-1.0 / char_g(m, w * w)).epsilon(1e-14));
  // poles of the frequency response sit at the normal modes
  CHECK_THROWS_AS(green_frequency(m, spectrum(build_B(m)).z(0)), AtPole);
}

TEST_CASE("noise coefficients follow the free bath rotation") {
  const Model m = two_bath_model();
  const double t = 1.2;
  const NoiseCoefficients nc = noise_coefficients(m, t);
  REQUIRE(nc.c.size() == 2);
  CHECK(nc.c(0) == doctest::Approx(0.35 * std::cos(1.6 * t)));
  CHECK(nc.s(1) == doctest::Approx(0.3 * std::sin(2.4 * t) / 2.4));
  const NoiseCoefficients at0 = noise_coefficients(m, 0.0);
  CHECK(at0.c(0) == doctest::Approx(0.35));
  CHECK(at0.s(0) == 0.0);
}

TEST_CASE("ohmic discretization matches the density formula") {
  OhmicSpec spec;
  spec.eta = 0.08;
  spec.cutoff = 4.0;
  spec.n_modes = 6;
  spec.omega_max = 9.0;
  const std::vector<BathMode> baths = discretize_ohmic(spec, 1.0);
  REQUIRE(baths.size() == 6);
  const double dw = 9.0 / 6.0;
  for (int k = 1; k <= 6; ++k) {
    const double w = k * dw;
    CHECK(baths[k - 1].omega == doctest::Approx(w));
    const double J = spec.eta * w * std::exp(-w / spec.cutoff);
    CHECK(baths[k - 1].g ==
          doctest::Approx(std::sqrt(2.0 / kPi * J * w * dw)).epsilon(1e-14));
  }
  const Model m = validate_model(1.0, baths);
  CHECK(schur_margin(m) > 0.0);
}

TEST_CASE("ohmic discretization reports an upper coupling bound when unstable") {
  OhmicSpec spec;
  spec.eta = 50.0;
  spec.n_modes = 12;
  bool threw = false;
  try {
    discretize_ohmic(spec, 1.0);
  } catch (const UnstableDiscretization& e) {
    threw = true;
    CHECK(std::string(e.what()).find("eta") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("ohmic rejects nonsensical parameters") {
  OhmicSpec bad;
  bad.n_modes = 0;
  CHECK_THROWS_AS(discretize_ohmic(bad, 1.0), ConfigError);
  OhmicSpec neg;
  neg.eta = -0.1;
  CHECK_THROWS_AS(discretize_ohmic(neg, 1.0), ConfigError);
}

} // TEST_SUITE
