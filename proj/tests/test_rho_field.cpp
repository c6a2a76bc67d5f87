// Copyright 2026 ballfield developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ballfield/rho_field.hpp"
#include "ballfield/specfun.hpp"
#include "oracle_utils.hpp"

using namespace ballfield;
using namespace ballfield::rho_field;
namespace sf = ballfield::specfun;

namespace {

Vec3 random_ball_point(oracle::Rng& rng, double r0 = 1.0) {
  for (;;) {
    Vec3 x{rng.range(-r0, r0), rng.range(-r0, r0), rng.range(-r0, r0)};
    if (norm3(x) < 0.95 * r0) return x;
  }
}

}  // namespace

TEST_CASE("psi maps the center to the south pole and stays on the sphere") {
  const BallSphereMap map(1.0);
  const Vec4 s0 = map.psi({0.0, 0.0, 0.0});
  CHECK(s0[0] == doctest::Approx(0.0));
  CHECK(s0[1] == doctest::Approx(0.0));
  CHECK(s0[2] == doctest::Approx(0.0));
  CHECK(s0[3] == doctest::Approx(-1.0));
  oracle::Rng rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const Vec3 x = random_ball_point(rng);
    CHECK(std::fabs(norm4(map.psi(x)) - 1.0) < 1e-14);
  }
}

TEST_CASE("psi and psi_inv are mutually inverse") {
  const BallSphereMap map(1.3);
  oracle::Rng rng(11);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const Vec3 x = random_ball_point(rng, 1.3);
    const Vec3 back = map.psi_inv(map.psi(x));
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(back[i] - x[i]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("psi domain errors") {
  const BallSphereMap map(1.0);
  CHECK_THROWS_AS(map.psi({1.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(map.psi_inv({0.0, 0.0, 0.0, 1.0}), std::domain_error);  // north pole
  CHECK_THROWS_AS(map.psi_inv({0.5, 0.0, 0.0, 0.5}), std::domain_error);  // off the sphere
  CHECK_THROWS_AS(BallSphereMap(-1.0), std::domain_error);
}

TEST_CASE("rho distance axioms and the isometry") {
  const RhoMetricParams prm(1.0, 1.0);
  const BallSphereMap map(1.0);
  oracle::Rng rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    const Vec3 x = random_ball_point(rng), y = random_ball_point(rng), z = random_ball_point(rng);
    const double dxy = rho_distance(x, y, prm);
    CHECK(dxy == rho_distance(y, x, prm));  // symmetric, exact
    CHECK(rho_distance(x, x, prm) == 0.0);
    CHECK(dxy <= rho_distance(x, z, prm) + rho_distance(z, y, prm) + 1e-14);
    CHECK(std::fabs(dxy - std::acos(std::clamp(dot4(map.psi(x), map.psi(y)), -1.0, 1.0))) <
          1e-12);
  }
  // the scale constant multiplies the geodesic angle
  const RhoMetricParams scaled(1.0, 2.5);
  const Vec3 a{0.2, 0.1, -0.3}, b{-0.4, 0.25, 0.05};
  CHECK(rho_distance(a, b, scaled) == doctest::Approx(2.5 * rho_distance(a, b, prm)));
}

TEST_CASE("4d matern density display") {
  const MaternParams p(1.0, 10.0, 1.0);
  for (double lam : {0.0, 1.0, 7.0})
    CHECK(matern_density_4d(lam, p) ==
          doctest::Approx(2.0 * 100.0 / std::pow(100.0 + lam * lam, 3.0)).epsilon(1e-14));
}

TEST_CASE("b_ell closed form matches the nu=1 Bessel display to 1e-8") {
  const MaternParams p(1.0, 10.0, 1.0);
  for (int ell = 0; ell <= 10; ++ell) {
    const double l = ell;
    const double i0 = sf::bessel_i(l, 10.0), i1 = sf::bessel_i(l + 1.0, 10.0);
    const double k0 = sf::bessel_k(l, 10.0), k1 = sf::bessel_k(l + 1.0, 10.0);
    const double display = 4.0 * std::pow(kPi, 4.0) / 25.0 *
                           (((l * l + 3.0 * l + 52.0) * k1 + 5.0 * k0 * (l + 2.0)) * i1 -
                            5.0 * ((l + 2.0) * k1 + 10.0 * k0) * i0);
    CHECK(b_ell_matern_closed(ell, p) == doctest::Approx(display).epsilon(1e-8));
  }
}

TEST_CASE("b_ell closed form vs J^2 quadrature across nu") {
  for (double nu : {0.6, 1.8}) {
    const MaternParams p(1.0, 10.0, nu);
    const auto f4 = [&p](double lam) { return matern_density_4d(lam, p); };
    for (int ell : {0, 3, 7, 12}) {
      const double closed = b_ell_matern_closed(ell, p);
      const double quad = b_ell_numeric_bessel(ell, f4);
      CHECK(closed == doctest::Approx(quad).epsilon(1e-6));
      CHECK(closed > 0.0);
    }
  }
}

TEST_CASE("b_ell decays beyond small ell for a=10") {
  for (double nu : {0.5, 1.0, 2.0, 3.0, 5.0}) {
    const MaternParams p(1.0, 10.0, nu);
    double prev = b_ell_matern_closed(2, p);
    for (int ell = 3; ell <= 12; ++ell) {
      const double b = b_ell_matern_closed(ell, p);
      CHECK(b / prev < 1.0);
      prev = b;
    }
  }
}

TEST_CASE("chebyshev projection of a constant covariance") {
  const double s2 = 1.7;
  const auto b = b_ell_from_covariance_all(8, [s2](double) { return s2; });
  CHECK(b[0] == doctest::Approx(kOmega4 * s2).epsilon(1e-13));
  for (int ell = 1; ell <= 8; ++ell) CHECK(std::fabs(b[ell]) < 1e-12);
  // reconstruction of the constant: all variance in b_0
  ChebyshevSpectrum spec(1, 8);
  for (int ell = 0; ell <= 8; ++ell) spec.set(ell, std::max(0.0, b[ell]));
  CHECK(covariance_from_b_scalar(spec, {0.1, 0.2, 0.0}, {-0.3, 0.1, 0.4},
                                 RhoMetricParams(1.0, 1.0)) ==
        doctest::Approx(s2).epsilon(1e-12));
}

TEST_CASE("covariance_from_b at x=y is the (l+1)^2 variance sum") {
  oracle::Rng rng(17);
  ChebyshevSpectrum spec(1, 12);
  double want = 0.0;
  for (int ell = 0; ell <= 12; ++ell) {
    const double b = rng.next() / (1.0 + ell * ell);
    spec.set(ell, b);
    want += (ell + 1.0) * (ell + 1.0) * b / kOmega4;
  }
  const Vec3 x{0.3, -0.2, 0.1};
  CHECK(covariance_from_b_scalar(spec, x, x, RhoMetricParams(1.0, 1.0)) ==
        doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("round trip reproduces the rho-stationary matern covariance") {
  const MaternParams p(1.0, 10.0, 1.0);
  const RhoMetricParams prm(1.0, 1.0);
  const auto spec = matern_rho_spectrum(p, prm, 700);
  double worst = 0.0;
  const Vec3 x{0.05, 0.0, 0.0};
  for (int i = 0; i <= 30; ++i) {
    const Vec3 y{-0.9 + 1.8 * i / 30.0, 0.1, 0.0};
    const double rec = covariance_from_b_scalar(spec, x, y, prm);
    const double want = matern_rho_covariance(x, y, p, prm);
    worst = std::max(worst, std::fabs(rec - want));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("reconstruction depends on the points only through rho") {
  oracle::Rng rng(19);
  const RhoMetricParams prm(1.0, 1.0);
  const auto spec = matern_rho_spectrum(MaternParams(1.0, 10.0, 1.0), prm, 32);
  for (int rep = 0; rep < 20; ++rep) {
    const Vec3 x = random_ball_point(rng), y = random_ball_point(rng);
    const Vec3 xp{x[2], -x[0], -x[1]}, yp{y[2], -y[0], -y[1]};
    CHECK(rho_distance(x, y, prm) == doctest::Approx(rho_distance(xp, yp, prm)).epsilon(1e-14));
    CHECK(covariance_from_b_scalar(spec, x, y, prm) ==
          doctest::Approx(covariance_from_b_scalar(spec, xp, yp, prm)).epsilon(1e-12));
  }
}

TEST_CASE("cross-route fitted constant is pi^2 and uniform across ell") {
  double constant = 0.0, spread = 0.0;
  cross_route_constant(MaternParams(1.0, 10.0, 1.0), 10, constant, spread);
  CHECK(constant == doctest::Approx(kPi * kPi).epsilon(1e-7));
  CHECK(spread < 1e-6);
}

TEST_CASE("matrix spectra validate and reconstruct componentwise") {
  ChebyshevSpectrum spec(2, 2);
  spec.set(0, std::vector<double>{2.0, 0.3, 0.3, 1.0});
  spec.set(1, std::vector<double>{1.0, 0.1, 0.1, 0.5});
  spec.set(2, std::vector<double>{0.5, 0.0, 0.0, 0.25});
  CHECK_NOTHROW(spec.validate());
  const Vec3 x{0.2, 0.0, 0.1}, y{-0.1, 0.3, 0.0};
  const auto r = covariance_from_b(spec, x, y, RhoMetricParams(1.0, 1.0));
  CHECK(r.value.size() == 4);
  CHECK(r.value[1] == doctest::Approx(r.value[2]).epsilon(1e-14));  // symmetric output
  ChebyshevSpectrum bad(2, 0);
  CHECK_THROWS_AS(bad.set(0, std::vector<double>{1.0, 0.5}), std::invalid_argument);
  bad.set(0, std::vector<double>{1.0, 0.5, -0.5, 1.0});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // not symmetric
  // symmetric but indefinite (min eigenvalue -0.65); a Gershgorin-style
  // bound would let this through
  bad.set(0, std::vector<double>{1.0, 0.5, 0.5, -0.5});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("scalar spectrum rejects negatives") {
  ChebyshevSpectrum spec(1, 1);
  spec.set(0, 1.0);
  spec.set(1, -1e-6);
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
