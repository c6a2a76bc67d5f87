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
#include <map>
#include <memory>

#include "ballfield/matern_sphere.hpp"
#include "ballfield/quadrature.hpp"
#include "ballfield/specfun.hpp"
#include "ballfield/spin_field.hpp"
#include "oracle_utils.hpp"

using namespace ballfield;
using namespace ballfield::spin_field;
namespace ms = ballfield::matern_sphere;

namespace {

SpinSpectrumBall random_spectrum(int s, int lmax, int nmax, oracle::Rng& rng) {
  SpinSpectrumBall spec(s, 1.0, lmax, nmax);
  for (int ell = s; ell <= lmax; ++ell)
    for (int n = ell; n <= nmax; n += 2)
      spec.set(ell, n, rng.next() / ((1.0 + ell) * (1.0 + ell) * (1.0 + n)));
  return spec;
}

Vec3 random_ball_point(oracle::Rng& rng) {
  for (;;) {
    Vec3 x{rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)};
    const double n = norm3(x);
    if (n > 0.05 && n < 0.95) return x;
  }
}

}  // namespace

TEST_CASE("zernike index enforces parity and ordering") {
  CHECK_NOTHROW(ZernikeIndex(4, 2));
  CHECK_THROWS_AS(ZernikeIndex(3, 2), std::domain_error);  // odd parity fails fast
  CHECK_THROWS_AS(ZernikeIndex(2, 3), std::domain_error);
  CHECK_THROWS_AS(ZernikeIndex(2, -1), std::domain_error);
}

TEST_CASE("zernike radial basics") {
  oracle::Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const double r = rng.next();
    CHECK(zernike_radial({0, 0}, r) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    for (int ell : {1, 2, 5})
      CHECK(zernike_radial({ell, ell}, r) ==
            doctest::Approx(std::sqrt(2.0 * ell + 3.0) * std::pow(r, ell)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(zernike_radial({2, 0}, 1.5), std::domain_error);
}

TEST_CASE("zernike dual route against the quad-precision sum") {
  double worst = 0.0;
  for (int n = 0; n <= 16; ++n)
    for (int ell = n % 2; ell <= n; ell += 2)
      for (int i = 0; i <= 20; ++i) {
        const double r = i / 20.0;
        worst = std::max(worst, std::fabs(zernike_radial({n, ell}, r) -
                                          oracle::zernike_sum(n, ell, r)));
      }
  CHECK(worst < 1e-12);
  // and the library's own alternating-sum route agrees too
  CHECK(zernike_radial({4, 2}, 0.6) ==
        doctest::Approx(zernike_radial_sum_form({4, 2}, 0.6)).epsilon(1e-13));
}

TEST_CASE("scaled zernike reduces at r0=1 and hits the endpoint value") {
  oracle::Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const double r = rng.next();
    CHECK(zernike_radial_scaled({6, 2}, r, 1.0) ==
          doctest::Approx(zernike_radial({6, 2}, r)).epsilon(1e-13));
  }
  // P_1^(0,1/2)(1) = 1, so R~_{20}(r0) = sqrt(7)/r0^{3/2}
  const double r0 = 2.0;
  CHECK(zernike_radial_scaled({2, 0}, r0, r0) ==
        doctest::Approx(std::sqrt(7.0) / std::pow(r0, 1.5)).epsilon(1e-13));
  CHECK_THROWS_AS(zernike_radial_scaled({2, 0}, 2.5, 2.0), std::domain_error);
}

TEST_CASE("scaled zernike orthonormality with weight r^2 on [0,r0]") {
  for (double r0 : {1.0, 2.0}) {
    const auto gl = specfun::gauss_legendre(64, 0.0, r0);
    for (int ell : {0, 1, 3})
      for (int n = ell; n <= 12; n += 2)
        for (int np = ell; np <= 12; np += 2) {
          double acc = 0.0;
          for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            acc += gl.weights[i] * gl.nodes[i] * gl.nodes[i] *
                   zernike_radial_scaled({n, ell}, gl.nodes[i], r0) *
                   zernike_radial_scaled({np, ell}, gl.nodes[i], r0);
          CHECK(acc == doctest::Approx(n == np ? 1.0 : 0.0).epsilon(1e-10));
        }
  }
}

TEST_CASE("spin spectrum storage and validation") {
  SpinSpectrumBall spec(1, 2.0, 4, 8);
  CHECK_THROWS_AS(spec.set(0, 0, 1.0), std::domain_error);   // ell below spin
  CHECK_THROWS_AS(spec.set(2, 3, 1.0), std::domain_error);   // odd parity
  CHECK_THROWS_AS(spec.set(2, 10, 1.0), std::domain_error);  // beyond nmax
  CHECK_THROWS_AS(spec.set(2, 4, -1.0), std::domain_error);  // negative eigenvalue
  spec.set(2, 4, 0.7);
  CHECK(spec.at(2, 4) == doctest::Approx(0.7));
  CHECK(spec.n_values(3) == std::vector<int>{3, 5, 7});
  CHECK_THROWS_AS(SpinSpectrumBall(2, 1.0, 1, 4), std::domain_error);
}

TEST_CASE("radial covariance from a single mode is the basis product") {
  SpinSpectrumBall spec(0, 1.0, 4, 8);
  spec.set(2, 4, 1.0);
  const double r1 = 0.3, r2 = 0.8;
  CHECK(spin_spectrum_to_radial_cov(spec, 2, r1, r2) ==
        doctest::Approx(zernike_radial_scaled({4, 2}, r1, 1.0) *
                        zernike_radial_scaled({4, 2}, r2, 1.0))
            .epsilon(1e-13));
  CHECK(spin_spectrum_to_radial_cov(spec, 2, r1, r2) ==
        doctest::Approx(spin_spectrum_to_radial_cov(spec, 2, r2, r1)).epsilon(1e-14));
  CHECK(spin_spectrum_to_radial_cov(spec, 2, r1, r1) >= 0.0);
}

TEST_CASE("two-point correlation equals the brute-force double sum") {
  oracle::Rng rng(11);
  double worst = 0.0;
  for (int s : {0, 1, 2}) {
    const auto spec = random_spectrum(s, 16, 18, rng);
    for (int rep = 0; rep < 17; ++rep) {
      const Vec3 x1 = random_ball_point(rng), x2 = random_ball_point(rng);
      worst = std::max(worst, std::abs(two_point_correlation(spec, x1, x2) -
                                       brute_force_two_point(spec, x1, x2, 16)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("two-point correlation is hermitian and real on the diagonal") {
  oracle::Rng rng(13);
  const auto spec = random_spectrum(2, 10, 12, rng);
  for (int rep = 0; rep < 10; ++rep) {
    const Vec3 x1 = random_ball_point(rng), x2 = random_ball_point(rng);
    const complex a = two_point_correlation(spec, x1, x2);
    const complex b = two_point_correlation(spec, x2, x1);
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
    const complex d = two_point_correlation(spec, x1, x1);
    CHECK(std::fabs(d.imag()) < 1e-14);
    // variance formula sum (2l+1) C_l(r,r) / 4pi
    double want = 0.0;
    const double r = norm3(x1);
    for (int ell = spec.spin(); ell <= spec.lmax(); ++ell)
      want += (2.0 * ell + 1.0) * spin_spectrum_to_radial_cov(spec, ell, r, r) / kFourPi;
    CHECK(d.real() == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("s=0 two-point reduces to the Legendre series of matern_sphere") {
  oracle::Rng rng(17);
  const auto spec = random_spectrum(0, 12, 14, rng);
  for (int rep = 0; rep < 5; ++rep) {
    const Vec3 x1 = random_ball_point(rng), x2 = random_ball_point(rng);
    const double r1 = norm3(x1), r2 = norm3(x2);
    // package the same radial covariances as an AngularSpectrum
    ms::AngularSpectrum as;
    as.spin = 0;
    as.r1 = r1;
    as.r2 = r2;
    as.lmax = spec.lmax();
    for (int ell = 0; ell <= spec.lmax(); ++ell)
      as.coeffs.push_back(spin_spectrum_to_radial_cov(spec, ell, r1, r2));
    const double cg = std::clamp(dot3(x1, x2) / (r1 * r2), -1.0, 1.0);
    const double legendre = ms::covariance_from_spectrum(as, std::acos(cg)).value;
    const complex spin_route = two_point_correlation(spec, x1, x2);
    CHECK(spin_route.real() == doctest::Approx(legendre).epsilon(1e-10));
    CHECK(std::fabs(spin_route.imag()) < 1e-12);
  }
}

TEST_CASE("errors at the origin and outside the ball") {
  oracle::Rng rng(19);
  const auto spec = random_spectrum(0, 4, 6, rng);
  CHECK_THROWS_AS(two_point_correlation(spec, {0, 0, 0}, {0.5, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(two_point_correlation(spec, {0.5, 0, 0}, {1.5, 0, 0}), std::domain_error);
}

TEST_CASE("projection recovers a spectrum assembled in the Zernike basis") {
  // when the kernel is exactly a Zernike-diagonal Mercer sum the projection
  // returns its eigenvalues
  oracle::Rng rng(23);
  const auto truth = random_spectrum(0, 6, 10, rng);
  const auto cov = [&truth](int ell, double r1, double r2) {
    return spin_spectrum_to_radial_cov(truth, ell, r1, r2);
  };
  const auto back = project_radial_covariance(cov, 0, 1.0, 6, 10);
  for (int ell = 0; ell <= 6; ++ell)
    for (int n : truth.n_values(ell))
      CHECK(back.at(ell, n) == doctest::Approx(truth.at(ell, n)).epsilon(1e-10));
}

TEST_CASE("projection of the Matern kernel preserves the radial trace") {
  // the scaled Zernike functions are not the Matern eigenfunctions, so the
  // diagonal projection drops the off-diagonal tensor structure and only
  // approximates the kernel; what it does preserve, increasingly well as
  // nmax grows, is the trace Int r^2 C_ell(r,r) dr = sum_n A_ell^(n)
  const ms::MaternParams p(1.0, 3.0, 1.0);
  const auto f = ms::matern_spectral_density(p);
  const int ell = 1;
  // memoize the quadrature kernel; both projection passes share the grid
  auto cache = std::make_shared<std::map<std::pair<double, double>, double>>();
  const auto cov = [&f, ell, cache](int l, double a, double b) {
    if (l != ell) return 0.0;
    const auto key = std::minmax(a, b);
    if (auto it = cache->find(key); it != cache->end()) return it->second;
    const double v = ms::angular_spectrum_numeric(ell, a, b, f);
    (*cache)[key] = v;
    return v;
  };
  const auto gl = specfun::gauss_legendre(24, 0.0, 1.0);
  double trace = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    trace += gl.weights[i] * gl.nodes[i] * gl.nodes[i] * cov(ell, gl.nodes[i], gl.nodes[i]);
  double err_small = 0.0, err_large = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    const int nmax = pass == 0 ? 5 : 13;
    const auto proj = project_radial_covariance(cov, 0, 1.0, ell, nmax, 24);
    double tr = 0.0;
    for (int n : proj.n_values(ell)) tr += proj.at(ell, n);
    (pass == 0 ? err_small : err_large) = std::fabs(tr - trace) / trace;
  }
  CHECK(err_large < err_small);
  CHECK(err_large < 5e-3);
}
