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

// Exercises the shared-library C surface end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "ballfield.h"

namespace {

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) : path("/tmp/ballfield_capi_" + name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("scalar special functions and error reporting") {
  double v = 0.0;
  CHECK(bf_legendre_p(5, 0.7, &v) == BF_OK);
  CHECK(v == doctest::Approx((63 * std::pow(0.7, 5) - 70 * std::pow(0.7, 3) + 15 * 0.7) / 8));
  CHECK(bf_legendre_p(5, 2.0, &v) == BF_EDOMAIN);
  CHECK(std::strlen(bf_last_error()) > 0);
  CHECK(bf_legendre_p(5, 0.7, nullptr) == BF_EINVAL);
  CHECK(bf_bessel_k(1.0, 0.0, &v) == BF_EDOMAIN);
  CHECK(bf_bessel_i(0.5, 1000.0, &v) == BF_EOVERFLOW);
  CHECK(bf_hyp1f2(1.0, -2.0, 1.0, 0.5, &v) == BF_EDOMAIN);
  CHECK(bf_chebyshev_u(3, 0.25, &v) == BF_OK);
  CHECK(bf_jacobi_p(1, 0.0, 1.5, 0.0, &v) == BF_OK);
  CHECK(v == doctest::Approx(-0.75));
  CHECK(std::string(bf_version()) == "1.0.0");
}

TEST_CASE("wigner, spin and hyperspherical harmonics") {
  double d[9];
  REQUIRE(bf_wigner_d(1, 0.6, d) == BF_OK);
  CHECK(d[4] == doctest::Approx(std::cos(0.6)));  // centre entry is d^1_00
  double re = 0.0, im = 0.0;
  REQUIRE(bf_spin_harmonic(0, 1, 0, 0.4, 1.0, &re, &im) == BF_OK);
  CHECK(re == doctest::Approx(std::sqrt(3.0 / (4.0 * M_PI)) * std::cos(0.4)));
  CHECK(im == doctest::Approx(0.0));
  CHECK(bf_spin_harmonic(2, 1, 0, 0.4, 1.0, &re, &im) == BF_EDOMAIN);  // ell < s
  const double north[4] = {0.0, 0.0, 0.0, 1.0};
  double s3 = 0.0;
  REQUIRE(bf_sphere3_harmonic(0, 1, north, &s3) == BF_OK);
  CHECK(s3 == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * M_PI)));
  CHECK(bf_sphere3_harmonic(1, 9, north, &s3) == BF_EDOMAIN);
}

TEST_CASE("matern spectrum handle lifecycle") {
  bf_angular_spectrum* spec = nullptr;
  REQUIRE(bf_angular_spectrum_build_matern(1.0, 10.0, 0.5, 1.0, 32, &spec) == BF_OK);
  int lmax = 0;
  CHECK(bf_angular_spectrum_lmax(spec, &lmax) == BF_OK);
  CHECK(lmax == 32);
  double c0 = 0.0, halfnu = 0.0;
  CHECK(bf_angular_spectrum_coeff(spec, 0, &c0) == BF_OK);
  CHECK(bf_matern_spectrum_halfnu(0, 1.0, &halfnu) == BF_OK);
  CHECK(c0 == doctest::Approx(halfnu).epsilon(1e-10));
  double value = 0.0, tail = 0.0;
  CHECK(bf_angular_spectrum_covariance(spec, 1.0, &value, &tail) == BF_OK);
  CHECK(tail > 0.0);
  TempPath tj("spec.json");
  CHECK(bf_angular_spectrum_save_json(spec, tj.path.c_str()) == BF_OK);
  bf_angular_spectrum* back = nullptr;
  REQUIRE(bf_angular_spectrum_load_json(tj.path.c_str(), &back) == BF_OK);
  double c0b = 0.0;
  CHECK(bf_angular_spectrum_coeff(back, 0, &c0b) == BF_OK);
  CHECK(c0b == c0);
  bf_angular_spectrum_free(back);
  bf_angular_spectrum_free(spec);
  CHECK(bf_angular_spectrum_build_matern(-1.0, 10.0, 0.5, 1.0, 8, &spec) == BF_EDOMAIN);
}

TEST_CASE("spin spectrum handle and the two evaluation routes") {
  bf_spin_spectrum* spec = nullptr;
  REQUIRE(bf_spin_spectrum_create(1, 1.0, 6, 8, &spec) == BF_OK);
  CHECK(bf_spin_spectrum_set(spec, 2, 5, 1.0) == BF_EDOMAIN);  // parity
  for (int ell = 1; ell <= 6; ++ell)
    for (int n = ell; n <= 8; n += 2)
      CHECK(bf_spin_spectrum_set(spec, ell, n, 1.0 / ((1.0 + ell) * (1.0 + n))) == BF_OK);
  const double x1[3] = {0.3, 0.2, 0.5}, x2[3] = {-0.4, 0.1, 0.35};
  double re1, im1, re2, im2;
  REQUIRE(bf_spin_two_point(spec, x1, x2, &re1, &im1) == BF_OK);
  REQUIRE(bf_spin_two_point_brute(spec, x1, x2, 6, &re2, &im2) == BF_OK);
  CHECK(re1 == doctest::Approx(re2).epsilon(1e-10));
  CHECK(im1 == doctest::Approx(im2).epsilon(1e-10));
  double cov = 0.0;
  CHECK(bf_spin_spectrum_radial_cov(spec, 2, 0.4, 0.7, &cov) == BF_OK);
  TempPath tj("spin.json");
  CHECK(bf_spin_spectrum_save_json(spec, tj.path.c_str()) == BF_OK);
  bf_spin_spectrum* back = nullptr;
  REQUIRE(bf_spin_spectrum_load_json(tj.path.c_str(), &back) == BF_OK);
  double a = 0.0;
  CHECK(bf_spin_spectrum_get(back, 2, 4, &a) == BF_OK);
  CHECK(a == doctest::Approx(1.0 / 15.0));
  bf_spin_spectrum_free(back);
  bf_spin_spectrum_free(spec);
}

TEST_CASE("rho surface: maps, distance, spectra, covariance") {
  const double x[3] = {0.2, -0.1, 0.3}, y[3] = {-0.3, 0.4, 0.0};
  double s[4];
  REQUIRE(bf_psi(x, 1.0, s) == BF_OK);
  CHECK(std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3]) ==
        doctest::Approx(1.0));
  double back[3];
  REQUIRE(bf_psi_inv(s, 1.0, back) == BF_OK);
  CHECK(back[0] == doctest::Approx(x[0]).epsilon(1e-12));
  double rho = 0.0;
  REQUIRE(bf_rho_distance(x, y, 1.0, 1.0, &rho) == BF_OK);
  CHECK(rho > 0.0);
  const double edge[3] = {1.0, 0.0, 0.0};
  CHECK(bf_rho_distance(edge, y, 1.0, 1.0, &rho) == BF_EDOMAIN);

  double closed = 0.0, numeric = 0.0;
  REQUIRE(bf_b_ell_matern_closed(3, 1.0, 10.0, 1.0, &closed) == BF_OK);
  REQUIRE(bf_b_ell_matern_numeric(3, 1.0, 10.0, 1.0, &numeric) == BF_OK);
  CHECK(closed == doctest::Approx(numeric).epsilon(1e-8));

  double constant = 0.0, spread = 0.0;
  REQUIRE(bf_rho_cross_route_constant(1.0, 10.0, 1.0, 6, &constant, &spread) == BF_OK);
  CHECK(constant == doctest::Approx(M_PI * M_PI).epsilon(1e-6));

  bf_cheb_spectrum* spec = nullptr;
  REQUIRE(bf_cheb_spectrum_matern_projection(1.0, 10.0, 1.0, 1.0, 1.0, 64, &spec) == BF_OK);
  double value = 0.0, tail = 0.0, direct = 0.0;
  REQUIRE(bf_cheb_spectrum_covariance(spec, x, y, 1.0, 1.0, &value, 1, &tail) == BF_OK);
  REQUIRE(bf_matern_rho_covariance(x, y, 1.0, 10.0, 1.0, 1.0, 1.0, &direct) == BF_OK);
  CHECK(value == doctest::Approx(direct).epsilon(2e-2));
  TempPath tj("cheb.json");
  CHECK(bf_cheb_spectrum_save_json(spec, tj.path.c_str()) == BF_OK);
  bf_cheb_spectrum* loaded = nullptr;
  REQUIRE(bf_cheb_spectrum_load_json(tj.path.c_str(), &loaded) == BF_OK);
  double b0a = 0.0, b0b = 0.0;
  CHECK(bf_cheb_spectrum_get(spec, 0, &b0a, 1) == BF_OK);
  CHECK(bf_cheb_spectrum_get(loaded, 0, &b0b, 1) == BF_OK);
  CHECK(b0a == b0b);
  bf_cheb_spectrum_free(loaded);
  bf_cheb_spectrum_free(spec);
}

TEST_CASE("simulation through the C surface") {
  bf_angular_spectrum* spec = nullptr;
  REQUIRE(bf_angular_spectrum_build_matern(1.0, 10.0, 0.5, 1.0, 8, &spec) == BF_OK);
  bf_realization* real = nullptr;
  REQUIRE(bf_simulate_sphere_grid(spec, 4242, 50, 17, 17, &real) == BF_OK);
  uint64_t npoints = 0;
  int nreal = 0, is_complex = 1;
  CHECK(bf_realization_counts(real, &npoints, &nreal, &is_complex) == BF_OK);
  CHECK(npoints == 17 * 17);
  CHECK(nreal == 50);
  CHECK(is_complex == 0);
  double re = 0.0, im = 0.0;
  CHECK(bf_realization_value(real, 0, 0, &re, &im) == BF_OK);
  CHECK(std::fabs(im) < 1e-12);
  CHECK(bf_realization_value(real, 50, 0, &re, &im) == BF_EINVAL);

  std::vector<double> c(9), se(9);
  CHECK(bf_realization_estimate_spectrum(real, 8, c.data(), se.data()) == BF_OK);
  double c0 = 0.0;
  CHECK(bf_angular_spectrum_coeff(spec, 0, &c0) == BF_OK);
  CHECK(std::fabs(c.front() - c0) < 5.0 * se.front() + 1e-12);

  TempPath tb("real.bin");
  CHECK(bf_realization_save_binary(real, tb.path.c_str()) == BF_OK);
  bf_realization* loaded = nullptr;
  REQUIRE(bf_realization_load_binary(tb.path.c_str(), &loaded) == BF_OK);
  double re2 = 0.0, im2 = 0.0;
  CHECK(bf_realization_value(loaded, 3, 5, &re, &im) == BF_OK);
  CHECK(bf_realization_value(real, 3, 5, &re2, &im2) == BF_OK);
  CHECK(re == re2);
  bf_realization_free(loaded);
  bf_realization_free(real);

  // determinism through the C API
  const double pts[6] = {0.0, 0.0, 1.0, 1.0, 0.0, 0.0};
  bf_realization *r1 = nullptr, *r2 = nullptr;
  REQUIRE(bf_simulate_sphere(spec, 7, 4, pts, 2, &r1) == BF_OK);
  REQUIRE(bf_simulate_sphere(spec, 7, 4, pts, 2, &r2) == BF_OK);
  for (int t = 0; t < 4; ++t)
    for (uint64_t i = 0; i < 2; ++i) {
      double a1, b1, a2, b2;
      CHECK(bf_realization_value(r1, t, i, &a1, &b1) == BF_OK);
      CHECK(bf_realization_value(r2, t, i, &a2, &b2) == BF_OK);
      CHECK(a1 == a2);
      CHECK(b1 == b2);
    }
  bf_realization_free(r1);
  bf_realization_free(r2);
  bf_angular_spectrum_free(spec);
}

TEST_CASE("validate through the C surface") {
  int n_failed = -1;
  CHECK(bf_validate_run("nosuch", nullptr, &n_failed) == BF_EINVAL);
  TempPath report("report.json");
  REQUIRE(bf_validate_run("spin", report.path.c_str(), &n_failed) == BF_OK);
  CHECK(n_failed == 0);
  FILE* f = std::fopen(report.path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[64] = {0};
  (void)!std::fread(buf, 1, 60, f);
  std::fclose(f);
  CHECK(std::strstr(buf, "check") != nullptr);
}
