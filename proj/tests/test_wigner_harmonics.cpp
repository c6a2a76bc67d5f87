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

#include "ballfield/harmonics.hpp"
#include "ballfield/quadrature.hpp"
#include "ballfield/specfun.hpp"
#include "ballfield/wigner.hpp"
#include "oracle_utils.hpp"

using namespace ballfield;
using namespace ballfield::specfun;

TEST_CASE("wigner_d at beta=0 is the identity") {
  const WignerD d = wigner_d(5, 0.0);
  for (int m = -5; m <= 5; ++m)
    for (int n = -5; n <= 5; ++n)
      CHECK(d.at(m, n) == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-14));
}

TEST_CASE("wigner_d matches known closed forms") {
  const double beta = 0.77;
  const WignerD d1 = wigner_d(1, beta);
  CHECK(d1.at(0, 0) == doctest::Approx(std::cos(beta)).epsilon(1e-14));
  CHECK(d1.at(1, 1) == doctest::Approx(0.5 * (1.0 + std::cos(beta))).epsilon(1e-14));
  CHECK(d1.at(1, 0) == doctest::Approx(-std::sin(beta) / std::sqrt(2.0)).epsilon(1e-13));
  const WignerD d2 = wigner_d(2, beta);
  const double s = std::sin(beta), c = std::cos(beta);
  CHECK(d2.at(0, 0) == doctest::Approx(0.5 * (3.0 * c * c - 1.0)).epsilon(1e-13));
  CHECK(d2.at(2, 0) == doctest::Approx(std::sqrt(6.0) / 4.0 * s * s).epsilon(1e-13));
  CHECK(d2.at(0, -2) == doctest::Approx(std::sqrt(6.0) / 4.0 * s * s).epsilon(1e-13));
  CHECK(d2.at(2, -2) == doctest::Approx(std::pow((1.0 - c) / 2.0, 2)).epsilon(1e-13));
}

TEST_CASE("wigner_d rows stay orthonormal at ell=2, beta=0.7") {
  const WignerD d = wigner_d(2, 0.7);
  for (int m = -2; m <= 2; ++m) {
    double sum = 0.0;
    for (int n = -2; n <= 2; ++n) sum += d.at(m, n) * d.at(m, n);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("wigner_d unitarity across the spec grid") {
  double worst = 0.0;
  for (int ib = 0; ib < 20; ++ib) {
    const double beta = kPi * (ib + 0.5) / 20.0;
    const auto mats = wigner_d_all(32, beta);
    for (int ell = 0; ell <= 32; ++ell)
      for (int m = -ell; m <= ell; ++m)
        for (int mp = m; mp <= ell; ++mp) {
          double dot = 0.0;
          for (int n = -ell; n <= ell; ++n) dot += mats[ell].at(m, n) * mats[ell].at(mp, n);
          worst = std::max(worst, std::fabs(dot - (m == mp ? 1.0 : 0.0)));
        }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("euler angle round trips") {
  oracle::Rng rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const EulerAngles in{rng.range(0.0, kTwoPi), rng.range(1e-3, kPi - 1e-3),
                         rng.range(0.0, kTwoPi)};
    const EulerAngles out = euler_from_rotation(rotation_zyz(in));
    const Mat3 r1 = rotation_zyz(in), r2 = rotation_zyz(out);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(r1[i][j] == doctest::Approx(r2[i][j]).epsilon(1e-11));
  }
}

TEST_CASE("euler extraction fixes gamma at the gimbal angles") {
  for (double beta : {0.0, kPi}) {
    const EulerAngles in{1.1, beta, 0.7};
    const EulerAngles out = euler_from_rotation(rotation_zyz(in));
    CHECK(out.gamma == 0.0);
    const Mat3 r1 = rotation_zyz(in), r2 = rotation_zyz(out);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(r1[i][j] == doctest::Approx(r2[i][j]).epsilon(1e-12));
  }
}

TEST_CASE("EulerAngles normalization") {
  const EulerAngles e{-0.5, kPi / 2, 7.0};
  const EulerAngles n = e.normalized();
  CHECK(n.alpha == doctest::Approx(kTwoPi - 0.5));
  CHECK(n.gamma == doctest::Approx(7.0 - kTwoPi));
  CHECK(n.alpha >= 0.0);
  CHECK(n.alpha < kTwoPi);
  CHECK_THROWS_AS((EulerAngles{0.0, 4.0, 0.0}.normalized()), std::domain_error);
}

TEST_CASE("spin harmonic index invariants") {
  CHECK_THROWS_AS(SpinHarmonicIndex(-1, 2, 0), std::domain_error);
  CHECK_THROWS_AS(SpinHarmonicIndex(2, 1, 0), std::domain_error);
  CHECK_THROWS_AS(SpinHarmonicIndex(0, 1, 2), std::domain_error);
}

TEST_CASE("spin harmonics reduce to the spherical ones at s=0") {
  CHECK(spin_harmonic({0, 0, 0}, 1.0, 2.0).real() ==
        doctest::Approx(1.0 / std::sqrt(kFourPi)).epsilon(1e-14));
  CHECK(spin_harmonic({0, 0, 0}, 1.0, 2.0).imag() == doctest::Approx(0.0));
  oracle::Rng rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const double th = rng.range(0.0, kPi);
    CHECK(spin_harmonic({0, 1, 0}, th, rng.range(0.0, kTwoPi)).real() ==
          doctest::Approx(std::sqrt(3.0 / kFourPi) * std::cos(th)).epsilon(1e-13));
  }
  // Y_11 = -sqrt(3/8pi) sin(theta) e^{i phi}
  const double th = 0.9, ph = 2.2;
  const complex y11 = spin_harmonic({0, 1, 1}, th, ph);
  const complex want = -std::sqrt(3.0 / (8.0 * kPi)) * std::sin(th) *
                       complex(std::cos(ph), std::sin(ph));
  CHECK(std::abs(y11 - want) < 1e-13);
}

TEST_CASE("spin-2 harmonic against the explicit d^2 entry") {
  // 2Y20(theta,phi) = sqrt(5/4pi) d^2_{0,-2}(theta) = sqrt(5/4pi) sqrt(6)/4 sin^2
  const double th = kPi / 3.0;
  const complex y = spin_harmonic({2, 2, 0}, th, 0.0);
  const double want = std::sqrt(5.0 / kFourPi) * std::sqrt(6.0) / 4.0 * std::pow(std::sin(th), 2);
  CHECK(y.real() == doctest::Approx(want).epsilon(1e-13));
  CHECK(y.imag() == doctest::Approx(0.0));
}

TEST_CASE("spin harmonic orthonormality under product quadrature") {
  const int lmax = 6;
  const auto gl = gauss_legendre(2 * lmax + 2, -1.0, 1.0);
  const int nphi = 4 * lmax + 2;
  double worst = 0.0;
  for (int s = 0; s <= 2; ++s)
    for (int ell = s; ell <= lmax; ++ell)
      for (int lp = ell; lp <= std::min(lmax, ell + 2); ++lp)
        for (int m = -std::min(2, ell); m <= std::min(2, ell); ++m)
          for (int mp = -std::min(2, lp); mp <= std::min(2, lp); ++mp) {
            complex acc(0.0, 0.0);
            for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
              const double th = std::acos(gl.nodes[i]);
              for (int j = 0; j < nphi; ++j) {
                const double ph = kTwoPi * j / nphi;
                acc += gl.weights[i] * (kTwoPi / nphi) * spin_harmonic({s, ell, m}, th, ph) *
                       std::conj(spin_harmonic({s, lp, mp}, th, ph));
              }
            }
            const double want = (ell == lp && m == mp) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - want));
          }
  CHECK(worst < 1e-10);
}

TEST_CASE("spin addition theorem pointwise") {
  oracle::Rng rng(29);
  double worst = 0.0;
  for (int s = 0; s <= 2; ++s)
    for (int rep = 0; rep < 6; ++rep) {
      const double th1 = rng.range(0.05, kPi - 0.05), ph1 = rng.range(0.0, kTwoPi);
      const double th2 = rng.range(0.05, kPi - 0.05), ph2 = rng.range(0.0, kTwoPi);
      const auto e = euler_from_rotation(
          mat_mul(transpose(rotation_zyz({ph1, th1, 0.0})), rotation_zyz({ph2, th2, 0.0})));
      for (int ell = s; ell <= 8; ++ell)
        for (int m = -ell; m <= 0; ++m) {
          complex lhs(0.0, 0.0);
          for (int mp = -ell; mp <= ell; ++mp)
            lhs += spin_harmonic({s, ell, mp}, th2, ph2) *
                   std::conj(spin_harmonic({-m, ell, mp}, th1, ph1));
          const complex rhs = std::sqrt((2.0 * ell + 1.0) / kFourPi) *
                              spin_harmonic({s, ell, m}, e.beta, e.alpha) *
                              complex(std::cos(s * e.gamma), -std::sin(s * e.gamma));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("sphere3 harmonic basics") {
  const Vec4 north{0.0, 0.0, 0.0, 1.0};
  CHECK(sphere3_harmonic(0, 1, north) ==
        doctest::Approx(1.0 / std::sqrt(kOmega4)).epsilon(1e-13));
  // the degree-1 polar member is proportional to s4
  oracle::Rng rng(37);
  const double v1 = sphere3_harmonic_lm(1, 0, 0, {0.0, 0.0, 0.6, 0.8});
  const double v2 = sphere3_harmonic_lm(1, 0, 0, {0.6, 0.0, 0.0, 0.8});
  CHECK(v1 == doctest::Approx(v2).epsilon(1e-13));  // depends only on s4
  const double v3 = sphere3_harmonic_lm(1, 0, 0, {0.0, 0.8, 0.0, 0.6});
  CHECK(v1 / 0.8 == doctest::Approx(v3 / 0.6).epsilon(1e-12));
  CHECK_THROWS_AS(sphere3_harmonic(1, 1, {0.0, 0.0, 0.0, 1.1}), std::domain_error);
  CHECK_THROWS_AS(sphere3_harmonic(1, 5, north), std::domain_error);
}

TEST_CASE("sphere3 harmonics are orthonormal under product quadrature") {
  // chi x theta x phi product grid; the chi measure sin^2(chi) dchi turns
  // into the Gauss-Chebyshev-2 weight sqrt(1-x^2) dx under x = cos chi, so
  // that rule makes the product quadrature exact at low degree
  const auto gchi = gauss_chebyshev2(16);
  const auto glth = gauss_legendre(12, -1.0, 1.0);
  const int nphi = 12;
  const auto inner = [&](int La, int ja, int Lb, int jb) {
    double acc = 0.0;
    for (std::size_t ic = 0; ic < gchi.nodes.size(); ++ic) {
      const double schi = std::sqrt(1.0 - gchi.nodes[ic] * gchi.nodes[ic]);
      for (std::size_t it = 0; it < glth.nodes.size(); ++it) {
        const double sth = std::sqrt(1.0 - glth.nodes[it] * glth.nodes[it]);
        for (int ip = 0; ip < nphi; ++ip) {
          const double ph = kTwoPi * ip / nphi;
          const Vec4 s{schi * sth * std::cos(ph), schi * sth * std::sin(ph),
                       schi * glth.nodes[it], gchi.nodes[ic]};
          acc += gchi.weights[ic] * glth.weights[it] * (kTwoPi / nphi) *
                 sphere3_harmonic(La, ja, s) * sphere3_harmonic(Lb, jb, s);
        }
      }
    }
    return acc;
  };
  // identity Gram within the L = 1 and L = 2 families
  for (int L : {1, 2})
    for (int ja = 1; ja <= (L + 1) * (L + 1); ++ja)
      for (int jb = ja; jb <= (L + 1) * (L + 1); ++jb)
        CHECK(inner(L, ja, L, jb) == doctest::Approx(ja == jb ? 1.0 : 0.0).epsilon(1e-10));
  // cross-degree orthogonality
  for (int ja = 1; ja <= 4; ++ja)
    for (int jb = 1; jb <= 9; ++jb)
      CHECK(inner(1, ja, 2, jb) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("sphere3 addition identity") {
  // sum_j S_Lj(s) S_Lj(s') = (L+1) U_L(cos gamma) / omega_4
  oracle::Rng rng(43);
  for (int L = 0; L <= 4; ++L)
    for (int rep = 0; rep < 5; ++rep) {
      Vec4 a{rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)};
      Vec4 b{rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)};
      const double na = norm4(a), nb = norm4(b);
      for (auto& c : a) c /= na;
      for (auto& c : b) c /= nb;
      double sum = 0.0;
      for (int j = 1; j <= (L + 1) * (L + 1); ++j)
        sum += sphere3_harmonic(L, j, a) * sphere3_harmonic(L, j, b);
      const double t = std::clamp(dot4(a, b), -1.0, 1.0);
      const double want = (L + 1.0) * chebyshev_u(L, t) / kOmega4;
      CHECK(sum == doctest::Approx(want).epsilon(1e-11));
    }
}
