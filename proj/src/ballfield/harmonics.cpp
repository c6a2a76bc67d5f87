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

#include "harmonics.hpp"

#include <cmath>

#include "specfun.hpp"

namespace ballfield::specfun {

complex spin_harmonic(const SpinHarmonicIndex& idx, double theta, double phi) {
  if (theta < -1e-12 || theta > kPi + 1e-12)
    throw std::domain_error("spin_harmonic: theta must lie in [0,pi]");
  const WignerD d = wigner_d(idx.ell, std::clamp(theta, 0.0, kPi));
  const double amp = std::sqrt((2.0 * idx.ell + 1.0) / kFourPi) * d.at(idx.m, -idx.s);
  return complex(amp * std::cos(idx.m * phi), amp * std::sin(idx.m * phi));
}

std::vector<std::vector<double>> spin_harmonic_theta_table(int s, int lmax, double theta) {
  if (s < 0) throw std::domain_error("spin_harmonic_theta_table: spin must be >= 0");
  if (lmax < s) throw std::domain_error("spin_harmonic_theta_table: lmax must be >= s");
  const auto mats = wigner_d_all(lmax, theta);
  std::vector<std::vector<double>> rows(lmax + 1);
  for (int ell = s; ell <= lmax; ++ell) {
    rows[ell].resize(2 * ell + 1);
    for (int m = -ell; m <= ell; ++m) rows[ell][m + ell] = mats[ell].at(m, -s);
  }
  return rows;
}

double real_sphere_harmonic(int ell, int m, double theta, double phi) {
  if (ell < 0 || std::abs(m) > ell)
    throw std::domain_error("real_sphere_harmonic: requires |m| <= ell");
  const int ma = std::abs(m);
  const double nl = std::sph_legendre(ell, ma, theta);  // includes sqrt((2l+1)/4pi (l-m)!/(l+m)!)
  if (m == 0) return nl;
  const double f = std::sqrt(2.0) * nl;
  return m > 0 ? f * std::cos(ma * phi) : f * std::sin(ma * phi);
}

namespace {

// 1 / integral_0^pi sin(chi)^{2l+2} C^{(l+1)}_{L-l}(cos chi)^2 dchi, squared-rooted:
// Gegenbauer orthogonality gives the closed form of the norm.
double gegenbauer_chi_norm(int L, int ell) {
  // integral = pi 2^{1-2lam} Gamma(n+2lam) / ( n! (n+lam) Gamma(lam)^2 ),
  // lam = ell+1, n = L-ell
  const double lam = ell + 1.0;
  const int n = L - ell;
  int sgn = 0;
  double lg = std::log(kPi) + (1.0 - 2.0 * lam) * std::log(2.0) +
              lgamma_signed(n + 2.0 * lam, sgn) - std::lgamma(n + 1.0) -
              std::log(n + lam) - 2.0 * std::lgamma(lam);
  return std::exp(-0.5 * lg);
}

}  // namespace

double sphere3_harmonic_lm(int L, int ell, int m, const Vec4& s) {
  if (L < 0 || ell < 0 || ell > L || std::abs(m) > ell)
    throw std::domain_error("sphere3_harmonic: requires 0 <= ell <= L, |m| <= ell");
  const double nrm = norm4(s);
  if (std::fabs(nrm - 1.0) > 1e-9)
    throw std::domain_error("sphere3_harmonic: point must lie on the unit S^3");
  const double cchi = std::clamp(s[3] / nrm, -1.0, 1.0);
  const double chi = std::acos(cchi);
  const double schi = std::sin(chi);
  double theta = 0.0, phi = 0.0;
  if (schi > 1e-14) {
    to_angles({s[0], s[1], s[2]}, theta, phi);
  } else if (ell > 0) {
    return 0.0;  // sin(chi)^ell kills the value at the poles
  }
  const double radial = gegenbauer_chi_norm(L, ell) * std::pow(schi, ell) *
                        gegenbauer_c(L - ell, ell + 1.0, cchi);
  return radial * real_sphere_harmonic(ell, m, theta, phi);
}

double sphere3_harmonic(int L, int j, const Vec4& s) {
  if (L < 0 || j < 1 || j > (L + 1) * (L + 1))
    throw std::domain_error("sphere3_harmonic: requires 1 <= j <= (L+1)^2");
  int ell = static_cast<int>(std::sqrt(static_cast<double>(j - 1)));
  while (ell * ell > j - 1) --ell;
  while ((ell + 1) * (ell + 1) <= j - 1) ++ell;
  const int m = (j - 1) - ell * ell - ell;
  return sphere3_harmonic_lm(L, ell, m, s);
}

}  // namespace ballfield::specfun
