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

#include "spin_field.hpp"

#include <cmath>

#include "harmonics.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "wigner.hpp"

namespace ballfield::spin_field {

using specfun::EulerAngles;
using specfun::jacobi_p;

double zernike_radial(const ZernikeIndex& idx, double r) {
  if (r < -1e-12 || r > 1.0 + 1e-12)
    throw std::domain_error("zernike_radial: r must lie in [0,1]");
  r = std::clamp(r, 0.0, 1.0);
  const int k = (idx.n - idx.ell) / 2;
  return std::sqrt(2.0 * idx.n + 3.0) * std::pow(r, idx.ell) *
         jacobi_p(k, 0.0, idx.ell + 0.5, 2.0 * r * r - 1.0);
}

double zernike_radial_sum_form(const ZernikeIndex& idx, double r) {
  if (r < -1e-12 || r > 1.0 + 1e-12)
    throw std::domain_error("zernike_radial_sum_form: r must lie in [0,1]");
  r = std::clamp(r, 0.0, 1.0);
  const int half = (idx.n - idx.ell) / 2;
  // sum over k of (-1)^k binom(half,k) binom(n-k+1/2, half) r^(n-2k),
  // accumulated in long double (terms alternate)
  long double sum = 0.0L;
  for (int k = 0; k <= half; ++k) {
    long double binom1 = 1.0L;
    for (int i = 0; i < k; ++i) binom1 = binom1 * (half - i) / (i + 1);
    long double binom2 = 1.0L;
    const long double top = idx.n - k + 0.5L;
    for (int i = 0; i < half; ++i) binom2 = binom2 * (top - i) / (i + 1);
    const long double term =
        binom1 * binom2 * powl(static_cast<long double>(r), idx.n - 2 * k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(std::sqrt(2.0L * idx.n + 3.0L) * sum);
}

double zernike_radial_scaled(const ZernikeIndex& idx, double r, double r0) {
  if (r0 <= 0.0) throw std::domain_error("zernike_radial_scaled: r0 must be positive");
  if (r < -1e-12 || r > r0 * (1.0 + 1e-12))
    throw std::domain_error("zernike_radial_scaled: r must lie in [0,r0]");
  r = std::clamp(r, 0.0, r0);
  const int k = (idx.n - idx.ell) / 2;
  return std::sqrt(2.0 * idx.n + 3.0) / std::pow(r0, 1.5) * std::pow(r / r0, idx.ell) *
         jacobi_p(k, 0.0, idx.ell + 0.5, 2.0 * r * r / (r0 * r0) - 1.0);
}

SpinSpectrumBall::SpinSpectrumBall(int spin, double r0, int lmax, int nmax)
    : spin_(spin), r0_(r0), lmax_(lmax), nmax_(nmax) {
  if (spin_ < 0) throw std::domain_error("SpinSpectrumBall: spin must be >= 0");
  if (r0_ <= 0.0) throw std::domain_error("SpinSpectrumBall: r0 must be positive");
  if (lmax_ < spin_) throw std::domain_error("SpinSpectrumBall: lmax must be >= spin");
  if (nmax_ < lmax_) throw std::domain_error("SpinSpectrumBall: nmax must be >= lmax");
  a_.resize(lmax_ + 1);
  for (int ell = spin_; ell <= lmax_; ++ell)
    a_[ell].assign(static_cast<std::size_t>((nmax_ - ell) / 2) + 1, 0.0);
}

void SpinSpectrumBall::check_ell(int ell) const {
  if (ell < spin_ || ell > lmax_)
    throw std::domain_error("SpinSpectrumBall: ell outside [spin, lmax]");
}

void SpinSpectrumBall::set(int ell, int n, double value) {
  check_ell(ell);
  ZernikeIndex idx(n, ell);  // validates parity
  if (n > nmax_) throw std::domain_error("SpinSpectrumBall: n exceeds nmax");
  if (value < 0.0) throw std::domain_error("SpinSpectrumBall: eigenvalues must be >= 0");
  a_[ell][static_cast<std::size_t>((n - ell) / 2)] = value;
}

double SpinSpectrumBall::at(int ell, int n) const {
  check_ell(ell);
  ZernikeIndex idx(n, ell);
  if (n > nmax_) throw std::domain_error("SpinSpectrumBall: n exceeds nmax");
  return a_[ell][static_cast<std::size_t>((n - ell) / 2)];
}

std::vector<int> SpinSpectrumBall::n_values(int ell) const {
  check_ell(ell);
  std::vector<int> ns;
  for (int n = ell; n <= nmax_; n += 2) ns.push_back(n);
  return ns;
}

double spin_spectrum_to_radial_cov(const SpinSpectrumBall& spec, int ell, double r1, double r2) {
  double sum = 0.0;
  for (int n : spec.n_values(ell)) {
    const double a = spec.at(ell, n);
    if (a == 0.0) continue;
    const ZernikeIndex idx(n, ell);
    sum += a * zernike_radial_scaled(idx, r1, spec.r0()) *
           zernike_radial_scaled(idx, r2, spec.r0());
  }
  return sum;
}

complex two_point_correlation(const SpinSpectrumBall& spec, const Vec3& x1, const Vec3& x2) {
  const double r1 = norm3(x1), r2 = norm3(x2);
  if (r1 == 0.0 || r2 == 0.0)
    throw std::domain_error("two_point_correlation: direction undefined at the origin");
  if (r1 > spec.r0() * (1 + 1e-12) || r2 > spec.r0() * (1 + 1e-12))
    throw std::domain_error("two_point_correlation: point outside the ball");
  double th1, ph1, th2, ph2;
  to_angles(x1, th1, ph1);
  to_angles(x2, th2, ph2);
  // g_i carries e_z to x_i/|x_i| with Euler angles (phi_i, theta_i, 0)
  const auto g1 = specfun::rotation_zyz({ph1, th1, 0.0});
  const auto g2 = specfun::rotation_zyz({ph2, th2, 0.0});
  const EulerAngles e = specfun::euler_from_rotation(specfun::mat_mul(specfun::transpose(g1), g2));

  const int s = spec.spin();
  const auto dtable = specfun::wigner_d_all(spec.lmax(), e.beta);
  complex sum(0.0, 0.0);
  for (int ell = s; ell <= spec.lmax(); ++ell) {
    const double c = spin_spectrum_to_radial_cov(spec, ell, r1, r2);
    if (c == 0.0) continue;
    // sY_{ell,-s}(beta,alpha) = sqrt((2l+1)/4pi) e^{-i s alpha} d^l_{-s,-s}(beta)
    const double amp = std::sqrt((2.0 * ell + 1.0) / kFourPi) * dtable[ell].at(-s, -s);
    sum += std::sqrt(2.0 * ell + 1.0) * c * amp *
           complex(std::cos(s * e.alpha), -std::sin(s * e.alpha));
  }
  sum *= 1.0 / (2.0 * std::sqrt(kPi));
  const complex phase(std::cos(s * e.gamma), -std::sin(s * e.gamma));
  return sum * phase;
}

complex brute_force_two_point(const SpinSpectrumBall& spec, const Vec3& x1, const Vec3& x2,
                              int lmax) {
  const double r1 = norm3(x1), r2 = norm3(x2);
  if (r1 == 0.0 || r2 == 0.0)
    throw std::domain_error("brute_force_two_point: direction undefined at the origin");
  double th1, ph1, th2, ph2;
  to_angles(x1, th1, ph1);
  to_angles(x2, th2, ph2);
  const int s = spec.spin();
  lmax = std::min(lmax, spec.lmax());
  const auto t1 = specfun::spin_harmonic_theta_table(s, lmax, th1);
  const auto t2 = specfun::spin_harmonic_theta_table(s, lmax, th2);
  complex sum(0.0, 0.0);
  for (int ell = s; ell <= lmax; ++ell) {
    const double c = spin_spectrum_to_radial_cov(spec, ell, r1, r2);
    if (c == 0.0) continue;
    const double norm = (2.0 * ell + 1.0) / kFourPi;
    complex inner(0.0, 0.0);
    for (int m = -ell; m <= ell; ++m) {
      const complex y1 = complex(std::cos(m * ph1), std::sin(m * ph1)) * t1[ell][m + ell];
      const complex y2 = complex(std::cos(m * ph2), std::sin(m * ph2)) * t2[ell][m + ell];
      inner += std::conj(y1) * y2;
    }
    sum += c * norm * inner;
  }
  return sum;
}

SpinSpectrumBall project_radial_covariance(
    const std::function<double(int, double, double)>& cov, int spin, double r0, int lmax,
    int nmax, int quad_points) {
  SpinSpectrumBall spec(spin, r0, lmax, nmax);
  const auto rule = specfun::gauss_legendre(quad_points, 0.0, r0);
  const int nq = quad_points;
  std::vector<double> kernel(static_cast<std::size_t>(nq) * nq);
  std::vector<double> basis(nq);
  for (int ell = spin; ell <= lmax; ++ell) {
    for (int i = 0; i < nq; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = cov(ell, rule.nodes[i], rule.nodes[j]);
        kernel[i * nq + j] = v;
        kernel[j * nq + i] = v;
      }
    for (int n : spec.n_values(ell)) {
      const ZernikeIndex idx(n, ell);
      for (int i = 0; i < nq; ++i)
        basis[i] = rule.weights[i] * rule.nodes[i] * rule.nodes[i] *
                   zernike_radial_scaled(idx, rule.nodes[i], r0);
      double a = 0.0;
      for (int i = 0; i < nq; ++i) {
        double row = 0.0;
        for (int j = 0; j < nq; ++j) row += kernel[i * nq + j] * basis[j];
        a += basis[i] * row;
      }
      spec.set(ell, n, std::max(0.0, a));
    }
  }
  return spec;
}

}  // namespace ballfield::spin_field
