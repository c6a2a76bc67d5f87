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

#ifndef BALLFIELD_SPIN_FIELD_HPP
#define BALLFIELD_SPIN_FIELD_HPP

#include <functional>
#include <vector>

#include "common.hpp"

namespace ballfield::spin_field {

/// (n, ell) index of a 3D Zernike radial polynomial; n >= ell with n - ell
/// even. Odd parity is rejected at construction.
struct ZernikeIndex {
  int n = 0;
  int ell = 0;

  ZernikeIndex(int n_, int ell_) : n(n_), ell(ell_) {
    if (ell < 0 || n < ell) throw std::domain_error("ZernikeIndex: requires n >= ell >= 0");
    if ((n - ell) % 2 != 0)
      throw std::domain_error("ZernikeIndex: n - ell must be even (R_nl vanishes otherwise)");
  }
};

/// R_nl(r) = sqrt(2n+3) r^ell P^(0,ell+1/2)_((n-ell)/2)(2r^2-1), orthonormal
/// with weight r^2 on [0,1].
double zernike_radial(const ZernikeIndex& idx, double r);

/// Alternating-binomial form of R_nl; an algebraically independent route
/// kept for cross-validation of the Jacobi form.
double zernike_radial_sum_form(const ZernikeIndex& idx, double r);

/// Rescaled basis on [0,r0]: R~_nl(r) = sqrt(2n+3)/r0^(3/2) (r/r0)^ell
/// P^(0,ell+1/2)(2r^2/r0^2-1), orthonormal with weight r^2 on [0,r0].
double zernike_radial_scaled(const ZernikeIndex& idx, double r, double r0);

/// Mercer spectrum of a spin-s random field in the ball of radius r0:
/// eigenvalues A_ell^(n) >= 0 against the scaled Zernike radial basis,
/// for ell = spin..lmax and n in {ell, ell+2, ...} up to nmax.
class SpinSpectrumBall {
 public:
  SpinSpectrumBall(int spin, double r0, int lmax, int nmax);

  int spin() const { return spin_; }
  double r0() const { return r0_; }
  int lmax() const { return lmax_; }
  int nmax() const { return nmax_; }

  void set(int ell, int n, double value);
  double at(int ell, int n) const;

  /// n values admissible for a given ell.
  std::vector<int> n_values(int ell) const;

 private:
  int spin_;
  double r0_;
  int lmax_;
  int nmax_;
  std::vector<std::vector<double>> a_;  // [ell][(n-ell)/2]

  void check_ell(int ell) const;
};

/// sC_ell(r1,r2) = Sum_n A_ell^(n) R~_nl(r1) R~_nl(r2).
double spin_spectrum_to_radial_cov(const SpinSpectrumBall& spec, int ell, double r1, double r2);

/// Two-point correlation <sT(x1), sT(x2)> by the spin addition theorem:
///   (1/2sqrt(pi)) Sum_ell sqrt(2ell+1) sC_ell(r1,r2) sY_{ell,-s}(beta,alpha) e^{-i s gamma},
/// with (alpha,beta,gamma) the Euler angles of g1^{-1} g2. Points must be
/// away from the origin.
complex two_point_correlation(const SpinSpectrumBall& spec, const Vec3& x1, const Vec3& x2);

/// Direct double sum Sum_{ell,m} sC_ell(r1,r2) conj(sY_{ell m}(x1)) sY_{ell m}(x2);
/// the oracle route for the addition-theorem evaluation.
complex brute_force_two_point(const SpinSpectrumBall& spec, const Vec3& x1, const Vec3& x2,
                              int lmax);

/// Project a radial covariance kernel (ell, r1, r2) -> sC_ell(r1,r2) onto the
/// scaled Zernike basis under the r^2 dr weight:
///   A_ell^(n) = Int Int r1^2 r2^2 C(ell,r1,r2) R~_nl(r1) R~_nl(r2) dr1 dr2.
/// Exact when R~ are the kernel's eigenfunctions; otherwise a diagonal
/// compression that drops the off-diagonal tensor structure (the radial
/// trace is preserved, the pointwise kernel only approximated). Tiny
/// negative eigenvalues from quadrature noise are clipped.
SpinSpectrumBall project_radial_covariance(
    const std::function<double(int, double, double)>& cov, int spin, double r0, int lmax,
    int nmax, int quad_points = 48);

}  // namespace ballfield::spin_field

#endif
