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

#ifndef BALLFIELD_RHO_FIELD_HPP
#define BALLFIELD_RHO_FIELD_HPP

#include <functional>
#include <vector>

#include "common.hpp"
#include "matern_sphere.hpp"

namespace ballfield::rho_field {

using matern_sphere::MaternParams;

/// Isometry psi between the open ball (componentwise |x_i| < r0, which
/// contains the Euclidean ball) and the unit S^3 minus its north pole:
/// stereographic projection composed with the componentwise arctan map.
struct BallSphereMap {
  double r0 = 1.0;

  explicit BallSphereMap(double r0_) : r0(r0_) {
    if (r0 <= 0.0) throw std::domain_error("BallSphereMap: r0 must be positive");
  }

  Vec4 psi(const Vec3& x) const;
  Vec3 psi_inv(const Vec4& s) const;
};

/// Scale constant of the induced distance rho = C * (S^3 geodesic angle).
struct RhoMetricParams {
  double r0 = 1.0;
  double C = 1.0;

  RhoMetricParams(double r0_, double C_ = 1.0) : r0(r0_), C(C_) {
    if (r0 <= 0.0 || C <= 0.0) throw std::domain_error("RhoMetricParams: values must be positive");
  }
};

/// rho(x,y) = C arccos( (4 x~.y~ + (1-|x~|^2)(1-|y~|^2)) / ((1+|x~|^2)(1+|y~|^2)) )
/// with x~_i = tan(pi x_i / 2 r0).
double rho_distance(const Vec3& x, const Vec3& y, const RhoMetricParams& params);

/// Chebyshev spectrum b_ell of an isotropic covariance on S^3; scalar
/// entries (k = 1) or symmetric nonnegative-definite k x k matrices stored
/// row-major.
class ChebyshevSpectrum {
 public:
  ChebyshevSpectrum(int k, int lmax);

  int k() const { return k_; }
  int lmax() const { return lmax_; }

  void set(int ell, double b);                            // k = 1
  void set(int ell, const std::vector<double>& b);        // k x k row-major
  double at(int ell) const;                               // k = 1
  const std::vector<double>& matrix_at(int ell) const;    // k x k

  /// Symmetry exact; min eigenvalue >= -1e-10 tolerated (quadrature noise).
  void validate() const;

 private:
  int k_;
  int lmax_;
  std::vector<std::vector<double>> b_;
};

/// 4-d Matern spectral density
/// f(lambda) = sigma^2 nu (nu+1) a^{2 nu} / (a^2 + lambda^2)^{nu+2}.
double matern_density_4d(double lambda, const MaternParams& p);

/// b_ell = (2 pi)^4 Int lambda J_{ell+1}^2(lambda) f(lambda) dlambda.
double b_ell_numeric_bessel(int ell, const std::function<double(double)>& f4);

/// Same coefficient for the Matern density by the two-term 1F2 closed form;
/// ell - nu at an integer (every ell for integer nu) dispatches to the
/// quadrature route, which is the limit value.
double b_ell_matern_closed(int ell, const MaternParams& p);

/// Chebyshev projection of a covariance B given as a function of the S^3
/// chordal argument 2 sin(gamma/2):
///   b_ell = omega_3/(ell+1) Int_{-1}^{1} B(2 sin(gamma/2)) U_ell(t) sqrt(1-t^2) dt,
/// under t = cos gamma. Mutually inverse with covariance_from_b.
double b_ell_from_covariance(int ell, const std::function<double(double)>& b_chordal,
                             int quad_points = -1);

/// All coefficients b_0..b_lmax in one pass over a shared node set; the
/// per-node U_ell recurrence makes large truncations cheap.
std::vector<double> b_ell_from_covariance_all(int lmax,
                                              const std::function<double(double)>& b_chordal,
                                              int quad_points = -1);

struct RhoCovarianceResult {
  std::vector<double> value;  // k x k row-major; [0] for scalars
  double tail_estimate = 0.0;
  bool tail_exceeds_tolerance = false;
};

/// B(rho(x,y)) = (1/omega_4) Sum (ell+1) U_ell(cos(rho/C)) b_ell.
RhoCovarianceResult covariance_from_b(const ChebyshevSpectrum& spec, const Vec3& x, const Vec3& y,
                                      const RhoMetricParams& params, double requested_tol = 1e-6);

/// Scalar convenience for k = 1.
double covariance_from_b_scalar(const ChebyshevSpectrum& spec, const Vec3& x, const Vec3& y,
                                const RhoMetricParams& params);

/// The rho-stationary Matern covariance (direct evaluation).
double matern_rho_covariance(const Vec3& x, const Vec3& y, const MaternParams& p,
                             const RhoMetricParams& params);

/// Spectrum of the rho-stationary Matern model by projection (k = 1):
/// the S^3 kernel of rho = C*gamma is B(gamma) = Matern(a C gamma), supplied
/// to the projection as a function of the chordal argument.
ChebyshevSpectrum matern_rho_spectrum(const MaternParams& p, const RhoMetricParams& params,
                                      int lmax);

/// Spectrum assembled from the closed-form b_ell route; it carries the 4-d
/// Fourier normalization, a single constant above the projection route,
/// which cross_route_constant reports.
ChebyshevSpectrum matern_chordal_spectrum_closed(const MaternParams& p, int lmax);

/// Fitted ratio b_closed / b_projection over ell <= lfit for the Matern
/// chordal kernel, with the max relative spread across ell.
void cross_route_constant(const MaternParams& p, int lfit, double& constant, double& spread);

}  // namespace ballfield::rho_field

#endif
