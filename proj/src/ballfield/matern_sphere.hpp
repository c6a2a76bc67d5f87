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

#ifndef BALLFIELD_MATERN_SPHERE_HPP
#define BALLFIELD_MATERN_SPHERE_HPP

#include <functional>
#include <string>
#include <vector>

#include "common.hpp"

namespace ballfield::matern_sphere {

/// Matern family parameters: variance sigma^2, inverse scale a, smoothness nu.
struct MaternParams {
  double sigma2 = 1.0;
  double a = 1.0;
  double nu = 0.5;

  MaternParams(double sigma2_, double a_, double nu_) : sigma2(sigma2_), a(a_), nu(nu_) {
    if (sigma2 <= 0.0 || a <= 0.0 || nu <= 0.0)
      throw std::domain_error("MaternParams: all parameters must be strictly positive");
  }
};

/// Isotropic 3-d spectral density f(lambda) >= 0 with its total mass
/// sigma^2 = 4 pi Int lambda^2 f(lambda) dlambda.
struct SpectralDensity3D {
  std::function<double(double)> eval;
  double total_mass = 0.0;
};

/// B(d) = sigma^2 2^{1-nu}/Gamma(nu) (a d)^nu K_nu(a d); B(0) = sigma^2.
double matern_covariance(double d, const MaternParams& p);

/// f(lambda) = sigma^2 Gamma(nu+3/2) a^{2nu} / (pi^{3/2} Gamma(nu) (a^2+lambda^2)^{nu+3/2}).
double matern_density_3d(double lambda, const MaternParams& p);

/// Density object for the Matern family (mass is sigma^2 analytically).
SpectralDensity3D matern_spectral_density(const MaternParams& p);

/// Density object from a user callback; the mass is integrated numerically.
SpectralDensity3D spectral_density_from_callback(std::function<double(double)> f);

/// Angular cross-spectrum by quadrature,
///   C_ell(r1,r2) = 16 pi^2 Int j_ell(lambda r1) j_ell(lambda r2) lambda^2 f(lambda) dlambda,
/// normalized so that (1/4pi) Sum (2ell+1) C_ell(r,r) equals the field variance.
double angular_spectrum_numeric(int ell, double r1, double r2, const SpectralDensity3D& f);

/// Matern angular spectrum in closed form through 1F2; when ell - nu sits
/// within 1e-6 of an integer the gamma factors degenerate and the value is
/// taken from the quadrature route instead.
double angular_spectrum_matern(int ell, double r, const MaternParams& p);

/// Bessel I/K closed form specific to sigma^2 = 1, a = 10, nu = 1/2.
double matern_spectrum_halfnu(int ell, double r);

/// Per-degree coefficients C_ell(r1,r2) for one radius pair.
struct AngularSpectrum {
  int spin = 0;
  double r1 = 1.0;
  double r2 = 1.0;
  int lmax = 0;
  std::string model_tag;
  std::vector<double> coeffs;  // index ell = 0..lmax

  double at(int ell) const;
  void validate() const;
};

/// Build the Matern angular spectrum at radius r up to lmax; lmax < 0 picks
/// the truncation adaptively: stop once (2L+1) C_L /(4 pi sigma^2) < 1e-8.
AngularSpectrum matern_angular_spectrum(const MaternParams& p, double r, int lmax = -1);

/// Cross-radius variant (quadrature route).
AngularSpectrum matern_angular_spectrum_cross(const MaternParams& p, double r1, double r2,
                                              int lmax);

struct CovarianceResult {
  double value = 0.0;
  double tail_estimate = 0.0;      // geometric extrapolation of the dropped terms
  bool tail_exceeds_tolerance = false;
};

/// Truncated Legendre reconstruction
///   (1/4pi) Sum_(ell<=lmax) (2ell+1) C_ell P_ell(cos gamma),
/// with a tail estimate; flags when the tail exceeds requested_tol.
CovarianceResult covariance_from_spectrum(const AngularSpectrum& spec, double gamma,
                                          double requested_tol = 1e-6);

/// Chordal distance 2 r sin(gamma/2) between two points on a radius-r sphere.
double chordal_distance(double r, double gamma);

}  // namespace ballfield::matern_sphere

#endif
