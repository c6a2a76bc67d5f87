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

#include "ballfield.h"

#include <cstring>
#include <fstream>
#include <string>

#include "ballfield/harmonics.hpp"
#include "ballfield/matern_sphere.hpp"
#include "ballfield/specfun.hpp"
#include "ballfield/rho_field.hpp"
#include "ballfield/sampler.hpp"
#include "ballfield/serialize.hpp"
#include "ballfield/spin_field.hpp"
#include "ballfield/validate.hpp"
#include "ballfield/wigner.hpp"

namespace {

namespace bf = ballfield;
namespace sf = ballfield::specfun;
namespace ms = ballfield::matern_sphere;
namespace spf = ballfield::spin_field;
namespace rf = ballfield::rho_field;
namespace smp = ballfield::sampler;

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return BF_OK;
  } catch (const bf::degenerate_parameter& e) {
    g_last_error = e.what();
    return BF_EDOMAIN;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return BF_EDOMAIN;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return BF_EOVERFLOW;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BF_EINVAL;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return BF_EIO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    const std::string w = e.what();
    return w.find("cannot open") != std::string::npos ? BF_EIO : BF_ERUNTIME;
  }
}

int require(bool ok, const char* msg) {
  if (ok) return BF_OK;
  g_last_error = msg;
  return BF_EINVAL;
}

bf::Vec3 to_vec3(const double* p) { return {p[0], p[1], p[2]}; }

ms::MaternParams params_of(double sigma2, double a, double nu) {
  return ms::MaternParams(sigma2, a, nu);
}

std::vector<bf::Vec3> to_points(const double* xyz, size_t n) {
  std::vector<bf::Vec3> pts(n);
  for (size_t i = 0; i < n; ++i) pts[i] = {xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]};
  return pts;
}

}  // namespace

struct bf_angular_spectrum {
  ms::AngularSpectrum spec;
};
struct bf_spin_spectrum {
  spf::SpinSpectrumBall spec;
};
struct bf_cheb_spectrum {
  rf::ChebyshevSpectrum spec;
};
struct bf_realization {
  smp::FieldRealization real;
};

extern "C" {

const char* bf_last_error(void) { return g_last_error.c_str(); }
const char* bf_version(void) { return "1.0.0"; }

/* ----------------------------------------------------------- special functions */

int bf_legendre_p(int ell, double x, double* out) {
  if (int rc = require(out, "bf_legendre_p: out is NULL")) return rc;
  return guarded([&] { *out = sf::legendre_p(ell, x); });
}

int bf_jacobi_p(int k, double alpha, double beta, double x, double* out) {
  if (int rc = require(out, "bf_jacobi_p: out is NULL")) return rc;
  return guarded([&] { *out = sf::jacobi_p(k, alpha, beta, x); });
}

int bf_chebyshev_u(int ell, double t, double* out) {
  if (int rc = require(out, "bf_chebyshev_u: out is NULL")) return rc;
  return guarded([&] { *out = sf::chebyshev_u(ell, t); });
}

int bf_bessel_j(double nu, double x, double* out) {
  if (int rc = require(out, "bf_bessel_j: out is NULL")) return rc;
  return guarded([&] { *out = sf::bessel_j(nu, x); });
}

int bf_bessel_i(double nu, double x, double* out) {
  if (int rc = require(out, "bf_bessel_i: out is NULL")) return rc;
  return guarded([&] { *out = sf::bessel_i(nu, x); });
}

int bf_bessel_k(double nu, double x, double* out) {
  if (int rc = require(out, "bf_bessel_k: out is NULL")) return rc;
  return guarded([&] { *out = sf::bessel_k(nu, x); });
}

int bf_hyp1f2(double a1, double b1, double b2, double z, double* out) {
  if (int rc = require(out, "bf_hyp1f2: out is NULL")) return rc;
  return guarded([&] { *out = sf::hyp1f2(a1, b1, b2, z); });
}

int bf_wigner_d(int ell, double beta, double* out) {
  if (int rc = require(out, "bf_wigner_d: out is NULL")) return rc;
  return guarded([&] {
    const sf::WignerD d = sf::wigner_d(ell, beta);
    const int dim = 2 * ell + 1;
    for (int m = -ell; m <= ell; ++m)
      for (int n = -ell; n <= ell; ++n) out[(m + ell) * dim + (n + ell)] = d.at(m, n);
  });
}

int bf_spin_harmonic(int s, int ell, int m, double theta, double phi, double* re, double* im) {
  if (int rc = require(re && im, "bf_spin_harmonic: output is NULL")) return rc;
  return guarded([&] {
    const bf::complex y = sf::spin_harmonic({s, ell, m}, theta, phi);
    *re = y.real();
    *im = y.imag();
  });
}

int bf_sphere3_harmonic(int L, int j, const double s[4], double* out) {
  if (int rc = require(out && s, "bf_sphere3_harmonic: pointer is NULL")) return rc;
  return guarded([&] { *out = sf::sphere3_harmonic(L, j, {s[0], s[1], s[2], s[3]}); });
}

/* ----------------------------------------------------------- Matern on spheres */

int bf_matern_covariance(double d, double sigma2, double a, double nu, double* out) {
  if (int rc = require(out, "bf_matern_covariance: out is NULL")) return rc;
  return guarded([&] { *out = ms::matern_covariance(d, params_of(sigma2, a, nu)); });
}

int bf_matern_density_3d(double lambda, double sigma2, double a, double nu, double* out) {
  if (int rc = require(out, "bf_matern_density_3d: out is NULL")) return rc;
  return guarded([&] { *out = ms::matern_density_3d(lambda, params_of(sigma2, a, nu)); });
}

int bf_angular_spectrum_matern(int ell, double r, double sigma2, double a, double nu,
                               double* out) {
  if (int rc = require(out, "bf_angular_spectrum_matern: out is NULL")) return rc;
  return guarded([&] { *out = ms::angular_spectrum_matern(ell, r, params_of(sigma2, a, nu)); });
}

int bf_angular_spectrum_numeric(int ell, double r1, double r2, double sigma2, double a,
                                double nu, double* out) {
  if (int rc = require(out, "bf_angular_spectrum_numeric: out is NULL")) return rc;
  return guarded([&] {
    *out = ms::angular_spectrum_numeric(ell, r1, r2,
                                        ms::matern_spectral_density(params_of(sigma2, a, nu)));
  });
}

int bf_matern_spectrum_halfnu(int ell, double r, double* out) {
  if (int rc = require(out, "bf_matern_spectrum_halfnu: out is NULL")) return rc;
  return guarded([&] { *out = ms::matern_spectrum_halfnu(ell, r); });
}

int bf_chordal_distance(double r, double gamma, double* out) {
  if (int rc = require(out, "bf_chordal_distance: out is NULL")) return rc;
  return guarded([&] { *out = ms::chordal_distance(r, gamma); });
}

int bf_angular_spectrum_build_matern(double sigma2, double a, double nu, double r, int lmax,
                                     bf_angular_spectrum** out) {
  if (int rc = require(out, "bf_angular_spectrum_build_matern: out is NULL")) return rc;
  return guarded([&] {
    *out = new bf_angular_spectrum{
        ms::matern_angular_spectrum(params_of(sigma2, a, nu), r, lmax)};
  });
}

int bf_angular_spectrum_lmax(const bf_angular_spectrum* spec, int* out) {
  if (int rc = require(spec && out, "bf_angular_spectrum_lmax: pointer is NULL")) return rc;
  *out = spec->spec.lmax;
  return BF_OK;
}

int bf_angular_spectrum_coeff(const bf_angular_spectrum* spec, int ell, double* out) {
  if (int rc = require(spec && out, "bf_angular_spectrum_coeff: pointer is NULL")) return rc;
  return guarded([&] { *out = spec->spec.at(ell); });
}

int bf_angular_spectrum_covariance(const bf_angular_spectrum* spec, double gamma, double* value,
                                   double* tail_estimate) {
  if (int rc = require(spec && value, "bf_angular_spectrum_covariance: pointer is NULL"))
    return rc;
  return guarded([&] {
    const auto r = ms::covariance_from_spectrum(spec->spec, gamma);
    *value = r.value;
    if (tail_estimate) *tail_estimate = r.tail_estimate;
  });
}

int bf_angular_spectrum_save_csv(const bf_angular_spectrum* spec, const char* path) {
  if (int rc = require(spec && path, "bf_angular_spectrum_save_csv: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::angular_spectrum_csv(spec->spec, path); });
}

int bf_angular_spectrum_save_json(const bf_angular_spectrum* spec, const char* path) {
  if (int rc = require(spec && path, "bf_angular_spectrum_save_json: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::angular_spectrum_json(spec->spec, path); });
}

int bf_angular_spectrum_load_json(const char* path, bf_angular_spectrum** out) {
  if (int rc = require(path && out, "bf_angular_spectrum_load_json: pointer is NULL")) return rc;
  return guarded([&] {
    *out = new bf_angular_spectrum{bf::serialize::angular_spectrum_from_json(path)};
  });
}

void bf_angular_spectrum_free(bf_angular_spectrum* spec) { delete spec; }

/* ------------------------------------------------------ spin fields in the ball */

int bf_zernike_radial(int n, int ell, double r, double* out) {
  if (int rc = require(out, "bf_zernike_radial: out is NULL")) return rc;
  return guarded([&] { *out = spf::zernike_radial({n, ell}, r); });
}

int bf_zernike_radial_scaled(int n, int ell, double r, double r0, double* out) {
  if (int rc = require(out, "bf_zernike_radial_scaled: out is NULL")) return rc;
  return guarded([&] { *out = spf::zernike_radial_scaled({n, ell}, r, r0); });
}

int bf_spin_spectrum_create(int spin, double r0, int lmax, int nmax, bf_spin_spectrum** out) {
  if (int rc = require(out, "bf_spin_spectrum_create: out is NULL")) return rc;
  return guarded([&] { *out = new bf_spin_spectrum{spf::SpinSpectrumBall(spin, r0, lmax, nmax)}; });
}

int bf_spin_spectrum_set(bf_spin_spectrum* spec, int ell, int n, double value) {
  if (int rc = require(spec, "bf_spin_spectrum_set: spec is NULL")) return rc;
  return guarded([&] { spec->spec.set(ell, n, value); });
}

int bf_spin_spectrum_get(const bf_spin_spectrum* spec, int ell, int n, double* out) {
  if (int rc = require(spec && out, "bf_spin_spectrum_get: pointer is NULL")) return rc;
  return guarded([&] { *out = spec->spec.at(ell, n); });
}

int bf_spin_spectrum_project_matern(double sigma2, double a, double nu, double r0, int lmax,
                                    int nmax, bf_spin_spectrum** out) {
  if (int rc = require(out, "bf_spin_spectrum_project_matern: out is NULL")) return rc;
  return guarded([&] {
    const ms::MaternParams p = params_of(sigma2, a, nu);
    const auto f = ms::matern_spectral_density(p);
    const auto cov = [&f](int ell, double r1, double r2) {
      return ms::angular_spectrum_numeric(ell, r1, r2, f);
    };
    *out = new bf_spin_spectrum{spf::project_radial_covariance(cov, 0, r0, lmax, nmax)};
  });
}

int bf_spin_spectrum_radial_cov(const bf_spin_spectrum* spec, int ell, double r1, double r2,
                                double* out) {
  if (int rc = require(spec && out, "bf_spin_spectrum_radial_cov: pointer is NULL")) return rc;
  return guarded([&] { *out = spf::spin_spectrum_to_radial_cov(spec->spec, ell, r1, r2); });
}

int bf_spin_two_point(const bf_spin_spectrum* spec, const double x1[3], const double x2[3],
                      double* re, double* im) {
  if (int rc = require(spec && x1 && x2 && re && im, "bf_spin_two_point: pointer is NULL"))
    return rc;
  return guarded([&] {
    const bf::complex v = spf::two_point_correlation(spec->spec, to_vec3(x1), to_vec3(x2));
    *re = v.real();
    *im = v.imag();
  });
}

int bf_spin_two_point_brute(const bf_spin_spectrum* spec, const double x1[3], const double x2[3],
                            int lmax, double* re, double* im) {
  if (int rc = require(spec && x1 && x2 && re && im, "bf_spin_two_point_brute: pointer is NULL"))
    return rc;
  return guarded([&] {
    const bf::complex v = spf::brute_force_two_point(spec->spec, to_vec3(x1), to_vec3(x2), lmax);
    *re = v.real();
    *im = v.imag();
  });
}

int bf_spin_spectrum_save_json(const bf_spin_spectrum* spec, const char* path) {
  if (int rc = require(spec && path, "bf_spin_spectrum_save_json: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::spin_spectrum_json(spec->spec, path); });
}

int bf_spin_spectrum_load_json(const char* path, bf_spin_spectrum** out) {
  if (int rc = require(path && out, "bf_spin_spectrum_load_json: pointer is NULL")) return rc;
  return guarded([&] { *out = new bf_spin_spectrum{bf::serialize::spin_spectrum_from_json(path)}; });
}

int bf_spin_spectrum_cov_csv(const bf_spin_spectrum* spec, const double* radii, size_t n_radii,
                             const char* path) {
  if (int rc = require(spec && radii && path, "bf_spin_spectrum_cov_csv: pointer is NULL"))
    return rc;
  return guarded([&] {
    bf::serialize::spin_radial_cov_csv(spec->spec, std::vector<double>(radii, radii + n_radii),
                                       path);
  });
}

void bf_spin_spectrum_free(bf_spin_spectrum* spec) { delete spec; }

/* ------------------------------------------------------- rho-stationary fields */

int bf_psi(const double x[3], double r0, double out[4]) {
  if (int rc = require(x && out, "bf_psi: pointer is NULL")) return rc;
  return guarded([&] {
    const bf::Vec4 s = rf::BallSphereMap(r0).psi(to_vec3(x));
    std::memcpy(out, s.data(), 4 * sizeof(double));
  });
}

int bf_psi_inv(const double s[4], double r0, double out[3]) {
  if (int rc = require(s && out, "bf_psi_inv: pointer is NULL")) return rc;
  return guarded([&] {
    const bf::Vec3 x = rf::BallSphereMap(r0).psi_inv({s[0], s[1], s[2], s[3]});
    std::memcpy(out, x.data(), 3 * sizeof(double));
  });
}

int bf_rho_distance(const double x[3], const double y[3], double r0, double C, double* out) {
  if (int rc = require(x && y && out, "bf_rho_distance: pointer is NULL")) return rc;
  return guarded([&] {
    *out = rf::rho_distance(to_vec3(x), to_vec3(y), rf::RhoMetricParams(r0, C));
  });
}

int bf_matern_density_4d(double lambda, double sigma2, double a, double nu, double* out) {
  if (int rc = require(out, "bf_matern_density_4d: out is NULL")) return rc;
  return guarded([&] { *out = rf::matern_density_4d(lambda, params_of(sigma2, a, nu)); });
}

int bf_b_ell_matern_closed(int ell, double sigma2, double a, double nu, double* out) {
  if (int rc = require(out, "bf_b_ell_matern_closed: out is NULL")) return rc;
  return guarded([&] { *out = rf::b_ell_matern_closed(ell, params_of(sigma2, a, nu)); });
}

int bf_b_ell_matern_numeric(int ell, double sigma2, double a, double nu, double* out) {
  if (int rc = require(out, "bf_b_ell_matern_numeric: out is NULL")) return rc;
  return guarded([&] {
    const ms::MaternParams p = params_of(sigma2, a, nu);
    *out = rf::b_ell_numeric_bessel(ell, [p](double lam) { return rf::matern_density_4d(lam, p); });
  });
}

int bf_matern_rho_covariance(const double x[3], const double y[3], double sigma2, double a,
                             double nu, double r0, double C, double* out) {
  if (int rc = require(x && y && out, "bf_matern_rho_covariance: pointer is NULL")) return rc;
  return guarded([&] {
    *out = rf::matern_rho_covariance(to_vec3(x), to_vec3(y), params_of(sigma2, a, nu),
                                     rf::RhoMetricParams(r0, C));
  });
}

int bf_rho_cross_route_constant(double sigma2, double a, double nu, int lfit, double* constant,
                                double* spread) {
  if (int rc = require(constant && spread, "bf_rho_cross_route_constant: pointer is NULL"))
    return rc;
  return guarded([&] {
    rf::cross_route_constant(params_of(sigma2, a, nu), lfit, *constant, *spread);
  });
}

int bf_cheb_spectrum_create(int k, int lmax, bf_cheb_spectrum** out) {
  if (int rc = require(out, "bf_cheb_spectrum_create: out is NULL")) return rc;
  return guarded([&] { *out = new bf_cheb_spectrum{rf::ChebyshevSpectrum(k, lmax)}; });
}

int bf_cheb_spectrum_set(bf_cheb_spectrum* spec, int ell, const double* b, size_t len) {
  if (int rc = require(spec && b, "bf_cheb_spectrum_set: pointer is NULL")) return rc;
  return guarded([&] {
    if (spec->spec.k() == 1 && len == 1)
      spec->spec.set(ell, b[0]);
    else
      spec->spec.set(ell, std::vector<double>(b, b + len));
  });
}

int bf_cheb_spectrum_get(const bf_cheb_spectrum* spec, int ell, double* b, size_t len) {
  if (int rc = require(spec && b, "bf_cheb_spectrum_get: pointer is NULL")) return rc;
  return guarded([&] {
    const auto& m = spec->spec.matrix_at(ell);
    if (len < m.size()) throw std::invalid_argument("bf_cheb_spectrum_get: buffer too small");
    std::memcpy(b, m.data(), m.size() * sizeof(double));
  });
}

int bf_cheb_spectrum_matern_projection(double sigma2, double a, double nu, double r0, double C,
                                       int lmax, bf_cheb_spectrum** out) {
  if (int rc = require(out, "bf_cheb_spectrum_matern_projection: out is NULL")) return rc;
  return guarded([&] {
    *out = new bf_cheb_spectrum{rf::matern_rho_spectrum(params_of(sigma2, a, nu),
                                                        rf::RhoMetricParams(r0, C), lmax)};
  });
}

int bf_cheb_spectrum_matern_closed(double sigma2, double a, double nu, int lmax,
                                  bf_cheb_spectrum** out) {
  if (int rc = require(out, "bf_cheb_spectrum_matern_closed: out is NULL")) return rc;
  return guarded([&] {
    *out = new bf_cheb_spectrum{rf::matern_chordal_spectrum_closed(params_of(sigma2, a, nu), lmax)};
  });
}

int bf_cheb_spectrum_covariance(const bf_cheb_spectrum* spec, const double x[3],
                                const double y[3], double r0, double C, double* value,
                                size_t len, double* tail_estimate) {
  if (int rc = require(spec && x && y && value, "bf_cheb_spectrum_covariance: pointer is NULL"))
    return rc;
  return guarded([&] {
    const auto r = rf::covariance_from_b(spec->spec, to_vec3(x), to_vec3(y),
                                         rf::RhoMetricParams(r0, C));
    if (len < r.value.size())
      throw std::invalid_argument("bf_cheb_spectrum_covariance: buffer too small");
    std::memcpy(value, r.value.data(), r.value.size() * sizeof(double));
    if (tail_estimate) *tail_estimate = r.tail_estimate;
  });
}

int bf_cheb_spectrum_save_csv(const bf_cheb_spectrum* spec, const char* path) {
  if (int rc = require(spec && path, "bf_cheb_spectrum_save_csv: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::cheb_spectrum_csv(spec->spec, path); });
}

int bf_cheb_spectrum_save_json(const bf_cheb_spectrum* spec, const char* path) {
  if (int rc = require(spec && path, "bf_cheb_spectrum_save_json: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::cheb_spectrum_json(spec->spec, path); });
}

int bf_cheb_spectrum_load_json(const char* path, bf_cheb_spectrum** out) {
  if (int rc = require(path && out, "bf_cheb_spectrum_load_json: pointer is NULL")) return rc;
  return guarded([&] { *out = new bf_cheb_spectrum{bf::serialize::cheb_spectrum_from_json(path)}; });
}

void bf_cheb_spectrum_free(bf_cheb_spectrum* spec) { delete spec; }

/* ------------------------------------------------------------------ simulation */

int bf_simulate_sphere(const bf_angular_spectrum* spec, uint64_t seed, int n_realizations,
                       const double* points_xyz, size_t n_points, bf_realization** out) {
  if (int rc = require(spec && points_xyz && out, "bf_simulate_sphere: pointer is NULL"))
    return rc;
  return guarded([&] {
    smp::SimulationConfig cfg;
    cfg.seed = seed;
    cfg.lmax = spec->spec.lmax;
    cfg.n_realizations = n_realizations;
    cfg.grid = to_points(points_xyz, n_points);
    *out = new bf_realization{smp::simulate_sphere_field(spec->spec, cfg)};
  });
}

int bf_simulate_sphere_grid(const bf_angular_spectrum* spec, uint64_t seed, int n_realizations,
                            int n_theta, int n_phi, bf_realization** out) {
  if (int rc = require(spec && out, "bf_simulate_sphere_grid: pointer is NULL")) return rc;
  return guarded([&] {
    const auto grid = smp::make_sphere_grid(n_theta, n_phi, spec->spec.r1);
    *out = new bf_realization{
        smp::simulate_sphere_field_grid(spec->spec, grid, seed, n_realizations)};
  });
}

int bf_simulate_ball_spin(const bf_spin_spectrum* spec, uint64_t seed, int n_realizations,
                          const double* points_xyz, size_t n_points, bf_realization** out) {
  if (int rc = require(spec && points_xyz && out, "bf_simulate_ball_spin: pointer is NULL"))
    return rc;
  return guarded([&] {
    smp::SimulationConfig cfg;
    cfg.seed = seed;
    cfg.lmax = spec->spec.lmax();
    cfg.nmax = spec->spec.nmax();
    cfg.n_realizations = n_realizations;
    cfg.grid = to_points(points_xyz, n_points);
    *out = new bf_realization{smp::simulate_ball_spin_field(spec->spec, cfg)};
  });
}

int bf_simulate_rho(const bf_cheb_spectrum* spec, double r0, uint64_t seed, int n_realizations,
                    const double* points_xyz, size_t n_points, bf_realization** out) {
  if (int rc = require(spec && points_xyz && out, "bf_simulate_rho: pointer is NULL")) return rc;
  return guarded([&] {
    smp::SimulationConfig cfg;
    cfg.seed = seed;
    cfg.lmax = spec->spec.lmax();
    cfg.n_realizations = n_realizations;
    cfg.grid = to_points(points_xyz, n_points);
    *out = new bf_realization{
        smp::simulate_rho_field(spec->spec, rf::BallSphereMap(r0), cfg)};
  });
}

int bf_realization_counts(const bf_realization* real, uint64_t* n_points, int* n_realizations,
                          int* is_complex) {
  if (int rc = require(real, "bf_realization_counts: real is NULL")) return rc;
  if (n_points) *n_points = real->real.points.size();
  if (n_realizations) *n_realizations = real->real.n_realizations;
  if (is_complex) *is_complex = real->real.is_complex ? 1 : 0;
  return BF_OK;
}

int bf_realization_value(const bf_realization* real, int realization, uint64_t point, double* re,
                         double* im) {
  if (int rc = require(real && re && im, "bf_realization_value: pointer is NULL")) return rc;
  return guarded([&] {
    if (realization < 0 || realization >= real->real.n_realizations ||
        point >= real->real.points.size())
      throw std::invalid_argument("bf_realization_value: index out of range");
    const bf::complex v = real->real.value(realization, point);
    *re = v.real();
    *im = v.imag();
  });
}

int bf_realization_save_csv(const bf_realization* real, const char* path) {
  if (int rc = require(real && path, "bf_realization_save_csv: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::realization_csv(real->real, path); });
}

int bf_realization_save_binary(const bf_realization* real, const char* path) {
  if (int rc = require(real && path, "bf_realization_save_binary: pointer is NULL")) return rc;
  return guarded([&] { bf::serialize::realization_binary(real->real, path); });
}

int bf_realization_load_binary(const char* path, bf_realization** out) {
  if (int rc = require(path && out, "bf_realization_load_binary: pointer is NULL")) return rc;
  return guarded([&] { *out = new bf_realization{bf::serialize::realization_from_binary(path)}; });
}

int bf_realization_estimate_spectrum(const bf_realization* real, int lmax, double* c_out,
                                     double* se_out) {
  if (int rc = require(real && c_out && se_out,
                       "bf_realization_estimate_spectrum: pointer is NULL"))
    return rc;
  return guarded([&] {
    const auto est = smp::estimate_angular_spectrum(real->real, lmax);
    std::memcpy(c_out, est.c.data(), est.c.size() * sizeof(double));
    std::memcpy(se_out, est.se.data(), est.se.size() * sizeof(double));
  });
}

void bf_realization_free(bf_realization* real) { delete real; }

/* ------------------------------------------------------------------ validation */

int bf_validate_run(const char* suite, const char* report_path, int* n_failed) {
  if (int rc = require(suite && n_failed, "bf_validate_run: pointer is NULL")) return rc;
  if (!bf::validate::known_suite(suite)) {
    g_last_error = std::string("unknown validation suite: ") + suite;
    return BF_EINVAL;
  }
  return guarded([&] {
    const auto results = bf::validate::run_suite(suite);
    *n_failed = 0;
    for (const auto& r : results)
      if (!r.passed) ++*n_failed;
    if (report_path) {
      std::ofstream out(report_path);
      if (!out) throw std::runtime_error(std::string("cannot open for writing: ") + report_path);
      out << bf::validate::report_json(results) << '\n';
    }
  });
}

}  // extern "C"
