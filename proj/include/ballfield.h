/*
 * Copyright 2026 ballfield developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of the ballfield library: spectral theory of scalar, spin and
 * rho-stationary random fields in the 3-ball.
 *
 * Every function returns a status code (BF_OK on success) and reports
 * results through out-parameters. On failure bf_last_error() describes the
 * problem for the calling thread. Objects behind opaque handles are
 * immutable once built (except the explicit *_set calls) and may be shared
 * across threads.
 */

#ifndef BALLFIELD_H
#define BALLFIELD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  BF_OK = 0,
  BF_EDOMAIN = 1,   /* argument outside the mathematical domain */
  BF_EINVAL = 2,    /* malformed request (sizes, names, state) */
  BF_ERUNTIME = 3,  /* numerical failure (non-convergence, ...) */
  BF_EIO = 4,       /* file could not be read or written */
  BF_EOVERFLOW = 5  /* value not representable */
};

const char* bf_last_error(void);
const char* bf_version(void);

/* ------------------------------------------------------------ special functions */

int bf_legendre_p(int ell, double x, double* out);
int bf_jacobi_p(int k, double alpha, double beta, double x, double* out);
int bf_chebyshev_u(int ell, double t, double* out);
int bf_bessel_j(double nu, double x, double* out);
int bf_bessel_i(double nu, double x, double* out);
int bf_bessel_k(double nu, double x, double* out);
int bf_hyp1f2(double a1, double b1, double b2, double z, double* out);
/* d^ell_{m,n}(beta), row-major (2 ell + 1)^2 block, m,n = -ell..ell */
int bf_wigner_d(int ell, double beta, double* out);
int bf_spin_harmonic(int s, int ell, int m, double theta, double phi, double* re, double* im);
/* degree-L real hyperspherical harmonic, j = 1..(L+1)^2, s on the unit S^3 */
int bf_sphere3_harmonic(int L, int j, const double s[4], double* out);

/* ------------------------------------------------------------ Matern on spheres */

int bf_matern_covariance(double d, double sigma2, double a, double nu, double* out);
int bf_matern_density_3d(double lambda, double sigma2, double a, double nu, double* out);
int bf_angular_spectrum_matern(int ell, double r, double sigma2, double a, double nu,
                               double* out);
int bf_angular_spectrum_numeric(int ell, double r1, double r2, double sigma2, double a,
                                double nu, double* out);
int bf_matern_spectrum_halfnu(int ell, double r, double* out);
int bf_chordal_distance(double r, double gamma, double* out);

typedef struct bf_angular_spectrum bf_angular_spectrum;

/* lmax < 0 selects the truncation adaptively */
int bf_angular_spectrum_build_matern(double sigma2, double a, double nu, double r, int lmax,
                                     bf_angular_spectrum** out);
int bf_angular_spectrum_lmax(const bf_angular_spectrum* spec, int* out);
int bf_angular_spectrum_coeff(const bf_angular_spectrum* spec, int ell, double* out);
/* truncated Legendre reconstruction with a tail estimate */
int bf_angular_spectrum_covariance(const bf_angular_spectrum* spec, double gamma, double* value,
                                   double* tail_estimate);
int bf_angular_spectrum_save_csv(const bf_angular_spectrum* spec, const char* path);
int bf_angular_spectrum_save_json(const bf_angular_spectrum* spec, const char* path);
int bf_angular_spectrum_load_json(const char* path, bf_angular_spectrum** out);
void bf_angular_spectrum_free(bf_angular_spectrum* spec);

/* ------------------------------------------------------- spin fields in the ball */

int bf_zernike_radial(int n, int ell, double r, double* out);
int bf_zernike_radial_scaled(int n, int ell, double r, double r0, double* out);

typedef struct bf_spin_spectrum bf_spin_spectrum;

int bf_spin_spectrum_create(int spin, double r0, int lmax, int nmax, bf_spin_spectrum** out);
int bf_spin_spectrum_set(bf_spin_spectrum* spec, int ell, int n, double value);
int bf_spin_spectrum_get(const bf_spin_spectrum* spec, int ell, int n, double* out);
/* spin-0 spectrum whose radial covariances reproduce the Matern C_ell(r1,r2) */
int bf_spin_spectrum_project_matern(double sigma2, double a, double nu, double r0, int lmax,
                                    int nmax, bf_spin_spectrum** out);
int bf_spin_spectrum_radial_cov(const bf_spin_spectrum* spec, int ell, double r1, double r2,
                                double* out);
int bf_spin_two_point(const bf_spin_spectrum* spec, const double x1[3], const double x2[3],
                      double* re, double* im);
int bf_spin_two_point_brute(const bf_spin_spectrum* spec, const double x1[3], const double x2[3],
                            int lmax, double* re, double* im);
int bf_spin_spectrum_save_json(const bf_spin_spectrum* spec, const char* path);
int bf_spin_spectrum_load_json(const char* path, bf_spin_spectrum** out);
int bf_spin_spectrum_cov_csv(const bf_spin_spectrum* spec, const double* radii, size_t n_radii,
                             const char* path);
void bf_spin_spectrum_free(bf_spin_spectrum* spec);

/* ------------------------------------------------------- rho-stationary fields */

int bf_psi(const double x[3], double r0, double out[4]);
int bf_psi_inv(const double s[4], double r0, double out[3]);
int bf_rho_distance(const double x[3], const double y[3], double r0, double C, double* out);
int bf_matern_density_4d(double lambda, double sigma2, double a, double nu, double* out);
int bf_b_ell_matern_closed(int ell, double sigma2, double a, double nu, double* out);
int bf_b_ell_matern_numeric(int ell, double sigma2, double a, double nu, double* out);
int bf_matern_rho_covariance(const double x[3], const double y[3], double sigma2, double a,
                             double nu, double r0, double C, double* out);
/* fitted constant between the closed-form and projection b_ell routes */
int bf_rho_cross_route_constant(double sigma2, double a, double nu, int lfit, double* constant,
                                double* spread);

typedef struct bf_cheb_spectrum bf_cheb_spectrum;

int bf_cheb_spectrum_create(int k, int lmax, bf_cheb_spectrum** out);
int bf_cheb_spectrum_set(bf_cheb_spectrum* spec, int ell, const double* b, size_t len);
int bf_cheb_spectrum_get(const bf_cheb_spectrum* spec, int ell, double* b, size_t len);
/* spectrum of the rho-stationary Matern model by Chebyshev projection */
int bf_cheb_spectrum_matern_projection(double sigma2, double a, double nu, double r0, double C,
                                       int lmax, bf_cheb_spectrum** out);
/* closed-form b_ell route (4-d Fourier normalization; a single constant
 * above the projection route, see bf_rho_cross_route_constant) */
int bf_cheb_spectrum_matern_closed(double sigma2, double a, double nu, int lmax,
                                  bf_cheb_spectrum** out);
int bf_cheb_spectrum_covariance(const bf_cheb_spectrum* spec, const double x[3],
                                const double y[3], double r0, double C, double* value,
                                size_t len, double* tail_estimate);
int bf_cheb_spectrum_save_csv(const bf_cheb_spectrum* spec, const char* path);
int bf_cheb_spectrum_save_json(const bf_cheb_spectrum* spec, const char* path);
int bf_cheb_spectrum_load_json(const char* path, bf_cheb_spectrum** out);
void bf_cheb_spectrum_free(bf_cheb_spectrum* spec);

/* ------------------------------------------------------------------ simulation */

typedef struct bf_realization bf_realization;

int bf_simulate_sphere(const bf_angular_spectrum* spec, uint64_t seed, int n_realizations,
                       const double* points_xyz, size_t n_points, bf_realization** out);
int bf_simulate_sphere_grid(const bf_angular_spectrum* spec, uint64_t seed, int n_realizations,
                            int n_theta, int n_phi, bf_realization** out);
int bf_simulate_ball_spin(const bf_spin_spectrum* spec, uint64_t seed, int n_realizations,
                          const double* points_xyz, size_t n_points, bf_realization** out);
int bf_simulate_rho(const bf_cheb_spectrum* spec, double r0, uint64_t seed, int n_realizations,
                    const double* points_xyz, size_t n_points, bf_realization** out);

int bf_realization_counts(const bf_realization* real, uint64_t* n_points, int* n_realizations,
                          int* is_complex);
int bf_realization_value(const bf_realization* real, int realization, uint64_t point, double* re,
                         double* im);
int bf_realization_save_csv(const bf_realization* real, const char* path);
int bf_realization_save_binary(const bf_realization* real, const char* path);
int bf_realization_load_binary(const char* path, bf_realization** out);
/* c_out and se_out must hold lmax+1 doubles; needs a structured sphere grid */
int bf_realization_estimate_spectrum(const bf_realization* real, int lmax, double* c_out,
                                     double* se_out);
void bf_realization_free(bf_realization* real);

/* ------------------------------------------------------------------ validation */

/* suite: specfun | matern | spin | rho | montecarlo | all. Writes the JSON
 * report to report_path when non-NULL; *n_failed counts failing checks. */
int bf_validate_run(const char* suite, const char* report_path, int* n_failed);

#ifdef __cplusplus
}
#endif

#endif /* BALLFIELD_H */
