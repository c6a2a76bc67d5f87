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

#ifndef BALLFIELD_SAMPLER_HPP
#define BALLFIELD_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "matern_sphere.hpp"
#include "rho_field.hpp"
#include "spin_field.hpp"

namespace ballfield::sampler {

struct SimulationConfig {
  std::uint64_t seed = 0;
  int lmax = 0;
  int nmax = 0;  // ball spin fields only
  std::vector<Vec3> grid;
  int n_realizations = 1;
};

/// Gauss-Legendre x uniform sphere grid; supports exact harmonic quadrature
/// up to the degree its node counts allow.
struct SphereGridInfo {
  int n_theta = 0;
  int n_phi = 0;
  double r = 1.0;
  std::vector<double> theta;        // GL nodes in colatitude
  std::vector<double> theta_weight; // GL weights in cos(theta)
};

/// Simulated field values on a grid: realization-major, one complex value
/// per (realization, point). s = 0 and rho-model values are real (imaginary
/// parts vanish by the coefficient conjugation constraint).
struct FieldRealization {
  std::vector<Vec3> points;
  std::vector<complex> values;  // size = n_realizations * points.size()
  int n_realizations = 0;
  std::uint64_t seed = 0;
  std::string model_tag;
  bool is_complex = false;
  std::optional<SphereGridInfo> sphere_grid;

  complex value(int realization, std::size_t point) const {
    return values[static_cast<std::size_t>(realization) * points.size() + point];
  }
};

SphereGridInfo make_sphere_grid(int n_theta, int n_phi, double r);
std::vector<Vec3> sphere_grid_points(const SphereGridInfo& g);

/// Isotropic scalar field on the sphere of radius spec.r1 from C_ell:
/// a_{l m} complex Gaussian with variance C_ell and the reality constraint
/// a_{l,-m} = (-1)^m conj(a_{l m}). Grid entries are directions.
FieldRealization simulate_sphere_field(const matern_sphere::AngularSpectrum& spec,
                                       const SimulationConfig& cfg);

/// Same model evaluated on a structured grid (enables spectrum estimation).
FieldRealization simulate_sphere_field_grid(const matern_sphere::AngularSpectrum& spec,
                                            const SphereGridInfo& grid, std::uint64_t seed,
                                            int n_realizations);

/// Spin-s field in the ball from the Mercer spectrum: the triple series over
/// (ell, n, m) with unit Gaussians scaled by sqrt(A_ell^(n)) R~_nl(r) sY_lm.
FieldRealization simulate_ball_spin_field(const spin_field::SpinSpectrumBall& spec,
                                          const SimulationConfig& cfg);

/// rho-stationary scalar field: T(x) = Sum a_{L j} S_{L j}(psi(x)) with
/// Var a_{L j} = b_L.
FieldRealization simulate_rho_field(const rho_field::ChebyshevSpectrum& spec,
                                    const rho_field::BallSphereMap& map,
                                    const SimulationConfig& cfg);

struct SpectrumEstimate {
  std::vector<double> c;   // per ell
  std::vector<double> se;  // standard error across realizations
};

/// Quadrature projection a_{l m} = Sum w T conj(Y_lm) on the structured grid,
/// then C^_ell = Sum_m |a_lm|^2/(2l+1) averaged over realizations. Requires
/// n_theta, n_phi >= 2 lmax + 1; the error message names the counts needed.
SpectrumEstimate estimate_angular_spectrum(const FieldRealization& real, int lmax);

}  // namespace ballfield::sampler

#endif
