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

#include "sampler.hpp"

#include <cmath>
#include <sstream>

#include "harmonics.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "rng.hpp"
#include "specfun.hpp"

namespace ballfield::sampler {

namespace {

constexpr std::uint32_t kTagSphere = 1;
constexpr std::uint32_t kTagBallSpin = 2;
constexpr std::uint32_t kTagRho = 3;

void check_config(const SimulationConfig& cfg, int spin) {
  if (cfg.grid.empty()) throw std::invalid_argument("SimulationConfig: grid must be non-empty");
  if (cfg.n_realizations < 1)
    throw std::invalid_argument("SimulationConfig: need at least one realization");
  if (cfg.lmax < spin)
    throw std::invalid_argument("SimulationConfig: lmax must be >= the model spin");
}

// a_{l m} for a real scalar field: complex Gaussian with variance var and
// a_{l,-m} = (-1)^m conj(a_{l m}).
complex draw_coeff_real_field(std::uint64_t seed, std::uint32_t tag, int ell, int m, int n,
                              std::uint32_t t, double var) {
  double z0, z1;
  rng::normal_pair(seed, rng::mode_stream(tag, ell, std::abs(m) + ell, n), t, 0, z0, z1);
  const double sd = std::sqrt(var);
  if (m == 0) return complex(sd * z0, 0.0);
  complex a(sd * M_SQRT1_2 * z0, sd * M_SQRT1_2 * z1);
  if (m < 0) {
    a = std::conj(a);
    if (std::abs(m) % 2 != 0) a = -a;
  }
  return a;
}

// e^{i m phi} for m = -lmax..lmax, index m + lmax
std::vector<complex> phase_row(double phi, int lmax) {
  std::vector<complex> row(2 * lmax + 1);
  const complex step(std::cos(phi), std::sin(phi));
  row[lmax] = complex(1.0, 0.0);
  for (int m = 1; m <= lmax; ++m) {
    row[lmax + m] = row[lmax + m - 1] * step;
    row[lmax - m] = std::conj(row[lmax + m]);
  }
  return row;
}

}  // namespace

SphereGridInfo make_sphere_grid(int n_theta, int n_phi, double r) {
  if (n_theta < 1 || n_phi < 1)
    throw std::invalid_argument("make_sphere_grid: node counts must be positive");
  if (r <= 0.0) throw std::invalid_argument("make_sphere_grid: radius must be positive");
  SphereGridInfo g;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  g.r = r;
  const auto rule = specfun::gauss_legendre(n_theta, -1.0, 1.0);
  g.theta.resize(n_theta);
  g.theta_weight.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    g.theta[i] = std::acos(rule.nodes[n_theta - 1 - i]);  // ascending colatitude
    g.theta_weight[i] = rule.weights[n_theta - 1 - i];
  }
  return g;
}

std::vector<Vec3> sphere_grid_points(const SphereGridInfo& g) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(g.n_theta) * g.n_phi);
  for (int i = 0; i < g.n_theta; ++i) {
    const double st = std::sin(g.theta[i]), ct = std::cos(g.theta[i]);
    for (int j = 0; j < g.n_phi; ++j) {
      const double phi = kTwoPi * j / g.n_phi;
      pts.push_back({g.r * st * std::cos(phi), g.r * st * std::sin(phi), g.r * ct});
    }
  }
  return pts;
}

namespace {

FieldRealization simulate_sphere_impl(const matern_sphere::AngularSpectrum& spec,
                                      const std::vector<Vec3>& pts, std::uint64_t seed,
                                      int n_realizations, int lmax) {
  if (spec.spin != 0)
    throw std::invalid_argument("simulate_sphere_field: spectrum must have spin 0");
  spec.validate();
  for (double c : spec.coeffs)
    if (c < 0.0) throw std::invalid_argument("simulate_sphere_field: negative C_ell");
  lmax = std::min(lmax, spec.lmax);

  FieldRealization out;
  out.points = pts;
  out.n_realizations = n_realizations;
  out.seed = seed;
  out.model_tag = "sphere:" + spec.model_tag;
  out.is_complex = false;
  out.values.assign(pts.size() * n_realizations, complex(0.0, 0.0));

  // per-point tables: norm * d^l_{m,0}(theta) and e^{i m phi}
  const std::size_t np = pts.size();
  std::vector<std::vector<std::vector<double>>> dtab(np);
  std::vector<std::vector<complex>> phase(np);
  parallel_for(np, [&](std::size_t i) {
    double th, ph;
    to_angles(pts[i], th, ph);
    dtab[i] = specfun::spin_harmonic_theta_table(0, lmax, th);
    for (int ell = 0; ell <= lmax; ++ell) {
      const double norm = std::sqrt((2.0 * ell + 1.0) / kFourPi);
      for (auto& v : dtab[i][ell]) v *= norm;
    }
    phase[i] = phase_row(ph, lmax);
  });

  parallel_for(n_realizations, [&](std::size_t t) {
    // coefficients once per realization
    std::vector<complex> a((lmax + 1) * (lmax + 1));
    int idx = 0;
    for (int ell = 0; ell <= lmax; ++ell)
      for (int m = -ell; m <= ell; ++m, ++idx)
        a[idx] = draw_coeff_real_field(seed, kTagSphere, ell, m, 0,
                                       static_cast<std::uint32_t>(t), spec.at(ell));
    for (std::size_t i = 0; i < np; ++i) {
      complex sum(0.0, 0.0);
      idx = 0;
      for (int ell = 0; ell <= lmax; ++ell)
        for (int m = -ell; m <= ell; ++m, ++idx)
          sum += a[idx] * dtab[i][ell][m + ell] * phase[i][m + lmax];
      out.values[t * np + i] = sum;
    }
  });
  return out;
}

}  // namespace

FieldRealization simulate_sphere_field(const matern_sphere::AngularSpectrum& spec,
                                       const SimulationConfig& cfg) {
  check_config(cfg, 0);
  return simulate_sphere_impl(spec, cfg.grid, cfg.seed, cfg.n_realizations,
                              cfg.lmax > 0 ? cfg.lmax : spec.lmax);
}

FieldRealization simulate_sphere_field_grid(const matern_sphere::AngularSpectrum& spec,
                                            const SphereGridInfo& grid, std::uint64_t seed,
                                            int n_realizations) {
  FieldRealization out =
      simulate_sphere_impl(spec, sphere_grid_points(grid), seed, n_realizations, spec.lmax);
  out.sphere_grid = grid;
  return out;
}

FieldRealization simulate_ball_spin_field(const spin_field::SpinSpectrumBall& spec,
                                          const SimulationConfig& cfg) {
  const int s = spec.spin();
  check_config(cfg, s);
  const int lmax = std::min(cfg.lmax > 0 ? cfg.lmax : spec.lmax(), spec.lmax());
  const int nmax = std::min(cfg.nmax > 0 ? cfg.nmax : spec.nmax(), spec.nmax());

  FieldRealization out;
  out.points = cfg.grid;
  out.n_realizations = cfg.n_realizations;
  out.seed = cfg.seed;
  out.model_tag = "ball-spin";
  out.is_complex = (s != 0);
  const std::size_t np = cfg.grid.size();
  out.values.assign(np * cfg.n_realizations, complex(0.0, 0.0));

  // mode list (ell, n, m) with the frame factor sqrt(A) R~_nl(r) cached per point
  struct Mode {
    int ell, n, m;
    double sqrt_a;
  };
  std::vector<Mode> modes;
  for (int ell = s; ell <= lmax; ++ell)
    for (int n = ell; n <= nmax; n += 2) {
      const double a = spec.at(ell, n);
      if (a == 0.0) continue;
      for (int m = -ell; m <= ell; ++m) modes.push_back({ell, n, m, std::sqrt(a)});
    }

  std::vector<std::vector<double>> mode_factor(np);  // sqrt(A) R~ * norm*d * (per point)
  std::vector<std::vector<complex>> phase(np);
  parallel_for(np, [&](std::size_t i) {
    const double r = norm3(cfg.grid[i]);
    if (r == 0.0 || r > spec.r0() * (1 + 1e-12))
      throw std::domain_error("simulate_ball_spin_field: grid point outside (0, r0]");
    double th, ph;
    to_angles(cfg.grid[i], th, ph);
    const auto dtab = specfun::spin_harmonic_theta_table(s, lmax, th);
    phase[i] = phase_row(ph, lmax);
    auto& fac = mode_factor[i];
    fac.reserve(modes.size());
    std::vector<std::vector<double>> rad(lmax + 1);
    for (int ell = s; ell <= lmax; ++ell)
      for (int n = ell; n <= nmax; n += 2)
        rad[ell].push_back(
            spin_field::zernike_radial_scaled(spin_field::ZernikeIndex(n, ell), r, spec.r0()));
    for (const Mode& mo : modes) {
      const double norm = std::sqrt((2.0 * mo.ell + 1.0) / kFourPi);
      fac.push_back(mo.sqrt_a * rad[mo.ell][(mo.n - mo.ell) / 2] * norm *
                    dtab[mo.ell][mo.m + mo.ell]);
    }
  });

  parallel_for(cfg.n_realizations, [&](std::size_t t) {
    std::vector<complex> x(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) {
      const Mode& mo = modes[k];
      if (s == 0) {
        x[k] = draw_coeff_real_field(cfg.seed, kTagBallSpin, mo.ell, mo.m, mo.n,
                                     static_cast<std::uint32_t>(t), 1.0);
      } else {
        double z0, z1;
        rng::normal_pair(cfg.seed, rng::mode_stream(kTagBallSpin, mo.ell, mo.m + mo.ell, mo.n),
                         static_cast<std::uint32_t>(t), 0, z0, z1);
        x[k] = complex(z0, 0.0);  // independent standard normals
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < modes.size(); ++k)
        sum += x[k] * mode_factor[i][k] * phase[i][modes[k].m + lmax];
      out.values[t * np + i] = sum;
    }
  });
  return out;
}

FieldRealization simulate_rho_field(const rho_field::ChebyshevSpectrum& spec,
                                    const rho_field::BallSphereMap& map,
                                    const SimulationConfig& cfg) {
  check_config(cfg, 0);
  if (spec.k() != 1)
    throw std::invalid_argument(
        "simulate_rho_field: only scalar (k=1) spectra are simulated; slice the matrix model");
  spec.validate();
  const int lmax = std::min(cfg.lmax > 0 ? cfg.lmax : spec.lmax(), spec.lmax());

  FieldRealization out;
  out.points = cfg.grid;
  out.n_realizations = cfg.n_realizations;
  out.seed = cfg.seed;
  out.model_tag = "rho";
  out.is_complex = false;
  const std::size_t np = cfg.grid.size();
  out.values.assign(np * cfg.n_realizations, complex(0.0, 0.0));

  std::size_t nmodes = 0;
  for (int L = 0; L <= lmax; ++L) nmodes += static_cast<std::size_t>(L + 1) * (L + 1);

  std::vector<std::vector<double>> stab(np);
  parallel_for(np, [&](std::size_t i) {
    Vec4 s;
    try {
      s = map.psi(cfg.grid[i]);
    } catch (const std::domain_error&) {
      std::ostringstream msg;
      msg << "simulate_rho_field: grid point (" << cfg.grid[i][0] << ", " << cfg.grid[i][1]
          << ", " << cfg.grid[i][2] << ") is at or outside the ball boundary";
      throw std::domain_error(msg.str());
    }
    auto& row = stab[i];
    row.reserve(nmodes);
    for (int L = 0; L <= lmax; ++L)
      for (int j = 1; j <= (L + 1) * (L + 1); ++j)
        row.push_back(specfun::sphere3_harmonic(L, j, s));
  });

  parallel_for(cfg.n_realizations, [&](std::size_t t) {
    std::vector<double> a(nmodes);
    std::size_t idx = 0;
    for (int L = 0; L <= lmax; ++L) {
      const double sd = std::sqrt(std::max(0.0, spec.at(L)));
      for (int j = 1; j <= (L + 1) * (L + 1); ++j, ++idx) {
        double z0, z1;
        rng::normal_pair(cfg.seed, rng::mode_stream(kTagRho, L, j, 0),
                         static_cast<std::uint32_t>(t), 0, z0, z1);
        a[idx] = sd * z0;
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < nmodes; ++k) sum += a[k] * stab[i][k];
      out.values[t * np + i] = complex(sum, 0.0);
    }
  });
  return out;
}

SpectrumEstimate estimate_angular_spectrum(const FieldRealization& real, int lmax) {
  if (!real.sphere_grid.has_value())
    throw std::invalid_argument(
        "estimate_angular_spectrum: realization lacks a structured sphere grid");
  const SphereGridInfo& g = *real.sphere_grid;
  const int need = 2 * lmax + 1;
  if (g.n_theta < need || g.n_phi < need) {
    std::ostringstream msg;
    msg << "estimate_angular_spectrum: grid " << g.n_theta << " x " << g.n_phi
        << " cannot resolve lmax " << lmax << "; need at least " << need << " x " << need
        << " (Gauss-Legendre theta x uniform phi) nodes";
    throw std::invalid_argument(msg.str());
  }

  const std::size_t np = real.points.size();
  const int nmodes = (lmax + 1) * (lmax + 1);
  std::vector<std::vector<std::vector<double>>> dtab(g.n_theta);
  parallel_for(g.n_theta, [&](std::size_t i) {
    dtab[i] = specfun::spin_harmonic_theta_table(0, lmax, g.theta[i]);
    for (int ell = 0; ell <= lmax; ++ell) {
      const double norm = std::sqrt((2.0 * ell + 1.0) / kFourPi);
      for (auto& v : dtab[i][ell]) v *= norm;
    }
  });
  std::vector<std::vector<complex>> phase(g.n_phi);
  for (int j = 0; j < g.n_phi; ++j) phase[j] = phase_row(kTwoPi * j / g.n_phi, lmax);

  const int nt = real.n_realizations;
  std::vector<std::vector<double>> c_per(nt, std::vector<double>(lmax + 1, 0.0));
  parallel_for(nt, [&](std::size_t t) {
    std::vector<complex> alm(nmodes, complex(0.0, 0.0));
    for (int i = 0; i < g.n_theta; ++i) {
      const double wt = g.theta_weight[i] * kTwoPi / g.n_phi;
      for (int j = 0; j < g.n_phi; ++j) {
        const std::size_t pt = static_cast<std::size_t>(i) * g.n_phi + j;
        const complex wv = wt * real.values[t * np + pt];
        int idx = 0;
        for (int ell = 0; ell <= lmax; ++ell)
          for (int m = -ell; m <= ell; ++m, ++idx)
            alm[idx] += wv * dtab[i][ell][m + ell] * std::conj(phase[j][m + lmax]);
      }
    }
    int idx = 0;
    for (int ell = 0; ell <= lmax; ++ell) {
      double acc = 0.0;
      for (int m = -ell; m <= ell; ++m, ++idx) acc += std::norm(alm[idx]);
      c_per[t][ell] = acc / (2.0 * ell + 1.0);
    }
  });

  SpectrumEstimate est;
  est.c.assign(lmax + 1, 0.0);
  est.se.assign(lmax + 1, 0.0);
  for (int ell = 0; ell <= lmax; ++ell) {
    double mean = 0.0;
    for (int t = 0; t < nt; ++t) mean += c_per[t][ell];
    mean /= nt;
    double var = 0.0;
    for (int t = 0; t < nt; ++t) {
      const double d = c_per[t][ell] - mean;
      var += d * d;
    }
    est.c[ell] = mean;
    est.se[ell] = nt > 1 ? std::sqrt(var / (nt - 1.0) / nt) : 0.0;
  }
  return est;
}

}  // namespace ballfield::sampler
