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

#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>

#include <json.hpp>

#include "harmonics.hpp"
#include "matern_sphere.hpp"
#include "quadprec.hpp"
#include "quadrature.hpp"
#include "rho_field.hpp"
#include "rng.hpp"
#include "sampler.hpp"
#include "serialize.hpp"
#include "specfun.hpp"
#include "spin_field.hpp"
#include "wigner.hpp"

namespace ballfield::validate {

namespace {

namespace sf = ballfield::specfun;
namespace ms = ballfield::matern_sphere;
namespace spf = ballfield::spin_field;
namespace rf = ballfield::rho_field;
namespace smp = ballfield::sampler;

// deterministic uniforms for the sampled checks
struct Uniforms {
  std::uint64_t seed;
  std::uint32_t draw = 0;
  explicit Uniforms(std::uint64_t s) : seed(s) {}
  double next() {
    rng::Counter c;
    c.c0 = draw++;
    c.c3 = 0x7a11dau;
    const rng::Counter r = rng::philox4x32_10(c, seed);
    return rng::uniform_open(r.c0, r.c1);
  }
  double range(double lo, double hi) { return lo + (hi - lo) * next(); }
  Vec3 ball_point(double r0) {
    for (;;) {
      Vec3 x{range(-r0, r0), range(-r0, r0), range(-r0, r0)};
      const double n = norm3(x);
      if (n < 0.95 * r0 && n > 0.05 * r0) return x;
    }
  }
};

CheckResult make_result(const std::string& name, double worst, double tol) {
  return CheckResult{name, worst <= tol, worst, tol};
}

// minimum eigenvalue of a small symmetric matrix by cyclic Jacobi rotations
double sym_min_eigenvalue(std::vector<double> m, int n) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i * n + j] * m[i * n + j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = 0.5 * (m[q * n + q] - m[p * n + p]) / apq;
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m[k * n + p], mkq = m[k * n + q];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p * n + k], mqk = m[q * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[q * n + k] = s * mpk + c * mqk;
        }
      }
  }
  double mn = m[0];
  for (int i = 1; i < n; ++i) mn = std::min(mn, m[i * n + i]);
  return mn;
}

// ---------------------------------------------------------------- specfun

CheckResult check_legendre_bounds() {
  double worst = 0.0;
  for (int ell = 0; ell <= 100; ++ell) {
    for (int i = 0; i <= 200; ++i) {
      const double x = -1.0 + 2.0 * i / 200.0;
      worst = std::max(worst, std::fabs(sf::legendre_p(ell, x)) - 1.0);
    }
    worst = std::max(worst, std::fabs(sf::legendre_p(ell, 1.0) - 1.0));
  }
  return make_result("specfun.legendre_bounds", std::max(worst, 0.0), 1e-12);
}

CheckResult check_wigner_unitarity() {
  double worst = 0.0;
  for (int ib = 0; ib < 20; ++ib) {
    const double beta = kPi * (ib + 0.5) / 20.0;
    const auto mats = sf::wigner_d_all(32, beta);
    for (int ell = 0; ell <= 32; ++ell) {
      for (int m = -ell; m <= ell; ++m)
        for (int mp = -ell; mp <= ell; ++mp) {
          double dot = 0.0;
          for (int n = -ell; n <= ell; ++n) dot += mats[ell].at(m, n) * mats[ell].at(mp, n);
          worst = std::max(worst, std::fabs(dot - (m == mp ? 1.0 : 0.0)));
        }
    }
  }
  return make_result("specfun.wigner_unitarity", worst, 1e-10);
}

CheckResult check_spin_orthonormality() {
  constexpr int kLmax = 10;
  const int ntheta = 2 * kLmax + 4;
  const int nphi = 4 * kLmax + 4;
  const auto gl = sf::gauss_legendre(ntheta, -1.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s <= 3; ++s) {
    // tables per theta node
    std::vector<std::vector<std::vector<double>>> tab(ntheta);
    for (int i = 0; i < ntheta; ++i)
      tab[i] = sf::spin_harmonic_theta_table(s, kLmax, std::acos(gl.nodes[i]));
    for (int ell = s; ell <= kLmax; ++ell)
      for (int lp = ell; lp <= kLmax; ++lp)
        for (int m = -ell; m <= ell; ++m)
          for (int mp = -lp; mp <= lp; ++mp) {
            if (m != mp) continue;  // phi integral vanishes exactly; checked separately below
            double acc = 0.0;
            for (int i = 0; i < ntheta; ++i)
              acc += gl.weights[i] * tab[i][ell][m + ell] * tab[i][lp][mp + lp];
            const double norm = std::sqrt((2.0 * ell + 1.0) * (2.0 * lp + 1.0)) / kFourPi;
            const double val = kTwoPi * norm * acc;
            const double want = (ell == lp && m == mp) ? 1.0 : 0.0;
            worst = std::max(worst, std::fabs(val - want));
          }
    // representative m != m' pairs through the full phi quadrature
    for (int ell = s; ell <= std::min(kLmax, s + 3); ++ell) {
      for (int dm = 1; dm <= 2; ++dm) {
        const int m1 = std::min(ell, 1), m2 = m1 - dm;
        if (m2 < -ell) continue;
        complex acc(0.0, 0.0);
        for (int i = 0; i < ntheta; ++i) {
          const double th = std::acos(gl.nodes[i]);
          for (int j = 0; j < nphi; ++j) {
            const double ph = kTwoPi * j / nphi;
            const complex y1 = sf::spin_harmonic({s, ell, m1}, th, ph);
            const complex y2 = sf::spin_harmonic({s, ell, m2}, th, ph);
            acc += gl.weights[i] * (kTwoPi / nphi) * y1 * std::conj(y2);
          }
        }
        worst = std::max(worst, std::abs(acc));
      }
    }
  }
  return make_result("specfun.spin_orthonormality", worst, 1e-10);
}

CheckResult check_spin_addition() {
  Uniforms u(11u);
  double worst = 0.0;
  for (int s = 0; s <= 2; ++s)
    for (int rep = 0; rep < 8; ++rep) {
      const double th1 = u.range(0.05, kPi - 0.05), ph1 = u.range(0.0, kTwoPi);
      const double th2 = u.range(0.05, kPi - 0.05), ph2 = u.range(0.0, kTwoPi);
      const auto g1 = sf::rotation_zyz({ph1, th1, 0.0});
      const auto g2 = sf::rotation_zyz({ph2, th2, 0.0});
      const auto e = sf::euler_from_rotation(sf::mat_mul(sf::transpose(g1), g2));
      for (int ell = s; ell <= 8; ++ell)
        for (int m = -ell; m <= 0; ++m) {
          // spin weight of the conjugated factor is -m >= 0
          complex lhs(0.0, 0.0);
          for (int mp = -ell; mp <= ell; ++mp)
            lhs += sf::spin_harmonic({s, ell, mp}, th2, ph2) *
                   std::conj(sf::spin_harmonic({-m, ell, mp}, th1, ph1));
          const complex rhs = std::sqrt((2.0 * ell + 1.0) / kFourPi) *
                              sf::spin_harmonic({s, ell, m}, e.beta, e.alpha) *
                              complex(std::cos(s * e.gamma), -std::sin(s * e.gamma));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
  return make_result("specfun.spin_addition_theorem", worst, 1e-9);
}

CheckResult check_hyp1f2_oracle() {
  using detail::qfloat;
  double worst = 0.0;
  // parameter shapes the Matern closed forms use, |z| <= 400
  Uniforms u(13u);
  for (int rep = 0; rep < 60; ++rep) {
    const double nu = u.range(0.3, 3.0);
    const int ell = static_cast<int>(u.range(0.0, 13.0));
    const double z = u.range(0.0, 400.0);
    const double cases[3][3] = {{nu + 1.0, nu - ell + 1.0, nu + ell + 2.0},
                                {ell + 1.0, ell - nu + 1.0, 2.0 * ell + 2.0},
                                {nu + 1.5, nu - ell + 1.0, nu + ell + 3.0}};
    for (const auto& c : cases) {
      const double rb = std::round(c[1]);
      if (rb <= 0.0 && std::fabs(c[1] - rb) < 1e-6) continue;
      const double got = sf::hyp1f2(c[0], c[1], c[2], z);
      const qfloat want = detail::q_hyp1f2(c[0], c[1], c[2], z);
      const double rel = std::fabs(static_cast<double>((qfloat(got) - want) /
                                                       (fabsq(want) > 1e-300Q ? want : 1.0Q)));
      worst = std::max(worst, rel);
    }
  }
  return make_result("specfun.hyp1f2_vs_extended_precision", worst, 1e-10);
}

CheckResult check_bessel_wronskian() {
  double worst = 0.0;
  for (double nu = 0.5; nu <= 20.5; nu += 1.0)
    for (double x = 0.1; x <= 50.0; x *= 1.29) {
      const double w = sf::bessel_i(nu, x) * sf::bessel_k(nu + 1.0, x) +
                       sf::bessel_i(nu + 1.0, x) * sf::bessel_k(nu, x);
      worst = std::max(worst, std::fabs(w * x - 1.0));
    }
  return make_result("specfun.bessel_ik_wronskian", worst, 1e-10);
}

// ----------------------------------------------------------------- matern

CheckResult check_matern_route_equivalence() {
  double worst = 0.0;
  for (double s2 : {1.0, 2.0})
    for (double a : {1.0, 10.0})
      for (double nu : {0.4, 1.3, 2.6}) {
        const ms::MaternParams p(s2, a, nu);
        const auto f = ms::matern_spectral_density(p);
        for (double r : {0.25, 0.5, 1.0})
          for (int ell = 0; ell <= 12; ++ell) {
            const double closed = ms::angular_spectrum_matern(ell, r, p);
            const double quad = ms::angular_spectrum_numeric(ell, r, r, f);
            worst = std::max(worst, std::fabs(closed - quad) / quad);
          }
      }
  return make_result("matern.route_equivalence", worst, 1e-6);
}

CheckResult check_matern_halfnu_route() {
  const ms::MaternParams p(1.0, 10.0, 0.5);
  const auto f = ms::matern_spectral_density(p);
  double worst = 0.0;
  for (double r : {0.25, 0.5, 1.0})
    for (int ell = 0; ell <= 10; ++ell) {
      const double ik = ms::matern_spectrum_halfnu(ell, r);
      const double quad = ms::angular_spectrum_numeric(ell, r, r, f);
      const double closed = ms::angular_spectrum_matern(ell, r, p);
      worst = std::max(worst, std::fabs(ik - quad) / quad);
      worst = std::max(worst, std::fabs(ik - closed) / std::fabs(closed));
    }
  return make_result("matern.halfnu_ik_route", worst, 1e-6);
}

CheckResult check_matern_mass_identity() {
  double worst = 0.0;
  for (double s2 : {1.0, 2.5})
    for (double a : {1.0, 7.0})
      for (double nu : {0.5, 1.2, 2.6}) {
        const ms::MaternParams p(s2, a, nu);
        const auto f = ms::spectral_density_from_callback(
            [p](double lam) { return ms::matern_density_3d(lam, p); });
        worst = std::max(worst, std::fabs(f.total_mass - s2) / s2);
      }
  return make_result("matern.mass_identity", worst, 1e-8);
}

CheckResult check_matern_reconstruction() {
  const ms::MaternParams p(1.0, 10.0, 0.5);
  const auto spec = ms::matern_angular_spectrum(p, 1.0);
  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double gamma = kPi * i / 50.0;
    const double rec = ms::covariance_from_spectrum(spec, gamma).value;
    const double want = std::exp(-20.0 * std::sin(0.5 * gamma));
    worst = std::max(worst, std::fabs(rec - want));
  }
  return make_result("matern.covariance_reconstruction", worst, 1e-4);
}

CheckResult check_matern_positivity() {
  double worst = 0.0;
  for (double nu : {0.4, 1.3, 2.6}) {
    const ms::MaternParams p(1.0, 10.0, nu);
    for (double r : {0.25, 1.0}) {
      const auto spec = ms::matern_angular_spectrum(p, r, 64);
      for (double c : spec.coeffs) worst = std::max(worst, -c);
    }
  }
  return make_result("matern.spectrum_positivity", std::max(worst, 0.0), 0.0);
}

CheckResult check_matern_degenerate_continuity() {
  // nu crossing an integer offset of ell must be continuous through the
  // quadrature dispatch
  double worst = 0.0;
  for (int ell : {2, 5}) {
    const double r = 0.8;
    const double lo = ms::angular_spectrum_matern(ell, r, ms::MaternParams(1.0, 10.0, ell - 1e-4));
    const double mid = ms::angular_spectrum_matern(ell, r, ms::MaternParams(1.0, 10.0, ell));
    const double hi = ms::angular_spectrum_matern(ell, r, ms::MaternParams(1.0, 10.0, ell + 1e-4));
    const double lob = std::min(lo, hi) * (1.0 - 1e-3) - 1e-12;
    const double hib = std::max(lo, hi) * (1.0 + 1e-3) + 1e-12;
    if (mid < lob) worst = std::max(worst, (lob - mid) / std::fabs(mid));
    if (mid > hib) worst = std::max(worst, (mid - hib) / std::fabs(mid));
  }
  return make_result("matern.degenerate_limit_continuity", worst, 1e-9);
}

// ------------------------------------------------------------------- spin

CheckResult check_zernike_dual_route() {
  double worst = 0.0;
  for (int n = 0; n <= 16; ++n)
    for (int ell = n % 2; ell <= n; ell += 2) {
      const spf::ZernikeIndex idx(n, ell);
      for (int i = 0; i <= 40; ++i) {
        const double r = i / 40.0;
        worst = std::max(worst, std::fabs(spf::zernike_radial(idx, r) -
                                          spf::zernike_radial_sum_form(idx, r)));
      }
    }
  return make_result("spin.zernike_dual_route", worst, 1e-12);
}

CheckResult check_zernike_orthonormality() {
  double worst = 0.0;
  for (double r0 : {1.0, 2.0}) {
    const auto gl = sf::gauss_legendre(64, 0.0, r0);
    for (int ell = 0; ell <= 8; ++ell)
      for (int n = ell; n <= 14; n += 2)
        for (int np = ell; np <= 14; np += 2) {
          double acc = 0.0;
          for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double r = gl.nodes[i];
            acc += gl.weights[i] * r * r *
                   spf::zernike_radial_scaled({n, ell}, r, r0) *
                   spf::zernike_radial_scaled({np, ell}, r, r0);
          }
          worst = std::max(worst, std::fabs(acc - (n == np ? 1.0 : 0.0)));
        }
  }
  return make_result("spin.zernike_orthonormality", worst, 1e-10);
}

spf::SpinSpectrumBall random_spin_spectrum(int s, int lmax, int nmax, Uniforms& u) {
  spf::SpinSpectrumBall spec(s, 1.0, lmax, nmax);
  for (int ell = s; ell <= lmax; ++ell)
    for (int n = ell; n <= nmax; n += 2)
      spec.set(ell, n, u.next() / ((1.0 + ell) * (1.0 + ell) * (1.0 + n)));
  return spec;
}

CheckResult check_spin_twopoint_routes() {
  Uniforms u(29u);
  double worst = 0.0;
  for (int s : {0, 1, 2}) {
    const auto spec = random_spin_spectrum(s, 16, 18, u);
    for (int rep = 0; rep < 17; ++rep) {
      const Vec3 x1 = u.ball_point(1.0);
      const Vec3 x2 = u.ball_point(1.0);
      const complex a = spf::two_point_correlation(spec, x1, x2);
      const complex b = spf::brute_force_two_point(spec, x1, x2, 16);
      worst = std::max(worst, std::abs(a - b));
    }
  }
  return make_result("spin.addition_vs_brute_force", worst, 1e-9);
}

CheckResult check_spin_rotation_invariance() {
  Uniforms u(31u);
  double worst = 0.0;
  const auto spec0 = random_spin_spectrum(0, 10, 12, u);
  const auto spec2 = random_spin_spectrum(2, 10, 12, u);
  for (int rep = 0; rep < 10; ++rep) {
    const sf::EulerAngles e{u.range(0.0, kTwoPi), u.range(0.0, kPi), u.range(0.0, kTwoPi)};
    const auto g = sf::rotation_zyz(e);
    const Vec3 x1 = u.ball_point(1.0), x2 = u.ball_point(1.0);
    auto rot = [&g](const Vec3& x) {
      Vec3 y{};
      for (int i = 0; i < 3; ++i) y[i] = g[i][0] * x[0] + g[i][1] * x[1] + g[i][2] * x[2];
      return y;
    };
    const complex v0 = spf::two_point_correlation(spec0, x1, x2);
    const complex v0r = spf::two_point_correlation(spec0, rot(x1), rot(x2));
    worst = std::max(worst, std::abs(v0 - v0r));
    // spin 2: the value rotates by a pure phase, the modulus is invariant
    const complex v2 = spf::two_point_correlation(spec2, x1, x2);
    const complex v2r = spf::two_point_correlation(spec2, rot(x1), rot(x2));
    worst = std::max(worst, std::fabs(std::abs(v2) - std::abs(v2r)));
  }
  return make_result("spin.rotation_invariance", worst, 1e-10);
}

CheckResult check_spin_mercer_psd() {
  Uniforms u(37u);
  double worst = 0.0;
  const double radii[6] = {0.15, 0.3, 0.45, 0.6, 0.8, 0.95};
  for (int rep = 0; rep < 5; ++rep) {
    const auto spec = random_spin_spectrum(0, 8, 12, u);
    for (int ell = 0; ell <= 8; ++ell) {
      std::vector<double> gram(36);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          gram[i * 6 + j] = spf::spin_spectrum_to_radial_cov(spec, ell, radii[i], radii[j]);
      worst = std::max(worst, -sym_min_eigenvalue(gram, 6));
    }
  }
  return make_result("spin.mercer_psd", std::max(worst, 0.0), 1e-10);
}

// -------------------------------------------------------------------- rho

CheckResult check_rho_metric_axioms() {
  Uniforms u(41u);
  const rf::RhoMetricParams prm(1.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const Vec3 x = u.ball_point(1.0), y = u.ball_point(1.0), z = u.ball_point(1.0);
    const double dxy = rf::rho_distance(x, y, prm);
    const double dyx = rf::rho_distance(y, x, prm);
    worst = std::max(worst, std::fabs(dxy - dyx));
    worst = std::max(worst, rf::rho_distance(x, x, prm));
    const double dxz = rf::rho_distance(x, z, prm);
    const double dzy = rf::rho_distance(z, y, prm);
    worst = std::max(worst, dxy - (dxz + dzy));
  }
  return make_result("rho.metric_axioms", std::max(worst, 0.0), 1e-12);
}

CheckResult check_rho_isometry() {
  Uniforms u(43u);
  const rf::BallSphereMap map(1.0);
  const rf::RhoMetricParams prm(1.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const Vec3 x = u.ball_point(1.0), y = u.ball_point(1.0);
    const double lhs = rf::rho_distance(x, y, prm);
    const double rhs = std::acos(std::clamp(dot4(map.psi(x), map.psi(y)), -1.0, 1.0));
    worst = std::max(worst, std::fabs(lhs - rhs));
    // round trip of the isometry itself
    const Vec3 back = map.psi_inv(map.psi(x));
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(back[i] - x[i]));
    worst = std::max(worst, std::fabs(norm4(map.psi(x)) - 1.0));
  }
  return make_result("rho.isometry", worst, 1e-12);
}

CheckResult check_rho_cross_route() {
  double worst = 0.0;
  for (double nu : {0.6, 1.0, 1.8}) {
    const ms::MaternParams p(1.0, 10.0, nu);
    const auto f4 = [p](double lam) { return rf::matern_density_4d(lam, p); };
    for (int ell = 0; ell <= 12; ++ell) {
      const double closed = rf::b_ell_matern_closed(ell, p);
      const double quad = rf::b_ell_numeric_bessel(ell, f4);
      worst = std::max(worst, std::fabs(closed - quad) / quad);
    }
  }
  return make_result("rho.b_ell_cross_route", worst, 1e-6);
}

CheckResult check_rho_display_nu1() {
  const ms::MaternParams p(1.0, 10.0, 1.0);
  double worst = 0.0;
  for (int ell = 0; ell <= 10; ++ell) {
    const double l = ell;
    const double i0 = sf::bessel_i(l, 10.0), i1 = sf::bessel_i(l + 1.0, 10.0);
    const double k0 = sf::bessel_k(l, 10.0), k1 = sf::bessel_k(l + 1.0, 10.0);
    const double display = 4.0 * std::pow(kPi, 4.0) / 25.0 *
                           (((l * l + 3.0 * l + 52.0) * k1 + 5.0 * k0 * (l + 2.0)) * i1 -
                            5.0 * ((l + 2.0) * k1 + 10.0 * k0) * i0);
    const double closed = rf::b_ell_matern_closed(ell, p);
    worst = std::max(worst, std::fabs(closed - display) / display);
  }
  return make_result("rho.nu1_bessel_display", worst, 1e-8);
}

CheckResult check_rho_stationarity() {
  Uniforms u(47u);
  const rf::RhoMetricParams prm(1.0, 1.0);
  const auto spec = rf::matern_rho_spectrum(ms::MaternParams(1.0, 10.0, 1.0), prm, 40);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const Vec3 x = u.ball_point(1.0), y = u.ball_point(1.0);
    // coordinate permutation + joint sign flip preserves rho but moves points
    const Vec3 xp{-x[1], x[2], -x[0]}, yp{-y[1], y[2], -y[0]};
    const double d1 = rf::rho_distance(x, y, prm);
    const double d2 = rf::rho_distance(xp, yp, prm);
    worst = std::max(worst, std::fabs(d1 - d2));
    const double c1 = rf::covariance_from_b_scalar(spec, x, y, prm);
    const double c2 = rf::covariance_from_b_scalar(spec, xp, yp, prm);
    worst = std::max(worst, std::fabs(c1 - c2));
  }
  return make_result("rho.stationarity", worst, 1e-12);
}

CheckResult check_rho_constant_spectrum() {
  const double s2 = 1.7;
  const auto b = rf::b_ell_from_covariance_all(12, [s2](double) { return s2; });
  double worst = std::fabs(b[0] - kOmega4 * s2);
  for (int ell = 1; ell <= 12; ++ell) worst = std::max(worst, std::fabs(b[ell]));
  return make_result("rho.constant_covariance_spectrum", worst, 1e-12);
}

CheckResult check_rho_roundtrip() {
  const ms::MaternParams p(1.0, 10.0, 1.0);
  const rf::RhoMetricParams prm(1.0, 1.0);
  const auto spec = rf::matern_rho_spectrum(p, prm, 4000);
  double worst = 0.0;
  // rho grid along a diameter: x fixed, y walks outward
  const Vec3 x{0.05, 0.0, 0.0};
  for (int i = 0; i <= 50; ++i) {
    const Vec3 y{-0.93 + 1.86 * i / 50.0, 0.02, 0.0};
    const double rec = rf::covariance_from_b_scalar(spec, x, y, prm);
    const double want = rf::matern_rho_covariance(x, y, p, prm);
    worst = std::max(worst, std::fabs(rec - want));
  }
  return make_result("rho.covariance_roundtrip", worst, 1e-3);
}

// ------------------------------------------------------------- montecarlo

CheckResult check_mc_sphere_variance() {
  const ms::MaternParams p(1.0, 10.0, 0.5);
  const auto spec = ms::matern_angular_spectrum(p, 1.0, 24);
  smp::SimulationConfig cfg;
  cfg.seed = 20260808u;
  cfg.lmax = 24;
  cfg.n_realizations = 2000;
  cfg.grid = {{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.5, 0.5, std::sqrt(0.5)}};
  const auto real = smp::simulate_sphere_field(spec, cfg);
  double theory = 0.0;
  for (int ell = 0; ell <= spec.lmax; ++ell) theory += (2.0 * ell + 1.0) * spec.at(ell) / kFourPi;
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    double m2 = 0.0;
    for (int t = 0; t < cfg.n_realizations; ++t) m2 += std::norm(real.value(t, i));
    m2 /= cfg.n_realizations;
    // SE of the sample second moment of a Gaussian: sqrt(2/n) * variance
    const double se = std::sqrt(2.0 / cfg.n_realizations) * theory;
    worst = std::max(worst, std::fabs(m2 - theory) / se);
  }
  return make_result("montecarlo.sphere_variance_5se", worst, 5.0);
}

CheckResult check_mc_sphere_estimator() {
  const ms::MaternParams p(1.0, 10.0, 0.5);
  const auto spec = ms::matern_angular_spectrum(p, 1.0, 8);
  const auto grid = smp::make_sphere_grid(17, 17, 1.0);
  const auto real = smp::simulate_sphere_field_grid(spec, grid, 97531u, 2000);
  const auto est = smp::estimate_angular_spectrum(real, 8);
  double worst = 0.0;
  for (int ell = 0; ell <= 8; ++ell)
    worst = std::max(worst, std::fabs(est.c[ell] - spec.at(ell)) / est.se[ell]);
  return make_result("montecarlo.spectrum_estimator_5se", worst, 5.0);
}

CheckResult check_mc_ball_spin_closure() {
  Uniforms u(53u);
  double worst = 0.0;
  for (int s : {0, 2}) {
    const auto spec = random_spin_spectrum(s, 8, 10, u);
    smp::SimulationConfig cfg;
    cfg.seed = 777u + s;
    cfg.lmax = 8;
    cfg.nmax = 10;
    cfg.n_realizations = 2000;
    cfg.grid = {{0.3, 0.2, 0.5}, {-0.4, 0.1, 0.35}, {0.05, -0.6, 0.2}};
    const auto real = smp::simulate_ball_spin_field(spec, cfg);
    for (std::size_t i = 0; i < cfg.grid.size(); ++i)
      for (std::size_t j = i; j < cfg.grid.size(); ++j) {
        complex acc(0.0, 0.0);
        for (int t = 0; t < cfg.n_realizations; ++t)
          acc += std::conj(real.value(t, i)) * real.value(t, j);
        acc /= static_cast<double>(cfg.n_realizations);
        const complex want = spf::two_point_correlation(spec, cfg.grid[i], cfg.grid[j]);
        const double vi = spf::two_point_correlation(spec, cfg.grid[i], cfg.grid[i]).real();
        const double vj = spf::two_point_correlation(spec, cfg.grid[j], cfg.grid[j]).real();
        const double se = std::sqrt(2.0 * vi * vj / cfg.n_realizations);
        worst = std::max(worst, std::abs(acc - want) / se);
      }
  }
  return make_result("montecarlo.ball_spin_closure_5se", worst, 5.0);
}

CheckResult check_mc_rho_closure() {
  const ms::MaternParams p(1.0, 10.0, 1.0);
  const rf::RhoMetricParams prm(1.0, 1.0);
  const rf::BallSphereMap map(1.0);
  const auto spec = rf::matern_rho_spectrum(p, prm, 16);
  smp::SimulationConfig cfg;
  cfg.seed = 31415u;
  cfg.lmax = 16;
  cfg.n_realizations = 2000;
  cfg.grid = {{0.0, 0.0, 0.0}, {0.25, 0.1, -0.2}, {-0.5, 0.3, 0.1}};
  const auto real = smp::simulate_rho_field(spec, map, cfg);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.grid.size(); ++i)
    for (std::size_t j = i; j < cfg.grid.size(); ++j) {
      double acc = 0.0;
      for (int t = 0; t < cfg.n_realizations; ++t)
        acc += real.value(t, i).real() * real.value(t, j).real();
      acc /= cfg.n_realizations;
      const double want = rf::covariance_from_b_scalar(spec, cfg.grid[i], cfg.grid[j], prm);
      const double vi = rf::covariance_from_b_scalar(spec, cfg.grid[i], cfg.grid[i], prm);
      const double vj = rf::covariance_from_b_scalar(spec, cfg.grid[j], cfg.grid[j], prm);
      const double se = std::sqrt((vi * vj + want * want) / cfg.n_realizations);
      worst = std::max(worst, std::fabs(acc - want) / se);
    }
  return make_result("montecarlo.rho_closure_5se", worst, 5.0);
}

CheckResult check_mc_determinism_and_reality() {
  const ms::MaternParams p(1.0, 10.0, 0.5);
  const auto spec = ms::matern_angular_spectrum(p, 1.0, 12);
  smp::SimulationConfig cfg;
  cfg.seed = 42u;
  cfg.lmax = 12;
  cfg.n_realizations = 8;
  cfg.grid = {{0.2, -0.1, 0.97}, {0.9, 0.1, -0.4}};
  const auto r1 = smp::simulate_sphere_field(spec, cfg);
  const auto r2 = smp::simulate_sphere_field(spec, cfg);
  double worst = 0.0;
  for (std::size_t i = 0; i < r1.values.size(); ++i) {
    if (std::memcmp(&r1.values[i], &r2.values[i], sizeof(complex)) != 0) worst = 1.0;
    worst = std::max(worst, std::fabs(r1.values[i].imag()));
  }
  return make_result("montecarlo.determinism_and_reality", worst, 1e-12);
}

CheckResult check_mc_se_scaling() {
  const ms::MaternParams p(1.0, 10.0, 0.5);
  const auto spec = ms::matern_angular_spectrum(p, 1.0, 6);
  const auto grid = smp::make_sphere_grid(13, 13, 1.0);
  const auto r1 = smp::simulate_sphere_field_grid(spec, grid, 5150u, 1000);
  const auto r2 = smp::simulate_sphere_field_grid(spec, grid, 5150u, 2000);
  const auto e1 = smp::estimate_angular_spectrum(r1, 6);
  const auto e2 = smp::estimate_angular_spectrum(r2, 6);
  double num = 0.0, den = 0.0;
  for (int ell = 0; ell <= 6; ++ell) {
    num += e1.se[ell] / e2.se[ell];
    den += 1.0;
  }
  const double ratio = num / den;
  const double dev = std::fabs(ratio - std::sqrt(2.0));
  return make_result("montecarlo.se_sqrt2_scaling", dev, 0.12);
}

using CheckFn = std::function<CheckResult()>;

std::vector<std::pair<std::string, std::vector<CheckFn>>> suite_table() {
  return {
      {"specfun",
       {check_legendre_bounds, check_wigner_unitarity, check_spin_orthonormality,
        check_spin_addition, check_hyp1f2_oracle, check_bessel_wronskian}},
      {"matern",
       {check_matern_route_equivalence, check_matern_halfnu_route, check_matern_mass_identity,
        check_matern_reconstruction, check_matern_positivity,
        check_matern_degenerate_continuity}},
      {"spin",
       {check_zernike_dual_route, check_zernike_orthonormality, check_spin_twopoint_routes,
        check_spin_rotation_invariance, check_spin_mercer_psd}},
      {"rho",
       {check_rho_metric_axioms, check_rho_isometry, check_rho_cross_route,
        check_rho_display_nu1, check_rho_stationarity, check_rho_constant_spectrum,
        check_rho_roundtrip}},
      {"montecarlo",
       {check_mc_sphere_variance, check_mc_sphere_estimator, check_mc_ball_spin_closure,
        check_mc_rho_closure, check_mc_determinism_and_reality, check_mc_se_scaling}},
  };
}

}  // namespace

bool known_suite(const std::string& suite) {
  if (suite == "all") return true;
  for (const auto& [name, checks] : suite_table())
    if (name == suite) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (!known_suite(suite)) throw std::invalid_argument("unknown validation suite: " + suite);
  std::vector<CheckResult> out;
  for (const auto& [name, checks] : suite_table()) {
    if (suite != "all" && suite != name) continue;
    for (const auto& fn : checks) out.push_back(fn());
  }
  return out;
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results)
    j.push_back({{"check", r.check},
                 {"status", r.passed ? "pass" : "fail"},
                 {"worst_error", r.worst_error},
                 {"tolerance", r.tolerance}});
  return j.dump(2);
}

}  // namespace ballfield::validate
