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

#include "rho_field.hpp"

#include <cmath>

#include "quadprec.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace ballfield::rho_field {

using specfun::chebyshev_u;
using specfun::integrate_semi_infinite;

namespace {

void check_in_cube(const Vec3& x, double r0, const char* who) {
  for (double c : x)
    if (!(std::fabs(c) < r0))
      throw std::domain_error(std::string(who) + ": point at or outside the open ball");
}

Vec3 arctan_scaled(const Vec3& x, double r0) {
  const double f = 0.5 * kPi / r0;
  return {std::tan(f * x[0]), std::tan(f * x[1]), std::tan(f * x[2])};
}

}  // namespace

Vec4 BallSphereMap::psi(const Vec3& x) const {
  check_in_cube(x, r0, "psi");
  const Vec3 t = arctan_scaled(x, r0);
  const double n2 = dot3(t, t);
  const double den = 1.0 + n2;
  return {2.0 * t[0] / den, 2.0 * t[1] / den, 2.0 * t[2] / den, (n2 - 1.0) / den};
}

Vec3 BallSphereMap::psi_inv(const Vec4& s) const {
  if (std::fabs(norm4(s) - 1.0) > 1e-9)
    throw std::domain_error("psi_inv: point must lie on the unit S^3");
  if (s[3] >= 1.0 - 1e-14) throw std::domain_error("psi_inv: north pole is outside the range");
  const double den = 1.0 - s[3];
  const double f = 2.0 * r0 / kPi;
  return {f * std::atan(s[0] / den), f * std::atan(s[1] / den), f * std::atan(s[2] / den)};
}

double rho_distance(const Vec3& x, const Vec3& y, const RhoMetricParams& params) {
  check_in_cube(x, params.r0, "rho_distance");
  check_in_cube(y, params.r0, "rho_distance");
  if (x == y) return 0.0;  // acos near 1 would turn ulps into ~1e-8
  const Vec3 tx = arctan_scaled(x, params.r0);
  const Vec3 ty = arctan_scaled(y, params.r0);
  const double nx = dot3(tx, tx), ny = dot3(ty, ty);
  double c = (4.0 * dot3(tx, ty) + (1.0 - nx) * (1.0 - ny)) / ((1.0 + nx) * (1.0 + ny));
  if (c > 1.0 + 1e-12 || c < -1.0 - 1e-12)
    throw std::domain_error("rho_distance: cosine argument escaped [-1,1]");
  c = std::clamp(c, -1.0, 1.0);
  return params.C * std::acos(c);
}

ChebyshevSpectrum::ChebyshevSpectrum(int k, int lmax) : k_(k), lmax_(lmax) {
  if (k_ < 1) throw std::domain_error("ChebyshevSpectrum: k must be >= 1");
  if (lmax_ < 0) throw std::domain_error("ChebyshevSpectrum: lmax must be >= 0");
  b_.assign(lmax_ + 1, std::vector<double>(static_cast<std::size_t>(k_) * k_, 0.0));
}

void ChebyshevSpectrum::set(int ell, double b) {
  if (k_ != 1) throw std::invalid_argument("ChebyshevSpectrum: scalar set needs k == 1");
  if (ell < 0 || ell > lmax_) throw std::domain_error("ChebyshevSpectrum: ell out of range");
  b_[ell][0] = b;
}

void ChebyshevSpectrum::set(int ell, const std::vector<double>& b) {
  if (ell < 0 || ell > lmax_) throw std::domain_error("ChebyshevSpectrum: ell out of range");
  if (b.size() != static_cast<std::size_t>(k_) * k_)
    throw std::invalid_argument("ChebyshevSpectrum: matrix size must be k x k");
  b_[ell] = b;
}

double ChebyshevSpectrum::at(int ell) const {
  if (k_ != 1) throw std::invalid_argument("ChebyshevSpectrum: scalar read needs k == 1");
  if (ell < 0 || ell > lmax_) throw std::domain_error("ChebyshevSpectrum: ell out of range");
  return b_[ell][0];
}

const std::vector<double>& ChebyshevSpectrum::matrix_at(int ell) const {
  if (ell < 0 || ell > lmax_) throw std::domain_error("ChebyshevSpectrum: ell out of range");
  return b_[ell];
}

namespace {

// minimum eigenvalue of a symmetric matrix by cyclic Jacobi rotations
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
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
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

}  // namespace

void ChebyshevSpectrum::validate() const {
  constexpr double kEigSlack = -1e-10;
  for (int ell = 0; ell <= lmax_; ++ell) {
    const auto& m = b_[ell];
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < i; ++j)
        if (std::fabs(m[i * k_ + j] - m[j * k_ + i]) > 1e-12 * (1.0 + std::fabs(m[i * k_ + j])))
          throw std::invalid_argument("ChebyshevSpectrum: matrix not symmetric");
    if (k_ == 1) {
      if (m[0] < kEigSlack) throw std::invalid_argument("ChebyshevSpectrum: negative b_ell");
      continue;
    }
    if (sym_min_eigenvalue(m, k_) < kEigSlack)
      throw std::invalid_argument("ChebyshevSpectrum: matrix not nonnegative definite");
  }
}

double matern_density_4d(double lambda, const MaternParams& p) {
  if (lambda < 0.0) throw std::domain_error("matern_density_4d: frequency must be >= 0");
  return p.sigma2 * p.nu * (p.nu + 1.0) * std::pow(p.a, 2.0 * p.nu) /
         std::pow(p.a * p.a + lambda * lambda, p.nu + 2.0);
}

double b_ell_numeric_bessel(int ell, const std::function<double(double)>& f4) {
  if (ell < 0) throw std::domain_error("b_ell_numeric_bessel: ell must be >= 0");
  const auto integrand = [&](double lam) {
    const double j = specfun::bessel_j(ell + 1.0, lam);
    return lam * j * j * f4(lam);
  };
  const double pref = std::pow(kTwoPi, 4.0);
  // J_{ell+1}^2 oscillates at frequency 2 for large arguments
  return pref * specfun::integrate_oscillatory(integrand, kPi, 1e-10, 1e-8, 4.0 * kPi);
}

namespace {

bool near_integer_offset(double nu, int ell, double eps = 1e-6) {
  const double d = static_cast<double>(ell) - nu;
  return std::fabs(d - std::round(d)) < eps;
}

double b_ell_matern_closed_quad(int ell, const MaternParams& p) {
  using detail::qfloat;
  const qfloat nu = p.nu, a = p.a, s2 = p.sigma2;
  const qfloat z = a * a;
  const qfloat term1 = tgammaq(ell - nu) * tgammaq(nu + 1.5Q) /
                       (sqrtq(M_PIq) * tgammaq(ell + nu + 3.0Q)) *
                       detail::q_hyp1f2(nu + 1.5Q, nu - (qfloat)ell + 1.0Q,
                                        nu + (qfloat)ell + 3.0Q, z);
  const qfloat term2 = tgammaq(nu - ell) * powq(a, 2.0Q * ell - 2.0Q * nu) /
                       (powq(2.0Q, 2.0Q * ell + 2.0Q) * tgammaq(ell + 2.0Q)) *
                       detail::q_hyp1f2((qfloat)ell + 1.5Q, (qfloat)ell - nu + 1.0Q,
                                        2.0Q * ell + 3.0Q, z);
  const qfloat b = s2 * 8.0Q * powq(M_PIq, 4.0Q) * powq(a, 2.0Q * nu) / tgammaq(nu) *
                   (term1 + term2);
  return static_cast<double>(b);
}

}  // namespace

double b_ell_matern_closed(int ell, const MaternParams& p) {
  if (ell < 0) throw std::domain_error("b_ell_matern_closed: ell must be >= 0");
  if (near_integer_offset(p.nu, ell)) {
    const auto f4 = [&p](double lam) { return matern_density_4d(lam, p); };
    return b_ell_numeric_bessel(ell, f4);
  }
  return b_ell_matern_closed_quad(ell, p);
}

double b_ell_from_covariance(int ell, const std::function<double(double)>& b_chordal,
                             int quad_points) {
  if (ell < 0) throw std::domain_error("b_ell_from_covariance: ell must be >= 0");
  const int n = quad_points > 0 ? quad_points : std::max(1024, 8 * (ell + 1));
  const auto rule = specfun::gauss_chebyshev2(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double gamma = std::acos(std::clamp(t, -1.0, 1.0));
    sum += rule.weights[i] * b_chordal(2.0 * std::sin(0.5 * gamma)) * chebyshev_u(ell, t);
  }
  return kOmega3 / (ell + 1.0) * sum;
}

std::vector<double> b_ell_from_covariance_all(int lmax,
                                              const std::function<double(double)>& b_chordal,
                                              int quad_points) {
  if (lmax < 0) throw std::domain_error("b_ell_from_covariance_all: lmax must be >= 0");
  const int n = quad_points > 0 ? quad_points : std::max(4096, 4 * (lmax + 1));
  const auto rule = specfun::gauss_chebyshev2(n);
  std::vector<double> acc(lmax + 1, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double gamma = std::acos(std::clamp(t, -1.0, 1.0));
    const double wb = rule.weights[i] * b_chordal(2.0 * std::sin(0.5 * gamma));
    double um1 = 1.0, u = 2.0 * t;
    for (int ell = 0; ell <= lmax; ++ell) {
      double uval;
      if (ell == 0)
        uval = 1.0;
      else if (ell == 1)
        uval = u;
      else {
        const double un = 2.0 * t * u - um1;
        um1 = u;
        u = un;
        uval = un;
      }
      acc[ell] += wb * uval;
    }
  }
  for (int ell = 0; ell <= lmax; ++ell) acc[ell] *= kOmega3 / (ell + 1.0);
  return acc;
}

RhoCovarianceResult covariance_from_b(const ChebyshevSpectrum& spec, const Vec3& x, const Vec3& y,
                                      const RhoMetricParams& params, double requested_tol) {
  const double rho = rho_distance(x, y, params);
  const double t = std::cos(rho / params.C);
  const int k = spec.k();
  RhoCovarianceResult out;
  out.value.assign(static_cast<std::size_t>(k) * k, 0.0);
  double um1 = 1.0, u = 2.0 * t;
  double tlast = 0.0, tprev = 0.0;
  for (int ell = 0; ell <= spec.lmax(); ++ell) {
    double uval;
    if (ell == 0)
      uval = 1.0;
    else if (ell == 1)
      uval = u;
    else {
      const double un = 2.0 * t * u - um1;
      um1 = u;
      u = un;
      uval = un;
    }
    const auto& m = spec.matrix_at(ell);
    const double f = (ell + 1.0) * uval / kOmega4;
    double norm = 0.0;
    for (int i = 0; i < k * k; ++i) {
      out.value[i] += f * m[i];
      norm = std::max(norm, std::fabs(m[i]));
    }
    tprev = tlast;
    // |U_ell| <= ell+1 bounds the dropped terms
    tlast = (ell + 1.0) * (ell + 1.0) * norm / kOmega4;
  }
  if (tprev > 0.0 && tlast > 0.0) {
    const double q = std::min(tlast / tprev, 0.9999);
    out.tail_estimate = tlast * q / (1.0 - q);
  } else {
    out.tail_estimate = tlast;
  }
  double scale = 0.0;
  for (double v : out.value) scale = std::max(scale, std::fabs(v));
  out.tail_exceeds_tolerance = out.tail_estimate > requested_tol * std::max(1.0, scale);
  return out;
}

double covariance_from_b_scalar(const ChebyshevSpectrum& spec, const Vec3& x, const Vec3& y,
                                const RhoMetricParams& params) {
  if (spec.k() != 1)
    throw std::invalid_argument("covariance_from_b_scalar: spectrum is not scalar");
  return covariance_from_b(spec, x, y, params).value[0];
}

double matern_rho_covariance(const Vec3& x, const Vec3& y, const MaternParams& p,
                             const RhoMetricParams& params) {
  return matern_sphere::matern_covariance(rho_distance(x, y, params), p);
}

ChebyshevSpectrum matern_rho_spectrum(const MaternParams& p, const RhoMetricParams& params,
                                      int lmax) {
  // S^3 kernel of the model: B(gamma) = Matern(a C gamma); the projection
  // takes it as a function of the chordal argument c = 2 sin(gamma/2)
  const MaternParams scaled(p.sigma2, p.a * params.C, p.nu);
  const auto b_chordal = [scaled](double c) {
    const double gamma = 2.0 * std::asin(std::clamp(0.5 * c, 0.0, 1.0));
    return matern_sphere::matern_covariance(gamma, scaled);
  };
  ChebyshevSpectrum spec(1, lmax);
  const auto b = b_ell_from_covariance_all(lmax, b_chordal);
  for (int ell = 0; ell <= lmax; ++ell) spec.set(ell, std::max(0.0, b[ell]));
  return spec;
}

ChebyshevSpectrum matern_chordal_spectrum_closed(const MaternParams& p, int lmax) {
  ChebyshevSpectrum spec(1, lmax);
  for (int ell = 0; ell <= lmax; ++ell) spec.set(ell, b_ell_matern_closed(ell, p));
  return spec;
}

void cross_route_constant(const MaternParams& p, int lfit, double& constant, double& spread) {
  // the closed-form route describes the chordal restriction kernel
  const auto b_chordal = [&p](double c) { return matern_sphere::matern_covariance(c, p); };
  double sum = 0.0;
  std::vector<double> ratios;
  for (int ell = 0; ell <= lfit; ++ell) {
    const double num = b_ell_matern_closed(ell, p);
    const double den = b_ell_from_covariance(ell, b_chordal);
    ratios.push_back(num / den);
    sum += ratios.back();
  }
  constant = sum / ratios.size();
  spread = 0.0;
  for (double r : ratios) spread = std::max(spread, std::fabs(r / constant - 1.0));
}

}  // namespace ballfield::rho_field
