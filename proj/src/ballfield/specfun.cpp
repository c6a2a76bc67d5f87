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

#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ballfield::specfun {

namespace {

constexpr double kDomainSlack = 1e-12;

double clamp_to_interval(double x, const char* who) {
  if (std::fabs(x) > 1.0 + kDomainSlack)
    throw std::domain_error(std::string(who) + ": argument outside [-1,1]");
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace

double legendre_p(int ell, double x) {
  if (ell < 0) throw std::domain_error("legendre_p: degree must be >= 0");
  x = clamp_to_interval(x, "legendre_p");
  if (ell == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 2; k <= ell; ++k) {
    const double pn = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
    pm1 = p;
    p = pn;
  }
  return p;
}

double jacobi_p(int k, double alpha, double beta, double x) {
  if (k < 0) throw std::domain_error("jacobi_p: degree must be >= 0");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::domain_error("jacobi_p: parameters must exceed -1");
  x = clamp_to_interval(x, "jacobi_p");
  if (k == 0) return 1.0;
  double pm1 = 1.0;
  double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  for (int n = 2; n <= k; ++n) {
    const double c = 2.0 * n + alpha + beta;
    const double a1 = 2.0 * n * (n + alpha + beta) * (c - 2.0);
    const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
    const double pn = ((a2 + a3 * x) * p - a4 * pm1) / a1;
    pm1 = p;
    p = pn;
  }
  return p;
}

double chebyshev_u(int ell, double t) {
  if (ell < 0) throw std::domain_error("chebyshev_u: degree must be >= 0");
  t = clamp_to_interval(t, "chebyshev_u");
  if (ell == 0) return 1.0;
  double um1 = 1.0, u = 2.0 * t;
  for (int k = 2; k <= ell; ++k) {
    const double un = 2.0 * t * u - um1;
    um1 = u;
    u = un;
  }
  return u;
}

double gegenbauer_c(int n, double lambda, double x) {
  if (n < 0) throw std::domain_error("gegenbauer_c: degree must be >= 0");
  if (lambda <= -0.5) throw std::domain_error("gegenbauer_c: lambda must exceed -1/2");
  if (n == 0) return 1.0;
  double cm1 = 1.0, c = 2.0 * lambda * x;
  for (int k = 2; k <= n; ++k) {
    const double cn = (2.0 * (k + lambda - 1.0) * x * c - (k + 2.0 * lambda - 2.0) * cm1) / k;
    cm1 = c;
    c = cn;
  }
  return c;
}

namespace {

// j1 by its ascending series; the closed form sin(x)/x^2 - cos(x)/x loses
// ~10 digits to cancellation below x ~ 0.1
double spherical_j1(double x) {
  if (x < 0.5) {
    const double x2 = x * x;
    return x / 3.0 *
           (1.0 -
            x2 / 10.0 *
                (1.0 - x2 / 28.0 * (1.0 - x2 / 54.0 * (1.0 - x2 / 88.0 * (1.0 - x2 / 130.0)))));
  }
  return std::sin(x) / (x * x) - std::cos(x) / x;
}

}  // namespace

double spherical_bessel_j(int ell, double x) {
  if (ell < 0) throw std::domain_error("spherical_bessel_j: order must be >= 0");
  if (x < 0.0) throw std::domain_error("spherical_bessel_j: argument must be >= 0");
  if (x == 0.0) return ell == 0 ? 1.0 : 0.0;
  const double j0 = std::sin(x) / x;
  if (ell == 0) return j0;
  const double j1 = spherical_j1(x);
  if (ell == 1) return j1;

  if (x >= static_cast<double>(ell)) {
    // upward recurrence is stable here
    double jm1 = j0, j = j1;
    for (int k = 2; k <= ell; ++k) {
      const double jn = (2.0 * k - 1.0) / x * j - jm1;
      jm1 = j;
      j = jn;
    }
    return j;
  }

  // Miller downward recurrence with rescaling; normalize against whichever
  // of j0/j1 is larger in magnitude.
  const int extra = 24 + static_cast<int>(std::sqrt(42.0 * ell));
  const int mstart = ell + extra;
  double fp1 = 0.0, f = std::numeric_limits<double>::min() * 1e16;
  double target = 0.0;
  double scale = 1.0;
  for (int k = mstart; k >= 1; --k) {
    const double fm1 = (2.0 * k + 1.0) / x * f - fp1;
    fp1 = f;
    f = fm1;
    if (k - 1 == ell) target = f;
    if (std::fabs(f) > 1e250) {
      f *= 1e-250;
      fp1 *= 1e-250;
      target *= 1e-250;
      scale *= 1e-250;
    }
  }
  // f now holds the un-normalized j0, fp1 the un-normalized j1
  double ratio;
  if (std::fabs(j0) >= std::fabs(j1))
    ratio = j0 / f;
  else
    ratio = j1 / fp1;
  (void)scale;
  return target * ratio;
}

double bessel_j(double nu, double x) {
  if (nu < 0.0) throw std::domain_error("bessel_j: order must be >= 0");
  if (x < 0.0) throw std::domain_error("bessel_j: argument must be >= 0");
  const double two_nu = 2.0 * nu;
  const double rounded = std::round(two_nu);
  if (std::fabs(two_nu - rounded) < 1e-12 && (static_cast<long long>(rounded) % 2 != 0)) {
    // half-integer order: J_{l+1/2}(x) = sqrt(2x/pi) j_l(x)
    const int ell = static_cast<int>((rounded - 1.0) / 2.0);
    if (x == 0.0) return 0.0;
    return std::sqrt(2.0 * x / kPi) * spherical_bessel_j(ell, x);
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double v = std::cyl_bessel_j(nu, x);
  if (!std::isfinite(v))
    throw std::overflow_error("bessel_j: evaluation overflowed for extreme arguments");
  return v;
}

double bessel_i(double nu, double x) {
  if (x < 0.0) throw std::domain_error("bessel_i: argument must be >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double v = std::cyl_bessel_i(std::fabs(nu), x);
  if (!std::isfinite(v))
    throw std::overflow_error("bessel_i: evaluation overflowed for extreme arguments");
  // I_{-nu} = I_nu for integer nu only; restrict to nu >= 0 otherwise
  if (nu < 0.0 && std::fabs(nu - std::round(nu)) > 1e-12)
    throw std::domain_error("bessel_i: negative non-integer order not supported");
  return v;
}

double bessel_k(double nu, double x) {
  if (x <= 0.0) throw std::domain_error("bessel_k: argument must be > 0 (K diverges at 0)");
  const double v = std::cyl_bessel_k(std::fabs(nu), x);  // K_{-nu} = K_nu
  if (!std::isfinite(v))
    throw std::overflow_error("bessel_k: evaluation overflowed for extreme arguments");
  return v;
}

double hyp1f2(double a1, double b1, double b2, double z) {
  constexpr double kEps = 1e-12;
  for (double b : {b1, b2}) {
    const double r = std::round(b);
    if (r <= 0.0 && std::fabs(b - r) < kEps)
      throw degenerate_parameter("hyp1f2: lower parameter at a non-positive integer");
  }
  // long double accumulation; early terms can alternate when a lower
  // parameter is negative, so the extra mantissa width matters.
  long double sum = 1.0L, term = 1.0L;
  int below = 0;
  for (int k = 0; k < 10000; ++k) {
    term *= static_cast<long double>(a1 + k) /
            ((static_cast<long double>(b1) + k) * (static_cast<long double>(b2) + k)) *
            static_cast<long double>(z) / (k + 1.0L);
    sum += term;
    if (std::fabs(static_cast<double>(term)) <
        1e-17 * std::max(1.0, std::fabs(static_cast<double>(sum)))) {
      if (++below >= 3) return static_cast<double>(sum);
    } else {
      below = 0;
    }
  }
  throw std::runtime_error("hyp1f2: series did not converge within 10000 terms");
}

double lgamma_signed(double x, int& sign) {
  if (x > 0.0) {
    sign = 1;
    return std::lgamma(x);
  }
  const double r = std::round(x);
  if (std::fabs(x - r) < 1e-300)
    throw std::domain_error("lgamma_signed: gamma pole at non-positive integer");
  const long long fl = static_cast<long long>(std::floor(x));
  sign = (((fl % 2) + 2) % 2 == 1) ? -1 : 1;
  return std::lgamma(x);
}

}  // namespace ballfield::specfun
