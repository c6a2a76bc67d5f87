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

#ifndef BALLFIELD_SPECFUN_HPP
#define BALLFIELD_SPECFUN_HPP

#include "common.hpp"

namespace ballfield::specfun {

/// Legendre polynomial P_ell(x) on [-1,1] by the three-term recurrence.
double legendre_p(int ell, double x);

/// Jacobi polynomial P_k^(alpha,beta)(x), alpha,beta > -1, x in [-1,1].
double jacobi_p(int k, double alpha, double beta, double x);

/// Chebyshev polynomial of the second kind U_ell(t).
double chebyshev_u(int ell, double t);

/// Gegenbauer (ultraspherical) polynomial C_n^(lambda)(x), lambda > -1/2.
double gegenbauer_c(int n, double lambda, double x);

/// Bessel function of the first kind J_nu(x), nu >= 0, x >= 0.
/// Half-integer orders go through the spherical-Bessel recurrences and are
/// exact to the sin/cos closed forms; other orders use the C++17 stdlib.
double bessel_j(double nu, double x);

/// Spherical Bessel j_ell(x); stable for any ell (downward recurrence when
/// x < ell, upward otherwise).
double spherical_bessel_j(int ell, double x);

/// Modified Bessel functions I_nu(x) and K_nu(x) for real order.
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

/// Generalised hypergeometric 1F2(a1; b1, b2; z), summed with term-ratio
/// stopping (three consecutive terms below 1e-17 of the partial sum) and a
/// 10000-term cap. Throws degenerate_parameter if b1 or b2 sits within
/// 1e-12 of a non-positive integer.
double hyp1f2(double a1, double b1, double b2, double z);

/// log|Gamma(x)| together with the sign of Gamma(x); x must not be a pole.
double lgamma_signed(double x, int& sign);

}  // namespace ballfield::specfun

#endif
