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

#ifndef BALLFIELD_HARMONICS_HPP
#define BALLFIELD_HARMONICS_HPP

#include <vector>

#include "common.hpp"
#include "wigner.hpp"

namespace ballfield::specfun {

/// Index (s, ell, m) of a spin-weighted spherical harmonic sY_{ell m};
/// only non-negative spin weights are exposed.
struct SpinHarmonicIndex {
  int s = 0;
  int ell = 0;
  int m = 0;

  SpinHarmonicIndex(int s_, int ell_, int m_) : s(s_), ell(ell_), m(m_) {
    if (s < 0) throw std::domain_error("SpinHarmonicIndex: spin weight must be >= 0");
    if (ell < s) throw std::domain_error("SpinHarmonicIndex: requires ell >= s");
    if (std::abs(m) > ell) throw std::domain_error("SpinHarmonicIndex: requires |m| <= ell");
  }
};

/// sY_{ell m}(theta,phi) = sqrt((2ell+1)/4pi) e^{i m phi} d^ell_{m,-s}(theta);
/// s = 0 recovers the ordinary spherical harmonics.
complex spin_harmonic(const SpinHarmonicIndex& idx, double theta, double phi);

/// d^ell_{m,-s}(theta) for all ell = s..lmax, m = -ell..ell, as one Risbo
/// pass; row ell holds 2ell+1 values ordered by m. Multiplying by
/// sqrt((2ell+1)/4pi) e^{i m phi} gives the harmonics at (theta, phi).
std::vector<std::vector<double>> spin_harmonic_theta_table(int s, int lmax, double theta);

/// Real orthonormal S^2 harmonic (used as a building block on S^3).
double real_sphere_harmonic(int ell, int m, double theta, double phi);

/// Real orthonormal hyperspherical harmonic of degree L on the unit S^3;
/// j = 1..(L+1)^2 enumerates the family as j-1 = ell^2 + (m+ell) over the
/// Gegenbauer-by-S^2 product basis. Input must be unit within 1e-9.
double sphere3_harmonic(int L, int j, const Vec4& s);

/// Same harmonic with (ell, m) addressed directly, 0 <= ell <= L, |m| <= ell.
double sphere3_harmonic_lm(int L, int ell, int m, const Vec4& s);

}  // namespace ballfield::specfun

#endif
