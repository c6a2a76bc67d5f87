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

#ifndef BALLFIELD_WIGNER_HPP
#define BALLFIELD_WIGNER_HPP

#include <vector>

#include "common.hpp"

namespace ballfield::specfun {

/// zyz Euler angles: first a rotation by gamma about z, then beta about y,
/// then alpha about the new z; as matrices g = Rz(alpha) Ry(beta) Rz(gamma).
struct EulerAngles {
  double alpha = 0.0;  // [0, 2pi)
  double beta = 0.0;   // [0, pi]
  double gamma = 0.0;  // [0, 2pi)

  /// Wrap alpha and gamma into [0,2pi); beta must already lie in [0,pi].
  EulerAngles normalized() const;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 rotation_z(double angle);
Mat3 rotation_y(double angle);
Mat3 rotation_zyz(const EulerAngles& e);
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& m);

/// Extract zyz Euler angles from a rotation matrix. The beta in {0,pi}
/// degeneracy is resolved by fixing gamma = 0.
EulerAngles euler_from_rotation(const Mat3& r);

/// Wigner little-d matrix d^ell_{m,n}(beta), stored row-major with
/// m,n = -ell..ell.
class WignerD {
 public:
  WignerD(int ell, std::vector<double> entries);

  int ell() const { return ell_; }
  double at(int m, int n) const;

 private:
  int ell_;
  std::vector<double> d_;
};

/// All little-d matrices for ell = 0..lmax at angle beta, by the Risbo
/// half-step recursion (stable far beyond the factorial-sum formula).
std::vector<WignerD> wigner_d_all(int lmax, double beta);

/// Single matrix d^ell(beta).
WignerD wigner_d(int ell, double beta);

}  // namespace ballfield::specfun

#endif
