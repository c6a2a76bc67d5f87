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

#ifndef BALLFIELD_COMMON_HPP
#define BALLFIELD_COMMON_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ballfield {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;
// surface areas of the unit spheres S^2 and S^3
inline constexpr double kOmega3 = 4.0 * kPi;
inline constexpr double kOmega4 = 2.0 * kPi * kPi;

using complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

/// Signaled when a hypergeometric lower parameter sits at (or within eps of)
/// a non-positive integer, where the series is undefined.
class degenerate_parameter : public std::domain_error {
 public:
  explicit degenerate_parameter(const std::string& what) : std::domain_error(what) {}
};

inline double norm3(const Vec3& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

inline double norm4(const Vec4& s) {
  return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3]);
}

inline double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Colatitude/longitude of a nonzero vector; phi normalized to [0, 2pi).
inline void to_angles(const Vec3& x, double& theta, double& phi) {
  const double r = norm3(x);
  if (r == 0.0) throw std::domain_error("to_angles: direction undefined at the origin");
  double c = x[2] / r;
  c = std::clamp(c, -1.0, 1.0);
  theta = std::acos(c);
  phi = std::atan2(x[1], x[0]);
  if (phi < 0.0) phi += kTwoPi;
}

}  // namespace ballfield

#endif
