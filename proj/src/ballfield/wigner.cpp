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

#include "wigner.hpp"

#include <cmath>

namespace ballfield::specfun {

EulerAngles EulerAngles::normalized() const {
  auto wrap = [](double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
  };
  if (beta < -1e-12 || beta > kPi + 1e-12)
    throw std::domain_error("EulerAngles: beta must lie in [0,pi]");
  EulerAngles out;
  out.alpha = wrap(alpha);
  out.beta = std::clamp(beta, 0.0, kPi);
  out.gamma = wrap(gamma);
  return out;
}

Mat3 rotation_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

Mat3 rotation_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Mat3 transpose(const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

Mat3 rotation_zyz(const EulerAngles& e) {
  return mat_mul(rotation_z(e.alpha), mat_mul(rotation_y(e.beta), rotation_z(e.gamma)));
}

EulerAngles euler_from_rotation(const Mat3& r) {
  EulerAngles e;
  const double cb = std::clamp(r[2][2], -1.0, 1.0);
  e.beta = std::acos(cb);
  const double sb = std::sqrt(std::max(0.0, 1.0 - cb * cb));
  if (sb > 1e-9) {
    e.alpha = std::atan2(r[1][2], r[0][2]);
    e.gamma = std::atan2(r[2][1], -r[2][0]);
  } else {
    // gimbal: only alpha +/- gamma is determined; fix gamma = 0
    e.gamma = 0.0;
    if (cb > 0.0)
      e.alpha = std::atan2(r[1][0], r[0][0]);
    else
      e.alpha = std::atan2(-r[1][0], -r[0][0]);
  }
  return e.normalized();
}

WignerD::WignerD(int ell, std::vector<double> entries) : ell_(ell), d_(std::move(entries)) {
  const std::size_t dim = static_cast<std::size_t>(2 * ell + 1);
  if (d_.size() != dim * dim) throw std::invalid_argument("WignerD: bad entry count");
}

double WignerD::at(int m, int n) const {
  if (std::abs(m) > ell_ || std::abs(n) > ell_)
    throw std::domain_error("WignerD::at: index out of range");
  const int dim = 2 * ell_ + 1;
  return d_[static_cast<std::size_t>(m + ell_) * dim + (n + ell_)];
}

std::vector<WignerD> wigner_d_all(int lmax, double beta) {
  if (lmax < 0) throw std::domain_error("wigner_d_all: lmax must be >= 0");
  if (beta < -1e-12 || beta > kPi + 1e-12)
    throw std::domain_error("wigner_d_all: beta must lie in [0,pi]");
  beta = std::clamp(beta, 0.0, kPi);
  const double p = std::cos(0.5 * beta);
  const double q = std::sin(0.5 * beta);

  std::vector<WignerD> out;
  out.reserve(lmax + 1);
  out.emplace_back(0, std::vector<double>{1.0});

  // Build up through half-integer j; cur holds d^{j} on a (j2+1)^2 grid with
  // row/col index k = m + j in 0..j2:
  //   d^j[k'][k] = ( sqrt(k' k) p d[k'-1][k-1] - sqrt(k'(j2-k)) q d[k'-1][k]
  //               + sqrt((j2-k') k) q d[k'][k-1] + sqrt((j2-k')(j2-k)) p d[k'][k] ) / j2
  // with d = d^{j-1/2} and out-of-range entries zero.
  std::vector<double> cur{1.0}, next;
  for (int j2 = 1; j2 <= 2 * lmax; ++j2) {
    const int dim = j2 + 1;
    next.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    const double inv = 1.0 / j2;
    auto prev_at = [&](int kp, int k) -> double {
      if (kp < 0 || k < 0 || kp >= j2 || k >= j2) return 0.0;
      return cur[static_cast<std::size_t>(kp) * j2 + k];
    };
    for (int kp = 0; kp < dim; ++kp) {
      for (int k = 0; k < dim; ++k) {
        double v = 0.0;
        if (kp > 0 && k > 0) v += std::sqrt(double(kp) * k) * p * prev_at(kp - 1, k - 1);
        if (kp > 0 && k < j2) v -= std::sqrt(double(kp) * (j2 - k)) * q * prev_at(kp - 1, k);
        if (kp < j2 && k > 0) v += std::sqrt(double(j2 - kp) * k) * q * prev_at(kp, k - 1);
        if (kp < j2 && k < j2) v += std::sqrt(double(j2 - kp) * (j2 - k)) * p * prev_at(kp, k);
        next[static_cast<std::size_t>(kp) * dim + k] = v * inv;
      }
    }
    cur.swap(next);
    if (j2 % 2 == 0) out.emplace_back(j2 / 2, cur);
  }
  return out;
}

WignerD wigner_d(int ell, double beta) {
  auto all = wigner_d_all(ell, beta);
  return std::move(all.back());
}

}  // namespace ballfield::specfun
