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

#ifndef BALLFIELD_RNG_HPP
#define BALLFIELD_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ballfield::rng {

// Philox4x32-10 (Salmon et al., SC 2011): a pure function of (key, counter),
// so draws are addressable by (seed, mode, realization) with no sequential
// state and no ordering dependence across threads.

struct Counter {
  std::uint32_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
};

inline void philox_round(Counter& c, std::uint32_t& k0, std::uint32_t& k1) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c.c0;
  const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c.c2;
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c = Counter{hi1 ^ c.c1 ^ k0, lo1, hi0 ^ c.c3 ^ k1, lo0};
  k0 += 0x9E3779B9u;
  k1 += 0xBB67AE85u;
}

inline Counter philox4x32_10(Counter c, std::uint64_t key) {
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  for (int i = 0; i < 10; ++i) philox_round(c, k0, k1);
  return c;
}

/// Uniform double in (0,1) from two 32-bit words (53 mantissa bits).
inline double uniform_open(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

/// Two independent standard normals addressed by (seed, stream, realization,
/// draw); Box-Muller on one Philox block.
inline void normal_pair(std::uint64_t seed, std::uint64_t stream, std::uint32_t realization,
                        std::uint32_t draw, double& z0, double& z1) {
  Counter c;
  c.c0 = draw;
  c.c1 = static_cast<std::uint32_t>(stream);
  c.c2 = static_cast<std::uint32_t>(stream >> 32);
  c.c3 = realization;
  const Counter r = philox4x32_10(c, seed);
  const double u1 = uniform_open(r.c0, r.c1);
  const double u2 = uniform_open(r.c2, r.c3);
  const double rad = std::sqrt(-2.0 * std::log(u1));
  z0 = rad * std::cos(2.0 * 3.14159265358979323846 * u2);
  z1 = rad * std::sin(2.0 * 3.14159265358979323846 * u2);
}

/// Stream id for a (tag, ell, m-or-j, n) mode address.
inline std::uint64_t mode_stream(std::uint32_t tag, std::uint32_t a, std::uint32_t b,
                                 std::uint32_t c) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull * (tag + 1);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  };
  mix(a);
  mix(b);
  mix(c);
  return h;
}

}  // namespace ballfield::rng

#endif
