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

#ifndef BALLFIELD_SERIALIZE_HPP
#define BALLFIELD_SERIALIZE_HPP

#include <string>

#include "matern_sphere.hpp"
#include "rho_field.hpp"
#include "sampler.hpp"
#include "spin_field.hpp"

namespace ballfield::serialize {

// All CSV numbers are printed with 17 significant digits, so files rebuild
// the exact doubles on read.

std::string format_double(double v);

void angular_spectrum_csv(const matern_sphere::AngularSpectrum& spec, const std::string& path);
void angular_spectrum_json(const matern_sphere::AngularSpectrum& spec, const std::string& path);
matern_sphere::AngularSpectrum angular_spectrum_from_json(const std::string& path);

void spin_spectrum_json(const spin_field::SpinSpectrumBall& spec, const std::string& path);
spin_field::SpinSpectrumBall spin_spectrum_from_json(const std::string& path);
/// sC_ell(r1,r2) over a radius grid, rows (ell, r1, r2, C).
void spin_radial_cov_csv(const spin_field::SpinSpectrumBall& spec,
                         const std::vector<double>& radii, const std::string& path);

void cheb_spectrum_csv(const rho_field::ChebyshevSpectrum& spec, const std::string& path);
void cheb_spectrum_json(const rho_field::ChebyshevSpectrum& spec, const std::string& path);
rho_field::ChebyshevSpectrum cheb_spectrum_from_json(const std::string& path);

void realization_csv(const sampler::FieldRealization& real, const std::string& path);

/// Compact binary layout: magic "BFLD", u32 version, u64 point count,
/// u64 realization count, u8 complex flag, then point coordinates and
/// values as little-endian 64-bit floats.
void realization_binary(const sampler::FieldRealization& real, const std::string& path);
sampler::FieldRealization realization_from_binary(const std::string& path);

}  // namespace ballfield::serialize

#endif
