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

#include "serialize.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace ballfield::serialize {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

}  // namespace

void angular_spectrum_csv(const matern_sphere::AngularSpectrum& spec, const std::string& path) {
  auto out = open_out(path);
  out << "ell,r1,r2,C\n";
  for (int ell = 0; ell <= spec.lmax; ++ell)
    out << ell << ',' << format_double(spec.r1) << ',' << format_double(spec.r2) << ','
        << format_double(spec.at(ell)) << '\n';
}

void angular_spectrum_json(const matern_sphere::AngularSpectrum& spec, const std::string& path) {
  json j;
  j["spin"] = spec.spin;
  j["model_tag"] = spec.model_tag;
  j["lmax"] = spec.lmax;
  j["entries"] = json::array();
  for (int ell = 0; ell <= spec.lmax; ++ell)
    j["entries"].push_back({{"ell", ell}, {"r1", spec.r1}, {"r2", spec.r2}, {"C", spec.at(ell)}});
  open_out(path) << j.dump(2) << '\n';
}

matern_sphere::AngularSpectrum angular_spectrum_from_json(const std::string& path) {
  json j;
  open_in(path) >> j;
  matern_sphere::AngularSpectrum spec;
  spec.spin = j.at("spin").get<int>();
  spec.model_tag = j.value("model_tag", "");
  const auto& entries = j.at("entries");
  spec.lmax = static_cast<int>(entries.size()) - 1;
  if (spec.lmax < 0) throw std::runtime_error("angular_spectrum_from_json: empty spectrum");
  spec.coeffs.resize(entries.size());
  for (const auto& e : entries) {
    const int ell = e.at("ell").get<int>();
    if (ell < 0 || ell > spec.lmax)
      throw std::runtime_error("angular_spectrum_from_json: non-contiguous ell");
    spec.coeffs[ell] = e.at("C").get<double>();
    spec.r1 = e.at("r1").get<double>();
    spec.r2 = e.at("r2").get<double>();
  }
  spec.validate();
  return spec;
}

void spin_spectrum_json(const spin_field::SpinSpectrumBall& spec, const std::string& path) {
  json j;
  j["spin"] = spec.spin();
  j["r0"] = spec.r0();
  j["entries"] = json::array();
  for (int ell = spec.spin(); ell <= spec.lmax(); ++ell)
    for (int n : spec.n_values(ell))
      j["entries"].push_back({{"ell", ell}, {"n", n}, {"A", spec.at(ell, n)}});
  open_out(path) << j.dump(2) << '\n';
}

spin_field::SpinSpectrumBall spin_spectrum_from_json(const std::string& path) {
  json j;
  open_in(path) >> j;
  const int spin = j.at("spin").get<int>();
  const double r0 = j.at("r0").get<double>();
  int lmax = spin, nmax = spin;
  for (const auto& e : j.at("entries")) {
    lmax = std::max(lmax, e.at("ell").get<int>());
    nmax = std::max(nmax, e.at("n").get<int>());
  }
  spin_field::SpinSpectrumBall spec(spin, r0, lmax, nmax);
  for (const auto& e : j.at("entries"))
    spec.set(e.at("ell").get<int>(), e.at("n").get<int>(), e.at("A").get<double>());
  return spec;
}

void spin_radial_cov_csv(const spin_field::SpinSpectrumBall& spec,
                         const std::vector<double>& radii, const std::string& path) {
  auto out = open_out(path);
  out << "ell,r1,r2,C\n";
  for (int ell = spec.spin(); ell <= spec.lmax(); ++ell)
    for (double r1 : radii)
      for (double r2 : radii)
        out << ell << ',' << format_double(r1) << ',' << format_double(r2) << ','
            << format_double(spin_field::spin_spectrum_to_radial_cov(spec, ell, r1, r2)) << '\n';
}

void cheb_spectrum_csv(const rho_field::ChebyshevSpectrum& spec, const std::string& path) {
  auto out = open_out(path);
  if (spec.k() == 1) {
    out << "ell,b\n";
    for (int ell = 0; ell <= spec.lmax(); ++ell)
      out << ell << ',' << format_double(spec.at(ell)) << '\n';
    return;
  }
  out << "ell";
  for (int i = 0; i < spec.k(); ++i)
    for (int j = 0; j < spec.k(); ++j) out << ",b_" << i << j;
  out << '\n';
  for (int ell = 0; ell <= spec.lmax(); ++ell) {
    out << ell;
    for (double v : spec.matrix_at(ell)) out << ',' << format_double(v);
    out << '\n';
  }
}

void cheb_spectrum_json(const rho_field::ChebyshevSpectrum& spec, const std::string& path) {
  json j;
  j["k"] = spec.k();
  j["lmax"] = spec.lmax();
  j["entries"] = json::array();
  for (int ell = 0; ell <= spec.lmax(); ++ell) {
    if (spec.k() == 1)
      j["entries"].push_back({{"ell", ell}, {"b", spec.at(ell)}});
    else
      j["entries"].push_back({{"ell", ell}, {"b", spec.matrix_at(ell)}});
  }
  open_out(path) << j.dump(2) << '\n';
}

rho_field::ChebyshevSpectrum cheb_spectrum_from_json(const std::string& path) {
  json j;
  open_in(path) >> j;
  const int k = j.at("k").get<int>();
  const int lmax = j.at("lmax").get<int>();
  rho_field::ChebyshevSpectrum spec(k, lmax);
  for (const auto& e : j.at("entries")) {
    const int ell = e.at("ell").get<int>();
    if (e.at("b").is_array())
      spec.set(ell, e.at("b").get<std::vector<double>>());
    else
      spec.set(ell, e.at("b").get<double>());
  }
  spec.validate();
  return spec;
}

void realization_csv(const sampler::FieldRealization& real, const std::string& path) {
  auto out = open_out(path);
  out << "x,y,z";
  for (int t = 0; t < real.n_realizations; ++t) out << ",re_" << t << ",im_" << t;
  out << '\n';
  for (std::size_t i = 0; i < real.points.size(); ++i) {
    out << format_double(real.points[i][0]) << ',' << format_double(real.points[i][1]) << ','
        << format_double(real.points[i][2]);
    for (int t = 0; t < real.n_realizations; ++t) {
      const complex v = real.value(t, i);
      out << ',' << format_double(v.real()) << ',' << format_double(v.imag());
    }
    out << '\n';
  }
}

namespace {

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::ifstream& in) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw std::runtime_error("realization_from_binary: truncated file");
  return v;
}

}  // namespace

void realization_binary(const sampler::FieldRealization& real, const std::string& path) {
  auto out = open_out(path, true);
  out.write("BFLD", 4);
  put<std::uint32_t>(out, 1);  // version
  put<std::uint64_t>(out, real.points.size());
  put<std::uint64_t>(out, static_cast<std::uint64_t>(real.n_realizations));
  put<std::uint8_t>(out, real.is_complex ? 1 : 0);
  put<std::uint64_t>(out, real.seed);
  for (const auto& p : real.points)
    for (double c : p) put(out, c);
  for (const complex& v : real.values) {
    put(out, v.real());
    put(out, v.imag());
  }
}

sampler::FieldRealization realization_from_binary(const std::string& path) {
  auto in = open_in(path, true);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "BFLD", 4) != 0)
    throw std::runtime_error("realization_from_binary: bad magic");
  const auto version = get<std::uint32_t>(in);
  if (version != 1) throw std::runtime_error("realization_from_binary: unknown version");
  sampler::FieldRealization real;
  const auto npoints = get<std::uint64_t>(in);
  const auto nreal = get<std::uint64_t>(in);
  real.is_complex = get<std::uint8_t>(in) != 0;
  real.seed = get<std::uint64_t>(in);
  real.n_realizations = static_cast<int>(nreal);
  real.points.resize(npoints);
  for (auto& p : real.points)
    for (double& c : p) c = get<double>(in);
  real.values.resize(npoints * nreal);
  for (complex& v : real.values) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    v = complex(re, im);
  }
  return real;
}

}  // namespace ballfield::serialize
