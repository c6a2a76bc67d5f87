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

// ballfield command line: spectra, covariance tables, simulation and the
// validation suites, over the C API of the shared library.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballfield.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(const std::string& msg, int code = kExitFailure) {
  std::cerr << "ballfield: " << msg << "\n";
  std::exit(code);
}

void check(int rc, const char* what) {
  if (rc != BF_OK) fail(std::string(what) + ": " + bf_last_error());
}

std::string iso_timestamp() {
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Options {
  std::string command;
  std::string model;
  double sigma2 = 1.0, a = 10.0, nu = -1.0;
  double r0 = 1.0, C = 1.0, r = 1.0;
  std::string r_range;
  int lmax = 10, nmax = -1;
  std::uint64_t seed = 0;
  int n_realizations = 1;
  int grid_theta = 0, grid_phi = 0;
  int grid_n = 41;
  double grid_extent = 0.95;
  std::vector<std::string> point_args;
  std::string points_file;
  std::string spin_spec_file;
  std::string out = "ballfield_out.csv";
  std::string suite = "all";
  std::string report;
  bool binary = false;
  bool estimate_spectrum = false;
};

std::vector<double> parse_range(const std::string& s) {
  // "start:stop:step" or a single value
  std::vector<double> vals;
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) {
    vals.push_back(std::stod(s));
    return vals;
  }
  const auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string::npos) fail("bad range '" + s + "', expected start:stop:step", kExitUsage);
  const double start = std::stod(s.substr(0, c1));
  const double stop = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(s.substr(c2 + 1));
  if (step <= 0.0) fail("range step must be positive", kExitUsage);
  for (double v = start; v <= stop + 1e-12 * step; v += step) vals.push_back(v);
  if (vals.empty()) fail("empty range '" + s + "'", kExitUsage);
  return vals;
}

std::vector<double> gather_points(const Options& opt) {
  std::vector<double> xyz;
  for (const auto& p : opt.point_args) {
    double x, y, z;
    if (std::sscanf(p.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
      fail("bad --point '" + p + "', expected x,y,z", kExitUsage);
    xyz.insert(xyz.end(), {x, y, z});
  }
  if (!opt.points_file.empty()) {
    std::ifstream in(opt.points_file);
    if (!in) fail("cannot read points file " + opt.points_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
      double x, y, z;
      if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &z) == 3)
        xyz.insert(xyz.end(), {x, y, z});
    }
  }
  return xyz;
}

void require_model_params(const Options& opt) {
  if (opt.nu < 0.0)
    fail("model " + opt.model + " requires --nu (smoothness parameter)", kExitUsage);
  if (opt.sigma2 <= 0.0 || opt.a <= 0.0 || opt.nu <= 0.0)
    fail("--sigma2, --a, --nu must be positive", kExitUsage);
}

json params_json(const Options& opt) {
  json p;
  p["model"] = opt.model;
  p["sigma2"] = opt.sigma2;
  p["a"] = opt.a;
  p["nu"] = opt.nu;
  p["r0"] = opt.r0;
  p["C"] = opt.C;
  p["r"] = opt.r;
  if (!opt.r_range.empty()) p["r_range"] = opt.r_range;
  p["lmax"] = opt.lmax;
  p["nmax"] = opt.nmax;
  p["n"] = opt.n_realizations;
  p["grid_theta"] = opt.grid_theta;
  p["grid_phi"] = opt.grid_phi;
  p["grid_n"] = opt.grid_n;
  p["grid_extent"] = opt.grid_extent;
  p["points"] = opt.point_args;
  p["points_file"] = opt.points_file;
  p["spin_spec_file"] = opt.spin_spec_file;
  p["binary"] = opt.binary;
  p["estimate_spectrum"] = opt.estimate_spectrum;
  p["suite"] = opt.suite;
  p["report"] = opt.report;
  return p;
}

void write_manifest(const Options& opt, const std::vector<std::string>& outputs) {
  json m;
  m["command"] = opt.command;
  m["model"] = opt.model;
  m["params"] = params_json(opt);
  m["outputs"] = outputs;
  m["seed"] = opt.seed;
  m["timestamp"] = iso_timestamp();
  const std::string path = opt.out + ".manifest.json";
  std::ofstream out(path);
  if (!out) fail("cannot write manifest " + path);
  out << m.dump(2) << '\n';
}

// ------------------------------------------------------------------ spectrum

int cmd_spectrum(const Options& opt) {
  require_model_params(opt);
  std::ofstream out(opt.out);
  if (!out) fail("cannot open output " + opt.out);
  if (opt.model == "matern_sphere") {
    const std::vector<double> radii =
        opt.r_range.empty() ? std::vector<double>{opt.r} : parse_range(opt.r_range);
    out << "ell,r,C_closed,C_quadrature,rel_diff\n";
    for (int ell = 0; ell <= opt.lmax; ++ell)
      for (double r : radii) {
        double closed = 0.0, quad = 0.0;
        check(bf_angular_spectrum_matern(ell, r, opt.sigma2, opt.a, opt.nu, &closed),
              "angular_spectrum_matern");
        check(bf_angular_spectrum_numeric(ell, r, r, opt.sigma2, opt.a, opt.nu, &quad),
              "angular_spectrum_numeric");
        const double rel = std::fabs(closed - quad) / std::max(std::fabs(quad), 1e-300);
        out << ell << ',' << fmt(r) << ',' << fmt(closed) << ',' << fmt(quad) << ',' << fmt(rel)
            << '\n';
      }
  } else if (opt.model == "rho_matern") {
    out << "ell,b_closed,b_quadrature,rel_diff\n";
    for (int ell = 0; ell <= opt.lmax; ++ell) {
      double closed = 0.0, quad = 0.0;
      check(bf_b_ell_matern_closed(ell, opt.sigma2, opt.a, opt.nu, &closed),
            "b_ell_matern_closed");
      check(bf_b_ell_matern_numeric(ell, opt.sigma2, opt.a, opt.nu, &quad),
            "b_ell_matern_numeric");
      const double rel = std::fabs(closed - quad) / std::max(std::fabs(quad), 1e-300);
      out << ell << ',' << fmt(closed) << ',' << fmt(quad) << ',' << fmt(rel) << '\n';
    }
  } else {
    fail("spectrum supports models matern_sphere and rho_matern, got " + opt.model, kExitUsage);
  }
  out.close();
  write_manifest(opt, {opt.out});
  return kExitOk;
}

// ---------------------------------------------------------------- covariance

int cmd_covariance(const Options& opt) {
  require_model_params(opt);
  std::ofstream out(opt.out);
  if (!out) fail("cannot open output " + opt.out);
  const int n = opt.grid_n;
  const double ext = opt.grid_extent * opt.r0;
  const double x0[3] = {0.0, 0.0, 0.0};
  const bool with_rho = opt.model == "rho_matern";
  if (!with_rho && opt.model != "matern_sphere")
    fail("covariance supports models matern_sphere and rho_matern, got " + opt.model,
         kExitUsage);
  out << (with_rho ? "y1,y2,euclidean,rho,difference\n" : "y1,y2,value\n");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double y1 = -ext + 2.0 * ext * i / (n - 1.0);
      const double y2 = -ext + 2.0 * ext * j / (n - 1.0);
      if (y1 * y1 + y2 * y2 >= ext * ext * (1.0 + 1e-12)) continue;  // keep to the ball
      const double y[3] = {y1, y2, 0.0};
      double euclid = 0.0;
      check(bf_matern_covariance(std::sqrt(y1 * y1 + y2 * y2), opt.sigma2, opt.a, opt.nu,
                                 &euclid),
            "matern_covariance");
      if (with_rho) {
        double rho_cov = 0.0;
        check(bf_matern_rho_covariance(x0, y, opt.sigma2, opt.a, opt.nu, opt.r0, opt.C,
                                       &rho_cov),
              "matern_rho_covariance");
        out << fmt(y1) << ',' << fmt(y2) << ',' << fmt(euclid) << ',' << fmt(rho_cov) << ','
            << fmt(euclid - rho_cov) << '\n';
      } else {
        out << fmt(y1) << ',' << fmt(y2) << ',' << fmt(euclid) << '\n';
      }
    }
  out.close();
  write_manifest(opt, {opt.out});
  return kExitOk;
}

// ------------------------------------------------------------------ simulate

int cmd_simulate(const Options& opt) {
  bf_realization* real = nullptr;
  std::vector<std::string> outputs;
  if (opt.model == "matern_sphere") {
    require_model_params(opt);
    bf_angular_spectrum* spec = nullptr;
    check(bf_angular_spectrum_build_matern(opt.sigma2, opt.a, opt.nu, opt.r, opt.lmax, &spec),
          "angular_spectrum_build_matern");
    if (opt.grid_theta > 0 && opt.grid_phi > 0) {
      check(bf_simulate_sphere_grid(spec, opt.seed, opt.n_realizations, opt.grid_theta,
                                    opt.grid_phi, &real),
            "simulate_sphere_grid");
    } else {
      const auto xyz = gather_points(opt);
      if (xyz.empty())
        fail("simulate needs --grid-theta/--grid-phi or --point/--points", kExitUsage);
      check(bf_simulate_sphere(spec, opt.seed, opt.n_realizations, xyz.data(), xyz.size() / 3,
                               &real),
            "simulate_sphere");
    }
    bf_angular_spectrum_free(spec);
  } else if (opt.model == "spin_ball") {
    if (opt.spin_spec_file.empty())
      fail("model spin_ball requires --spin-spec (SpinSpectrumBall JSON)", kExitUsage);
    bf_spin_spectrum* spec = nullptr;
    check(bf_spin_spectrum_load_json(opt.spin_spec_file.c_str(), &spec),
          "spin_spectrum_load_json");
    const auto xyz = gather_points(opt);
    if (xyz.empty()) fail("simulate spin_ball needs --point/--points", kExitUsage);
    check(bf_simulate_ball_spin(spec, opt.seed, opt.n_realizations, xyz.data(), xyz.size() / 3,
                                &real),
          "simulate_ball_spin");
    bf_spin_spectrum_free(spec);
  } else if (opt.model == "rho_matern") {
    require_model_params(opt);
    bf_cheb_spectrum* spec = nullptr;
    check(bf_cheb_spectrum_matern_projection(opt.sigma2, opt.a, opt.nu, opt.r0, opt.C, opt.lmax,
                                             &spec),
          "cheb_spectrum_matern_projection");
    const auto xyz = gather_points(opt);
    if (xyz.empty()) fail("simulate rho_matern needs --point/--points", kExitUsage);
    check(bf_simulate_rho(spec, opt.r0, opt.seed, opt.n_realizations, xyz.data(), xyz.size() / 3,
                          &real),
          "simulate_rho");
    bf_cheb_spectrum_free(spec);
  } else {
    fail("simulate supports matern_sphere, spin_ball, rho_matern; got " + opt.model, kExitUsage);
  }

  check(bf_realization_save_csv(real, opt.out.c_str()), "realization_save_csv");
  outputs.push_back(opt.out);
  if (opt.binary) {
    const std::string bin = opt.out + ".bin";
    check(bf_realization_save_binary(real, bin.c_str()), "realization_save_binary");
    outputs.push_back(bin);
  }
  if (opt.estimate_spectrum) {
    const int lmax_est = std::min(opt.lmax, (std::min(opt.grid_theta, opt.grid_phi) - 1) / 2);
    std::vector<double> c(lmax_est + 1), se(lmax_est + 1);
    check(bf_realization_estimate_spectrum(real, lmax_est, c.data(), se.data()),
          "estimate_spectrum");
    const std::string est = opt.out + ".spectrum.csv";
    std::ofstream eo(est);
    if (!eo) fail("cannot open output " + est);
    eo << "ell,C_hat,SE\n";
    for (int ell = 0; ell <= lmax_est; ++ell)
      eo << ell << ',' << fmt(c[ell]) << ',' << fmt(se[ell]) << '\n';
    outputs.push_back(est);
  }
  bf_realization_free(real);
  write_manifest(opt, outputs);
  return kExitOk;
}

// ------------------------------------------------------------------ validate

int cmd_validate(const Options& opt) {
  int n_failed = 0;
  const int rc = bf_validate_run(opt.suite.c_str(), opt.report.empty() ? nullptr
                                                                       : opt.report.c_str(),
                                 &n_failed);
  if (rc == BF_EINVAL) {
    std::cerr << "ballfield: " << bf_last_error() << "\n";
    return kExitUsage;
  }
  if (rc != BF_OK) {
    std::cerr << "ballfield: validate: " << bf_last_error() << "\n";
    return kExitFailure;
  }
  if (opt.report.empty()) {
    std::cout << "suite " << opt.suite << ": " << (n_failed == 0 ? "all checks passed"
                                                                 : "checks FAILED")
              << "\n";
  } else {
    std::ifstream in(opt.report);
    json j;
    in >> j;
    for (const auto& r : j)
      std::cout << r.at("check").get<std::string>() << ": "
                << r.at("status").get<std::string>() << " (worst "
                << r.at("worst_error").get<double>() << ", tol "
                << r.at("tolerance").get<double>() << ")\n";
    Options manifest_opt = opt;
    manifest_opt.out = opt.report;
    write_manifest(manifest_opt, {opt.report});
  }
  return n_failed == 0 ? kExitOk : kExitFailure;
}

// --------------------------------------------------------------------- rerun

Options options_from_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read manifest " + path);
  json m;
  in >> m;
  Options opt;
  opt.command = m.at("command").get<std::string>();
  const json& p = m.at("params");
  opt.model = p.value("model", "");
  opt.sigma2 = p.value("sigma2", 1.0);
  opt.a = p.value("a", 10.0);
  opt.nu = p.value("nu", -1.0);
  opt.r0 = p.value("r0", 1.0);
  opt.C = p.value("C", 1.0);
  opt.r = p.value("r", 1.0);
  opt.r_range = p.value("r_range", "");
  opt.lmax = p.value("lmax", 10);
  opt.nmax = p.value("nmax", -1);
  opt.seed = m.value("seed", 0ull);
  opt.n_realizations = p.value("n", 1);
  opt.grid_theta = p.value("grid_theta", 0);
  opt.grid_phi = p.value("grid_phi", 0);
  opt.grid_n = p.value("grid_n", 41);
  opt.grid_extent = p.value("grid_extent", 0.95);
  opt.point_args = p.value("points", std::vector<std::string>{});
  opt.points_file = p.value("points_file", "");
  opt.spin_spec_file = p.value("spin_spec_file", "");
  opt.binary = p.value("binary", false);
  opt.estimate_spectrum = p.value("estimate_spectrum", false);
  opt.suite = p.value("suite", "all");
  opt.report = p.value("report", "");
  const auto outputs = m.at("outputs").get<std::vector<std::string>>();
  if (!outputs.empty()) opt.out = outputs.front();
  return opt;
}

int dispatch(const Options& opt);

int cmd_rerun(const std::string& manifest_path) {
  const Options opt = options_from_manifest(manifest_path);
  return dispatch(opt);
}

int dispatch(const Options& opt) {
  if (opt.command == "spectrum") return cmd_spectrum(opt);
  if (opt.command == "covariance") return cmd_covariance(opt);
  if (opt.command == "simulate") return cmd_simulate(opt);
  if (opt.command == "validate") return cmd_validate(opt);
  fail("unknown command " + opt.command, kExitUsage);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::string manifest_path;

  CLI::App app{"spectral theory of random fields in the 3-ball"};
  // flat key=value config file with subcommand-dotted keys
  // (e.g. spectrum.nu=0.5); explicit flags win
  app.set_config("--config");
  app.require_subcommand(1);

  auto add_model_flags = [&opt](CLI::App* cmd) {
    cmd->add_option("--model", opt.model, "model name")->required();
    cmd->add_option("--sigma2", opt.sigma2, "variance");
    cmd->add_option("--a", opt.a, "inverse scale");
    cmd->add_option("--nu", opt.nu, "smoothness");
    cmd->add_option("--r0", opt.r0, "ball radius");
    cmd->add_option("--C", opt.C, "rho distance scale");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "angular / Chebyshev spectrum tables");
  add_model_flags(spectrum);
  spectrum->add_option("--lmax", opt.lmax, "maximum degree");
  spectrum->add_option("--r", opt.r_range, "radius or start:stop:step range");
  spectrum->add_option("--out", opt.out, "output CSV path");

  CLI::App* covariance = app.add_subcommand("covariance", "covariance surface tables");
  add_model_flags(covariance);
  covariance->add_option("--grid-n", opt.grid_n, "grid points per axis");
  covariance->add_option("--grid-extent", opt.grid_extent, "grid half-width as fraction of r0");
  covariance->add_option("--out", opt.out, "output CSV path");

  CLI::App* simulate = app.add_subcommand("simulate", "Gaussian realizations");
  add_model_flags(simulate);
  simulate->add_option("--r", opt.r, "sphere radius (matern_sphere)");
  simulate->add_option("--lmax", opt.lmax, "truncation degree");
  simulate->add_option("--nmax", opt.nmax, "radial truncation (spin_ball)");
  simulate->add_option("--seed", opt.seed, "RNG seed");
  simulate->add_option("--n", opt.n_realizations, "number of realizations");
  simulate->add_option("--grid-theta", opt.grid_theta, "Gauss-Legendre colatitude nodes");
  simulate->add_option("--grid-phi", opt.grid_phi, "uniform longitude nodes");
  simulate->add_option("--point", opt.point_args, "evaluation point x,y,z (repeatable)");
  simulate->add_option("--points", opt.points_file, "CSV file of evaluation points");
  simulate->add_option("--spin-spec", opt.spin_spec_file, "SpinSpectrumBall JSON (spin_ball)");
  simulate->add_flag("--binary", opt.binary, "also write the binary layout");
  simulate->add_flag("--estimate-spectrum", opt.estimate_spectrum,
                     "estimate C_ell from the realizations (structured grid)");
  simulate->add_option("--out", opt.out, "output CSV path");

  CLI::App* validate = app.add_subcommand("validate", "run validation suites");
  validate->add_option("--suite", opt.suite,
                       "specfun | matern | spin | rho | montecarlo | all");
  validate->add_option("--report", opt.report, "JSON report path");

  CLI::App* rerun = app.add_subcommand("rerun", "re-run a saved manifest");
  rerun->add_option("manifest", manifest_path, "manifest JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      opt.command = "spectrum";
      return cmd_spectrum(opt);
    }
    if (covariance->parsed()) {
      opt.command = "covariance";
      return cmd_covariance(opt);
    }
    if (simulate->parsed()) {
      opt.command = "simulate";
      return cmd_simulate(opt);
    }
    if (validate->parsed()) {
      opt.command = "validate";
      return cmd_validate(opt);
    }
    if (rerun->parsed()) return cmd_rerun(manifest_path);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return kExitUsage;
}
