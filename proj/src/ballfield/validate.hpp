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

#ifndef BALLFIELD_VALIDATE_HPP
#define BALLFIELD_VALIDATE_HPP

#include <string>
#include <vector>

namespace ballfield::validate {

struct CheckResult {
  std::string check;
  bool passed = false;
  double worst_error = 0.0;
  double tolerance = 0.0;
};

/// Known suites: specfun, matern, spin, rho, montecarlo, all.
bool known_suite(const std::string& suite);

/// Run a suite; throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite);

/// JSON report [{check, status, worst_error, tolerance}, ...].
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace ballfield::validate

#endif
