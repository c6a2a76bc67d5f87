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

#ifndef BALLFIELD_QUADRATURE_HPP
#define BALLFIELD_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "common.hpp"

namespace ballfield::specfun {

enum class RuleKind { gauss_legendre, gauss_chebyshev2, semi_infinite };

/// Nodes strictly increasing, weights positive, equal lengths.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind = RuleKind::gauss_legendre;

  void validate() const;
};

/// n-point Gauss-Legendre rule on [a,b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// n-point Gauss-Chebyshev rule of the second kind: integrates
/// f(t) sqrt(1-t^2) on [-1,1] as sum w_i f(t_i).
QuadratureRule gauss_chebyshev2(int n);

/// Rule for [0,inf) through the rational substitution lambda = scale*u/(1-u),
/// u in [0,1); nodes are the mapped abscissae, weights absorb the Jacobian.
QuadratureRule semi_infinite_rule(double scale, int points_per_panel, int panels);

/// Weighted sum over the rule; throws if the integrand produces NaN.
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

/// Adaptive [0,inf) integration: panel count doubles until two successive
/// refinements agree to rel_tol, twice in a row. Throws on non-convergence
/// with the achieved estimate in the message. Suited to smooth decaying
/// integrands; oscillatory ones need integrate_oscillatory.
double integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                               double rel_tol = 1e-9, double abs_floor = 0.0);

/// [0,inf) integration for integrands oscillating with a known shortest
/// wavelength under a decaying envelope (Bessel products). Panels track the
/// oscillation, the range grows until the running chunks stay negligible
/// across quiet_window (which must cover the widest zero-trough of the
/// integrand, so a single trough cannot fake convergence), and the panel
/// width halves until two successive refinements agree to rel_tol. Throws
/// on non-convergence with the achieved estimate.
double integrate_oscillatory(const std::function<double(double)>& f, double wavelength,
                             double rel_tol = 1e-9, double abs_floor = 0.0,
                             double quiet_window = 0.0);

}  // namespace ballfield::specfun

#endif
