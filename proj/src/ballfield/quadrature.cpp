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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ballfield::specfun {

void QuadratureRule::validate() const {
  if (nodes.size() != weights.size())
    throw std::invalid_argument("QuadratureRule: node/weight length mismatch");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] <= 0.0) throw std::invalid_argument("QuadratureRule: weights must be positive");
    if (i > 0 && nodes[i] <= nodes[i - 1])
      throw std::invalid_argument("QuadratureRule: nodes must be strictly increasing");
  }
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.kind = RuleKind::gauss_legendre;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n, standard initial guess per root
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) {
        // one clean-up pass for the weight
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;  // roots found descend from +1; store ascending
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    // midpoint root of odd-degree P_n
    double p0 = 1.0, p1 = 0.0, x = 0.0;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[n / 2] = 0.0;
    rule.weights[n / 2] = 2.0 / (dp * dp);
  }
  // affine map to [a,b]
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = c + h * rule.nodes[i];
    rule.weights[i] *= h;
  }
  return rule;
}

QuadratureRule gauss_chebyshev2(int n) {
  if (n < 1) throw std::invalid_argument("gauss_chebyshev2: need at least one node");
  QuadratureRule rule;
  rule.kind = RuleKind::gauss_chebyshev2;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 1; k <= n; ++k) {
    const double t = kPi * k / (n + 1.0);
    rule.nodes[n - k] = std::cos(t);
    const double s = std::sin(t);
    rule.weights[n - k] = kPi / (n + 1.0) * s * s;
  }
  return rule;
}

QuadratureRule semi_infinite_rule(double scale, int points_per_panel, int panels) {
  if (scale <= 0.0) throw std::invalid_argument("semi_infinite_rule: scale must be positive");
  if (points_per_panel < 1 || panels < 1)
    throw std::invalid_argument("semi_infinite_rule: need positive panel counts");
  QuadratureRule base = gauss_legendre(points_per_panel, 0.0, 1.0);
  QuadratureRule rule;
  rule.kind = RuleKind::semi_infinite;
  rule.nodes.reserve(static_cast<std::size_t>(points_per_panel) * panels);
  rule.weights.reserve(rule.nodes.capacity());
  const double width = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    for (int i = 0; i < points_per_panel; ++i) {
      const double u = (p + base.nodes[i]) * width;
      const double om = 1.0 - u;
      rule.nodes.push_back(scale * u / om);
      rule.weights.push_back(base.weights[i] * width * scale / (om * om));
    }
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (std::isnan(v)) throw std::runtime_error("integrate: integrand returned NaN");
    sum += rule.weights[i] * v;
  }
  return sum;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                               double rel_tol, double abs_floor) {
  constexpr int kPointsPerPanel = 24;
  constexpr int kMaxPanels = 8192;
  double prev = 0.0;
  bool have_prev = false;
  int agreements = 0;
  for (int panels = 8; panels <= kMaxPanels; panels *= 2) {
    const QuadratureRule rule = semi_infinite_rule(scale, kPointsPerPanel, panels);
    const double cur = integrate(f, rule);
    if (have_prev) {
      const double tol = rel_tol * std::max(std::fabs(cur), abs_floor);
      if (std::fabs(cur - prev) <= tol) {
        if (++agreements >= 2) return cur;
      } else {
        agreements = 0;
      }
    }
    prev = cur;
    have_prev = true;
  }
  std::ostringstream msg;
  msg << "integrate_semi_infinite: no convergence to " << rel_tol
      << " within " << kMaxPanels << " panels; achieved estimate " << prev;
  throw std::runtime_error(msg.str());
}

namespace {

// one level of the oscillatory integrator: fixed panel width, range extended
// chunk by chunk until the running contribution is negligible. Neumaier
// compensation keeps the level-to-level comparison below the accumulation
// noise of the plain sum (millions of panels at the finest levels).
double oscillatory_level(const std::function<double(double)>& f, const QuadratureRule& base,
                         double h, double rel_tol, double abs_floor, double quiet_window,
                         bool& range_converged) {
  constexpr int kPanelsPerChunk = 32;
  constexpr int kMaxChunks = 65536;
  const double chunk_width = kPanelsPerChunk * h;
  // consecutive quiet chunks must span the widest trough of the integrand
  const int quiet_needed =
      std::max(3, static_cast<int>(std::ceil(quiet_window / chunk_width)));
  double total = 0.0, comp = 0.0;
  int quiet = 0;
  range_converged = false;
  for (int chunk = 0; chunk < kMaxChunks; ++chunk) {
    double csum = 0.0, ccomp = 0.0;
    const double base_x = chunk * chunk_width;
    for (int p = 0; p < kPanelsPerChunk; ++p) {
      const double a = base_x + p * h;
      double psum = 0.0;
      for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        const double v = f(a + base.nodes[i] * h);
        if (std::isnan(v)) throw std::runtime_error("integrate_oscillatory: integrand NaN");
        psum += base.weights[i] * h * v;
      }
      const double t = csum + psum;
      ccomp += std::fabs(csum) >= std::fabs(psum) ? (csum - t) + psum : (psum - t) + csum;
      csum = t;
    }
    csum += ccomp;
    const double t = total + csum;
    comp += std::fabs(total) >= std::fabs(csum) ? (total - t) + csum : (csum - t) + total;
    total = t;
    const double tiny = 1e-3 * rel_tol * std::max(std::fabs(total), abs_floor);
    if (std::fabs(csum) <= tiny) {
      if (++quiet >= quiet_needed) {
        range_converged = true;
        return total + comp;
      }
    } else {
      quiet = 0;
    }
  }
  return total + comp;
}

}  // namespace

double integrate_oscillatory(const std::function<double(double)>& f, double wavelength,
                             double rel_tol, double abs_floor, double quiet_window) {
  if (wavelength <= 0.0)
    throw std::invalid_argument("integrate_oscillatory: wavelength must be positive");
  // panels must resolve the envelope's own features as well as the
  // oscillation; unit width covers spectral densities with scales >= 1
  const double h0 = std::min(wavelength, 1.0);
  if (quiet_window <= 0.0) quiet_window = 4.0 * wavelength;
  const QuadratureRule base = gauss_legendre(12, 0.0, 1.0);
  double prev = 0.0;
  bool have_prev = false;
  int agreements = 0;
  double last = 0.0;
  for (int level = 0; level < 8; ++level) {
    bool ok = false;
    const double cur = oscillatory_level(f, base, h0 / (1 << level), rel_tol,
                                         abs_floor, quiet_window, ok);
    last = cur;
    if (ok && have_prev) {
      const double tol = rel_tol * std::max(std::fabs(cur), abs_floor);
      if (std::fabs(cur - prev) <= tol) {
        if (++agreements >= 1) return cur;
      } else {
        agreements = 0;
      }
    }
    prev = cur;
    have_prev = ok;
  }
  std::ostringstream msg;
  msg << "integrate_oscillatory: no convergence to " << rel_tol << "; achieved estimate "
      << last;
  throw std::runtime_error(msg.str());
}

}  // namespace ballfield::specfun
