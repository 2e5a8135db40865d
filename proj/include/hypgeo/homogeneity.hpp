/*
 * Copyright 2026 The hypgeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Gauge functions (continuous, vanishing at 0, strictly increasing,
// subadditive) and the metrics obtained by composing them with a base
// metric, plus the three-point counterexample for projective space.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypgeo/core.hpp"

namespace hypgeo {

enum class GaugeDomain {
  Unit,  ///< [0, 1]
  Ray,   ///< [0, inf)
};

/// A gauge w on [0,1] or [0,inf). Continuity is assumed, not checked.
class OmegaGauge {
 public:
  using Function = std::function<double(double)>;

  /// `limit_at_infinity` is the caller-declared lim w(t) (may be +inf); it is
  /// only meaningful for Ray gauges.
  OmegaGauge(std::string name, GaugeDomain domain, Function eval,
             double limit_at_infinity);

  static OmegaGauge identity(GaugeDomain domain = GaugeDomain::Ray);
  static OmegaGauge linear(double slope, GaugeDomain domain = GaugeDomain::Ray);
  static OmegaGauge sqrt(GaugeDomain domain = GaugeDomain::Ray);
  static OmegaGauge square(GaugeDomain domain = GaugeDomain::Ray);
  /// t / (1 + t), limit 1.
  static OmegaGauge saturating(GaugeDomain domain = GaugeDomain::Ray);
  /// Linear interpolation through (t_k, w_k) starting at (0, 0), extended past
  /// the last knot with the last slope. Knot abscissae must strictly increase
  /// and ordinates must be non-decreasing; throws ParameterError otherwise.
  static OmegaGauge piecewise_linear(std::vector<std::pair<double, double>> knots,
                                     GaugeDomain domain = GaugeDomain::Ray);

  const std::string& name() const noexcept { return name_; }
  GaugeDomain domain() const noexcept { return domain_; }
  double limit_at_infinity() const noexcept { return limit_; }

  double operator()(double t) const { return eval_(t); }

 private:
  std::string name_;
  GaugeDomain domain_;
  Function eval_;
  double limit_;
};

struct GaugeViolation {
  enum class Kind { NonzeroAtZero, NotIncreasing, NotSubadditive };
  Kind kind;
  double x = 0.0;
  double y = 0.0;
  double wx = 0.0;
  double wy = 0.0;
  double wxy = 0.0;  ///< w(x + y) for subadditivity failures
};

std::string to_string(GaugeViolation::Kind kind);

struct GaugeReport {
  bool pass = true;
  std::optional<GaugeViolation> violation;  ///< first one found
};

struct GaugeGridOptions {
  int grid_size = 200;
  /// Ray gauges are sampled on [0, ray_cap].
  double ray_cap = 100.0;
};

/// Sample grid used by omega_validate: uniform on [0,1] for Unit gauges; 0
/// followed by a geometric progression from 1e-3 to ray_cap for Ray gauges.
std::vector<double> gauge_grid(GaugeDomain domain, const GaugeGridOptions& options);

/// Checks w(0) = 0, strict increase on adjacent grid points, and
/// w(x + y) <= w(x) + w(y) on every grid pair with x + y in the sampled range.
/// Violations are report content; only grid_size < 2 throws.
GaugeReport omega_validate(const OmegaGauge& w, const GaugeGridOptions& options = {});

enum class BaseMetric { Hyperbolic, Euclidean, Sphere };

/// w(d(x, y)) for the hyperbolic or Euclidean base metric. Requires a Ray
/// gauge; Sphere needs SpherePoints.
double snowflake_distance(const OmegaGauge& w, BaseMetric base, const Point& x, const Point& y);
/// w(d_s(x, y)); requires a Unit gauge.
double snowflake_distance(const OmegaGauge& w, const SpherePoint& x, const SpherePoint& y);

struct NormalizedGauge {
  OmegaGauge gauge;  ///< t -> w(alpha t)
  double alpha = 1.0;
};

/// Rescales a Ray gauge so that w'(1) = min(1, w(inf) / 2), solving
/// w(alpha) = min(1, w(inf) / 2) by bisection. Throws NumericError if 200
/// bisection steps do not converge.
NormalizedGauge normalize_euclidean_gauge(const OmegaGauge& w);

/// Smallest achievable max(|w(d(a,m)) - w(d(a,b))/2|, |w(d(m,b)) - w(d(a,b))/2|)
/// over `samples` points m evenly spaced along the hyperbolic segment [a, b].
/// Zero (up to rounding) for linear gauges, positive for non-linear ones.
double midpoint_defect(const OmegaGauge& w, const Point& a, const Point& b, int samples = 1001);

struct ProjectiveCounterexample {
  SpherePoint x;
  SpherePoint y;
  SpherePoint z1;
  SpherePoint z2;
  double xz1 = 0.0, xz2 = 0.0, yz1 = 0.0, yz2 = 0.0;
  /// min over the 8 sign patterns (e0, e1, e2) of the largest entry of
  /// |Gram(e0 x, e1 y, e2 z1) - Gram(x, y, z2)|.
  double sign_pattern_margin = 0.0;
  bool verified = false;
};

/// The two triples (x, y, z1), (x, y, z2) of S^n (n >= 2) with equal pairwise
/// projective distances but no orthogonal map relating them up to signs.
ProjectiveCounterexample projective_counterexample(int n);

/// Orthogonal matrix sending source[i] to target[i], or nullopt when the
/// Gram matrices differ by more than `gram_tolerance`.
std::optional<Matrix> sphere_fit_rotation(const std::vector<SpherePoint>& source,
                                          const std::vector<SpherePoint>& target,
                                          double gram_tolerance = 1e-9);

}  // namespace hypgeo
