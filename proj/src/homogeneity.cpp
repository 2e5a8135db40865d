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

#include "hypgeo/homogeneity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "hypgeo/geodesy.hpp"
#include "hypgeo/linalg.hpp"

namespace hypgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative slack for the grid comparisons; absorbs rounding in w(x + y).
constexpr double kGridSlack = 1e-12;

Matrix gram(const std::array<Vector, 3>& v) {
  Matrix g(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g(i, j) = v[i].dot(v[j]);
  }
  return g;
}

}  // namespace

OmegaGauge::OmegaGauge(std::string name, GaugeDomain domain, Function eval,
                       double limit_at_infinity)
    : name_(std::move(name)), domain_(domain), eval_(std::move(eval)), limit_(limit_at_infinity) {
  if (!eval_) throw ParameterError("OmegaGauge: empty function");
}

OmegaGauge OmegaGauge::identity(GaugeDomain domain) {
  return OmegaGauge("identity", domain, [](double t) { return t; }, kInf);
}

OmegaGauge OmegaGauge::linear(double slope, GaugeDomain domain) {
  if (!(slope > 0.0)) throw ParameterError("OmegaGauge::linear: slope must be positive");
  return OmegaGauge("linear", domain, [slope](double t) { return slope * t; }, kInf);
}

OmegaGauge OmegaGauge::sqrt(GaugeDomain domain) {
  return OmegaGauge("sqrt", domain, [](double t) { return std::sqrt(t); }, kInf);
}

OmegaGauge OmegaGauge::square(GaugeDomain domain) {
  return OmegaGauge("square", domain, [](double t) { return t * t; }, kInf);
}

OmegaGauge OmegaGauge::saturating(GaugeDomain domain) {
  return OmegaGauge("saturating", domain, [](double t) { return t / (1.0 + t); }, 1.0);
}

OmegaGauge OmegaGauge::piecewise_linear(std::vector<std::pair<double, double>> knots,
                                        GaugeDomain domain) {
  if (knots.empty()) throw ParameterError("piecewise_linear: no knots");
  if (knots.front().first > 0.0) knots.insert(knots.begin(), {0.0, 0.0});
  if (knots.front().first < 0.0) throw ParameterError("piecewise_linear: negative abscissa");
  if (knots.size() < 2) throw ParameterError("piecewise_linear: need a knot beyond 0");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first) || knots[i].second < knots[i - 1].second) {
      throw ParameterError("piecewise_linear: table is not monotone");
    }
  }
  const auto& last = knots.back();
  const auto& before = knots[knots.size() - 2];
  const double tail_slope = (last.second - before.second) / (last.first - before.first);
  const double limit = tail_slope > 0.0 ? kInf : last.second;

  auto eval = [knots = std::move(knots), tail_slope](double t) {
    if (t >= knots.back().first) {
      return knots.back().second + tail_slope * (t - knots.back().first);
    }
    auto hi = std::upper_bound(knots.begin(), knots.end(), t,
                               [](double v, const auto& k) { return v < k.first; });
    if (hi == knots.begin()) return knots.front().second;
    auto lo = hi - 1;
    const double u = (t - lo->first) / (hi->first - lo->first);
    return lo->second + u * (hi->second - lo->second);
  };
  return OmegaGauge("table", domain, std::move(eval), limit);
}

std::string to_string(GaugeViolation::Kind kind) {
  switch (kind) {
    case GaugeViolation::Kind::NonzeroAtZero:
      return "nonzero_at_zero";
    case GaugeViolation::Kind::NotIncreasing:
      return "not_increasing";
    case GaugeViolation::Kind::NotSubadditive:
      return "not_subadditive";
  }
  return "unknown";
}

std::vector<double> gauge_grid(GaugeDomain domain, const GaugeGridOptions& options) {
  if (options.grid_size < 2) throw ParameterError("gauge_grid: grid_size must be >= 2");
  const auto n = static_cast<std::size_t>(options.grid_size);
  std::vector<double> grid(n, 0.0);
  if (domain == GaugeDomain::Unit) {
    for (std::size_t i = 1; i < n; ++i) {
      grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    }
    grid.back() = 1.0;
    return grid;
  }
  if (!(options.ray_cap > 0.0)) throw ParameterError("gauge_grid: ray_cap must be positive");
  if (n == 2) {
    grid[1] = options.ray_cap;
    return grid;
  }
  const double first = std::min(1e-3, options.ray_cap);
  const double ratio = std::pow(options.ray_cap / first, 1.0 / static_cast<double>(n - 2));
  for (std::size_t i = 1; i < n; ++i) {
    grid[i] = first * std::pow(ratio, static_cast<double>(i - 1));
  }
  grid.back() = options.ray_cap;
  return grid;
}

GaugeReport omega_validate(const OmegaGauge& w, const GaugeGridOptions& options) {
  const std::vector<double> grid = gauge_grid(w.domain(), options);
  const double top = grid.back();
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), [&](double t) { return w(t); });

  GaugeReport report;
  auto fail = [&](GaugeViolation v) {
    report.pass = false;
    report.violation = v;
    return report;
  };

  if (values[0] != 0.0) {
    return fail({GaugeViolation::Kind::NonzeroAtZero, 0.0, 0.0, values[0], values[0], 0.0});
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(values[i] < values[i + 1])) {
      return fail({GaugeViolation::Kind::NotIncreasing, grid[i], grid[i + 1], values[i],
                   values[i + 1], 0.0});
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      const double s = grid[i] + grid[j];
      if (s > top) break;
      const double ws = w(s);
      const double bound = values[i] + values[j];
      if (ws > bound + kGridSlack * (1.0 + std::abs(bound))) {
        return fail({GaugeViolation::Kind::NotSubadditive, grid[i], grid[j], values[i],
                     values[j], ws});
      }
    }
  }
  return report;
}

double snowflake_distance(const OmegaGauge& w, BaseMetric base, const Point& x,
                          const Point& y) {
  if (w.domain() != GaugeDomain::Ray) {
    throw DomainError("snowflake_distance: Euclidean and hyperbolic bases need a Ray gauge");
  }
  switch (base) {
    case BaseMetric::Hyperbolic:
      return w(hyperbolic_distance(x, y));
    case BaseMetric::Euclidean:
      return w(euclidean_distance(x, y));
    case BaseMetric::Sphere:
      break;
  }
  throw DomainError("snowflake_distance: the sphere base takes SpherePoints");
}

double snowflake_distance(const OmegaGauge& w, const SpherePoint& x, const SpherePoint& y) {
  if (w.domain() != GaugeDomain::Unit) {
    throw DomainError("snowflake_distance: the sphere base needs a Unit gauge");
  }
  return w(sphere_distance(x, y));
}

NormalizedGauge normalize_euclidean_gauge(const OmegaGauge& w) {
  if (w.domain() != GaugeDomain::Ray) {
    throw ParameterError("normalize_euclidean_gauge: gauge must live on [0, inf)");
  }
  const double limit = w.limit_at_infinity();
  if (!(limit > 0.0)) throw ParameterError("normalize_euclidean_gauge: w(inf) must be positive");
  const double target = std::min(1.0, 0.5 * limit);
  const double tol = 1e-12 * std::max(1.0, target);

  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; w(hi) < target; ++i) {
    if (i >= 2000) throw NumericError("normalize_euclidean_gauge: target not bracketed");
    lo = hi;
    hi *= 2.0;
  }
  int steps = 0;
  while (std::abs(w(hi) - target) > tol) {
    if (++steps > 200) {
      throw NumericError("normalize_euclidean_gauge: bisection did not converge");
    }
    const double mid = 0.5 * (lo + hi);
    if (w(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double alpha = hi;
  OmegaGauge scaled(
      w.name() + "_normalized", GaugeDomain::Ray, [w, alpha](double t) { return w(alpha * t); },
      limit);
  return NormalizedGauge{std::move(scaled), alpha};
}

double midpoint_defect(const OmegaGauge& w, const Point& a, const Point& b, int samples) {
  if (samples < 2) throw ParameterError("midpoint_defect: samples must be >= 2");
  const Geodesic line = line_through(a, b);
  const double d = hyperbolic_distance(a, b);
  const double half = 0.5 * snowflake_distance(w, BaseMetric::Hyperbolic, a, b);
  double best = kInf;
  for (int k = 0; k < samples; ++k) {
    const Point m = line(d * static_cast<double>(k) / static_cast<double>(samples - 1));
    const double e1 = std::abs(snowflake_distance(w, BaseMetric::Hyperbolic, a, m) - half);
    const double e2 = std::abs(snowflake_distance(w, BaseMetric::Hyperbolic, m, b) - half);
    best = std::min(best, std::max(e1, e2));
  }
  return best;
}

ProjectiveCounterexample projective_counterexample(int n) {
  if (n < 2) throw ParameterError("projective_counterexample: n must be >= 2");
  const int m = n + 1;
  auto padded = [m](std::initializer_list<double> head) {
    Vector v = Vector::Zero(m);
    int i = 0;
    for (double h : head) v[i++] = h;
    return SpherePoint(std::move(v));
  };
  const double r2 = std::sqrt(2.0) / 2.0;
  ProjectiveCounterexample out{
      padded({1.0, 0.0, 0.0}),
      padded({r2, r2, 0.0}),
      padded({0.25, 0.25, std::sqrt(14.0) / 4.0}),
      padded({0.25, -0.75, std::sqrt(6.0) / 4.0}),
  };
  const Vector& x = out.x.coords();
  const Vector& y = out.y.coords();
  const Vector& z1 = out.z1.coords();
  const Vector& z2 = out.z2.coords();
  out.xz1 = x.dot(z1);
  out.xz2 = x.dot(z2);
  out.yz1 = y.dot(z1);
  out.yz2 = y.dot(z2);

  const Matrix target = gram({x, y, z2});
  double margin = kInf;
  for (int mask = 0; mask < 8; ++mask) {
    const double e0 = (mask & 1) ? -1.0 : 1.0;
    const double e1 = (mask & 2) ? -1.0 : 1.0;
    const double e2 = (mask & 4) ? -1.0 : 1.0;
    const Matrix g = gram({e0 * x, e1 * y, e2 * z1});
    margin = std::min(margin, (g - target).cwiseAbs().maxCoeff());
  }
  out.sign_pattern_margin = margin;

  const ProjPoint px(out.x), py(out.y), pz1(out.z1), pz2(out.z2);
  const bool same_distances =
      std::abs(projective_distance(px, pz1) - projective_distance(px, pz2)) <= 1e-12 &&
      std::abs(projective_distance(py, pz1) - projective_distance(py, pz2)) <= 1e-12;
  out.verified = std::abs(out.xz1 - out.xz2) <= 1e-12 && std::abs(out.yz1 + out.yz2) <= 1e-12 &&
                 std::abs(out.yz1) > 1e-12 && same_distances && margin > 1e-9;
  return out;
}

std::optional<Matrix> sphere_fit_rotation(const std::vector<SpherePoint>& source,
                                          const std::vector<SpherePoint>& target,
                                          double gram_tolerance) {
  if (source.size() != target.size()) {
    throw ParameterError("sphere_fit_rotation: source and target lengths differ");
  }
  if (source.empty()) throw ParameterError("sphere_fit_rotation: no sample points");
  const int dim = source.front().ambient_dim();
  std::vector<Vector> from;
  std::vector<Vector> to;
  for (std::size_t i = 0; i < source.size(); ++i) {
    require_same_dim(source[i].ambient_dim(), dim, "sphere_fit_rotation");
    require_same_dim(target[i].ambient_dim(), dim, "sphere_fit_rotation");
    from.push_back(source[i].coords());
    to.push_back(target[i].coords());
  }
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = i + 1; j < from.size(); ++j) {
      if (std::abs(from[i].dot(from[j]) - to[i].dot(to[j])) > gram_tolerance) {
        return std::nullopt;
      }
    }
  }
  return linalg::extend_orthogonal(from, to, dim).map;
}

}  // namespace hypgeo
