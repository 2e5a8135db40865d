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

#include "hypgeo/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypgeo/linalg.hpp"

namespace hypgeo {

namespace {

constexpr double kOrthogonalityTolerance = 1e-9;

// Rebuilds (a, U) from any map known to be a hyperbolic isometry: a = f(0),
// and T_{-a} o f is the orthogonal map whose columns are T_{-a}(f(e_i)).
template <typename Map>
Isometry decompose(const Map& f, int dim) {
  Point a = f(Point::zero(dim));
  const Point minus_a = -a;
  Matrix u(dim, dim);
  for (int i = 0; i < dim; ++i) {
    u.col(i) = translate(minus_a, f(Point::basis(dim, i))).coords();
  }
  return Isometry(std::move(a), linalg::polar_project(u));
}

// Bound on the Gram-entry error implied by distance errors of size
// rel * (1 + d), from <P_i,P_j> = cosh d_0i cosh d_0j - cosh d_ij.
double gram_tolerance(double rel, double d0i, double d0j, double dij) {
  const double bound = (1.0 + d0i) * std::sinh(d0i) * std::cosh(d0j) +
                       (1.0 + d0j) * std::cosh(d0i) * std::sinh(d0j) +
                       (1.0 + dij) * std::sinh(dij);
  return 2.0 * rel * (1.0 + bound);
}

// cosh(c arcosh(t)). For integer c this is the Chebyshev polynomial T_c(t),
// evaluated by the three-term recurrence (no cancellation for t >= 1).
double cosh_multiple(double c, double t) {
  if (c == std::floor(c) && c <= 64.0) {
    double prev = 1.0;
    double cur = t;
    for (int k = 1; k < static_cast<int>(c); ++k) {
      const double next = 2.0 * t * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  return std::cosh(c * std::acosh(t));
}

}  // namespace

Point translate(const Point& y, const Point& x) {
  require_same_dim(x.dim(), y.dim(), "translate");
  const double alpha = bracket(x) + x.coords().dot(y.coords()) / (bracket(y) + 1.0);
  return Point(Vector(x.coords() + alpha * y.coords()));
}

Isometry::Isometry(Point a, Matrix u) : a_(std::move(a)), u_(std::move(u)) {
  if (u_.rows() != a_.dim() || u_.cols() != a_.dim()) {
    throw DimensionError("Isometry: U must be " + std::to_string(a_.dim()) + "x" +
                         std::to_string(a_.dim()));
  }
  if (!u_.allFinite() || linalg::orthogonality_defect(u_) > kOrthogonalityTolerance) {
    throw DomainError("Isometry: U is not orthogonal");
  }
}

Isometry Isometry::identity(int dim) {
  return Isometry(Point::zero(dim), Matrix::Identity(dim, dim));
}

Isometry Isometry::translation(const Point& y) {
  return Isometry(y, Matrix::Identity(y.dim(), y.dim()));
}

Isometry Isometry::linear(Matrix u) {
  const int dim = static_cast<int>(u.rows());
  return Isometry(Point::zero(dim), std::move(u));
}

Point Isometry::operator()(const Point& x) const {
  require_same_dim(x.dim(), dim(), "isometry_apply");
  return translate(a_, Point(Vector(u_ * x.coords())));
}

Point isometry_apply(const Isometry& g, const Point& x) { return g(x); }

Isometry isometry_compose(const Isometry& g, const Isometry& h) {
  require_same_dim(g.dim(), h.dim(), "isometry_compose");
  const int n = g.dim();
  std::vector<Point> source;
  std::vector<Point> target;
  source.reserve(static_cast<std::size_t>(n) + 1);
  target.reserve(static_cast<std::size_t>(n) + 1);
  source.push_back(Point::zero(n));
  for (int i = 0; i < n; ++i) source.push_back(Point::basis(n, i));
  for (const Point& p : source) target.push_back(g(h(p)));
  return fit_isometry(source, target).isometry;
}

Isometry isometry_invert(const Isometry& g) {
  Matrix ut = g.u().transpose();
  Point a(Vector(-(ut * g.a().coords())));
  return Isometry(std::move(a), std::move(ut));
}

FitResult fit_isometry(const std::vector<Point>& source,
                       const std::vector<Point>& target,
                       const FitOptions& options) {
  if (source.empty()) throw ParameterError("fit_isometry: no sample points");
  if (source.size() != target.size()) {
    throw ParameterError("fit_isometry: source and target lengths differ");
  }
  const int n = source.front().dim();
  for (std::size_t i = 0; i < source.size(); ++i) {
    require_same_dim(source[i].dim(), n, "fit_isometry");
    require_same_dim(target[i].dim(), n, "fit_isometry");
  }

  const std::size_t k = source.size();
  std::vector<double> dist(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double ds = hyperbolic_distance(source[i], source[j]);
      const double dt = hyperbolic_distance(target[i], target[j]);
      if (std::abs(ds - dt) > options.rel_tolerance * (1.0 + std::max(ds, dt))) {
        throw NotPartialIsometryError(i, j, ds, dt);
      }
      dist[i * k + j] = dist[j * k + i] = ds;
    }
  }

  const Point minus_s0 = -source.front();
  const Point minus_t0 = -target.front();
  std::vector<Vector> from;
  std::vector<Vector> to;
  from.reserve(k);
  to.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    from.push_back(translate(minus_s0, source[i]).coords());
    to.push_back(translate(minus_t0, target[i]).coords());
  }

  // Inner products of the translated sets must agree (the origin is fixed).
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double gs = from[i].dot(from[j]);
      const double gt = to[i].dot(to[j]);
      const double tol =
          gram_tolerance(options.rel_tolerance, dist[i], dist[j], dist[i * k + j]);
      if (std::abs(gs - gt) > tol) {
        throw NotPartialIsometryError(i, j, dist[i * k + j],
                                      hyperbolic_distance(target[i], target[j]));
      }
    }
  }

  const linalg::OrthogonalExtension ext = linalg::extend_orthogonal(from, to, n);
  const Point& t0 = target.front();
  const Matrix& u = ext.map;
  auto fitted = [&](const Point& x) {
    return translate(t0, Point(Vector(u * translate(minus_s0, x).coords())));
  };

  FitResult result{decompose(fitted, n), ext.rank == n, 0.0};
  for (std::size_t i = 0; i < k; ++i) {
    result.max_residual = std::max(
        result.max_residual, hyperbolic_distance(result.isometry(source[i]), target[i]));
  }
  return result;
}

double dilation_residual(double c, double t) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("dilation_residual: c must be positive");
  }
  if (!(t >= 1.0) || !std::isfinite(t)) {
    throw DomainError("dilation_residual: t must be >= 1");
  }
  const double lhs = cosh_multiple(c, t * t);
  const double inner = cosh_multiple(c, t);
  return std::abs(lhs - inner * inner);
}

}  // namespace hypgeo
