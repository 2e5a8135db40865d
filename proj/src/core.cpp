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

#include "hypgeo/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hypgeo {

namespace {

constexpr double kClampSlack = 1e-9;

void check_finite(const Vector& v, const char* what) {
  if (v.size() == 0) {
    throw DomainError(std::string(what) + ": at least one coordinate required");
  }
  if (!v.allFinite()) {
    throw DomainError(std::string(what) + ": non-finite coordinate");
  }
}

Vector from_list(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace

bool Tolerance::close(double a, double b) const {
  return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

Point::Point(Vector coords) : coords_(std::move(coords)) {
  check_finite(coords_, "Point");
}

Point::Point(std::initializer_list<double> coords) : Point(from_list(coords)) {}

Point Point::zero(int dim) {
  if (dim < 1) throw DomainError("Point::zero: dim must be >= 1");
  return Point(Vector::Zero(dim));
}

Point Point::basis(int dim, int i) {
  if (dim < 1 || i < 0 || i >= dim) {
    throw DomainError("Point::basis: index out of range");
  }
  return Point(Vector::Unit(dim, i));
}

bool approx_equal(const Point& x, const Point& y, const Tolerance& tol) {
  if (x.dim() != y.dim()) return false;
  for (int i = 0; i < x.dim(); ++i) {
    if (!tol.close(x[i], y[i])) return false;
  }
  return true;
}

SpherePoint::SpherePoint(Vector coords) : coords_(std::move(coords)) {
  check_finite(coords_, "SpherePoint");
  const double n = coords_.stableNorm();
  if (n == 0.0) throw DomainError("SpherePoint: zero vector");
  coords_ /= n;
}

SpherePoint::SpherePoint(std::initializer_list<double> coords)
    : SpherePoint(from_list(coords)) {}

bool approx_equal(const ProjPoint& u, const ProjPoint& v, const Tolerance& tol) {
  if (u.ambient_dim() != v.ambient_dim()) return false;
  const Vector& a = u.rep().coords();
  const Vector& b = v.rep().coords();
  auto matches = [&](double sign) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (!tol.close(a[i], sign * b[i])) return false;
    }
    return true;
  };
  return matches(1.0) || matches(-1.0);
}

double clamped_acosh(double t) {
  if (std::isnan(t)) throw DomainError("acosh: NaN argument");
  if (t < 1.0) {
    if (t < 1.0 - kClampSlack) {
      throw DomainError("acosh: argument " + std::to_string(t) + " below 1");
    }
    return 0.0;
  }
  return std::acosh(t);
}

double clamped_acos(double t) {
  if (std::isnan(t)) throw DomainError("acos: NaN argument");
  if (t > 1.0 + kClampSlack || t < -1.0 - kClampSlack) {
    throw DomainError("acos: argument " + std::to_string(t) + " outside [-1, 1]");
  }
  return std::acos(std::clamp(t, -1.0, 1.0));
}

double bracket(const Point& x) { return std::hypot(1.0, x.coords().stableNorm()); }

double bracket(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(1.0 + s);
}

// With d = x - y and s = x + y,
//   |d|^2 - ([x] - [y])^2 = 2([x][y] - <x,y> - 1) = 4 sinh^2(d_h / 2),
// and [x] - [y] = <d, s> / ([x] + [y]) avoids subtracting the two brackets.
// sinh^2(d/2) = (|x-y|^2 - ([x]-[y])^2) / 4 is evaluated as R^2 + T^2 with
//   R = sinh((asinh|x| - asinh|y|) / 2),   T^2 = |x||y| |x/|x| - y/|y||^2 / 4,
// both non-negative, so nothing cancels for far-out or nearby points. The
// radial difference and, for close points, the direction difference are
// formed from x - y directly.
double hyperbolic_distance(std::span<const double> x, std::span<const double> y) {
  // Fixed argument order keeps d(x, y) == d(y, x) bit for bit.
  if (std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end())) std::swap(x, y);

  double nx2 = 0.0, ny2 = 0.0, dd = 0.0, ds = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double yi = y[i];
    const double d = xi - yi;
    nx2 += xi * xi;
    ny2 += yi * yi;
    dd += d * d;
    ds += d * (xi + yi);
  }
  const double nx = std::sqrt(nx2);
  const double ny = std::sqrt(ny2);
  if (nx == 0.0 || ny == 0.0) return std::abs(std::asinh(nx) - std::asinh(ny));

  const double bx = std::sqrt(1.0 + nx2);
  const double by = std::sqrt(1.0 + ny2);
  const double dr = ds / (nx + ny);  // |x| - |y|
  const double radial = std::sinh(0.5 * std::asinh(std::abs(dr) * (nx + ny) / (nx * by + ny * bx)));

  double uu = 0.0;
  if (std::sqrt(dd) <= 0.5 * std::min(nx, ny)) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double u = ((x[i] - y[i]) - y[i] / ny * dr) / nx;
      uu += u * u;
    }
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double u = x[i] / nx - y[i] / ny;
      uu += u * u;
    }
  }
  const double angular2 = 0.25 * nx * uu * ny;
  return 2.0 * std::asinh(std::sqrt(radial * radial + angular2));
}

double hyperbolic_distance(const Point& x, const Point& y) {
  require_same_dim(x.dim(), y.dim(), "hyperbolic_distance");
  return hyperbolic_distance(x.span(), y.span());
}

double hyperbolic_distance_naive(const Point& x, const Point& y) {
  require_same_dim(x.dim(), y.dim(), "hyperbolic_distance_naive");
  return clamped_acosh(bracket(x) * bracket(y) - x.coords().dot(y.coords()));
}

double euclidean_distance(const Point& x, const Point& y) {
  require_same_dim(x.dim(), y.dim(), "euclidean_distance");
  return (x.coords() - y.coords()).norm();
}

double sphere_distance(const SpherePoint& x, const SpherePoint& y) {
  require_same_dim(x.ambient_dim(), y.ambient_dim(), "sphere_distance");
  return clamped_acos(x.coords().dot(y.coords())) / std::numbers::pi;
}

double projective_distance(const ProjPoint& u, const ProjPoint& v) {
  require_same_dim(u.ambient_dim(), v.ambient_dim(), "projective_distance");
  const double c = std::abs(u.rep().coords().dot(v.rep().coords()));
  return 2.0 * clamped_acos(c) / std::numbers::pi;
}

Vector hyperboloid_embed(const Point& x) {
  Vector out(x.dim() + 1);
  out[0] = bracket(x);
  out.tail(x.dim()) = x.coords();
  return out;
}

Vector poincare_coords(const Point& x) { return x.coords() / (1.0 + bracket(x)); }

Point from_poincare(const Vector& p) {
  const double n2 = p.squaredNorm();
  if (!(n2 < 1.0)) throw DomainError("from_poincare: point outside the unit ball");
  return Point(Vector(2.0 * p / (1.0 - n2)));
}

}  // namespace hypgeo
