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

// Points of the hyperbolic space modelled on R^n, the bracket functional
// [x] = sqrt(1 + |x|^2), and the four metrics of the library: hyperbolic,
// Euclidean, great-circle on the unit sphere and the projective metric on
// antipodal classes.

#pragma once

#include <initializer_list>
#include <span>

#include <Eigen/Dense>

#include "hypgeo/errors.hpp"

namespace hypgeo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Comparison tolerance: |a - b| <= abs + rel * max(|a|, |b|).
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  bool close(double a, double b) const;
};

inline constexpr Tolerance kDefaultTolerance{};

/// A point of H^n = R^n. Coordinates are finite and there is at least one.
class Point {
 public:
  explicit Point(Vector coords);
  Point(std::initializer_list<double> coords);

  static Point zero(int dim);
  /// i-th coordinate unit vector (0-based).
  static Point basis(int dim, int i);

  const Vector& coords() const noexcept { return coords_; }
  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  std::span<const double> span() const noexcept {
    return {coords_.data(), static_cast<std::size_t>(coords_.size())};
  }
  double norm() const { return coords_.norm(); }

  Point operator-() const { return Point(Vector(-coords_)); }

 private:
  Vector coords_;
};

/// Coordinate-wise comparison.
bool approx_equal(const Point& x, const Point& y,
                  const Tolerance& tol = kDefaultTolerance);

/// Unit vector of R^{n+1}. Construction normalizes; the zero vector is
/// rejected.
class SpherePoint {
 public:
  explicit SpherePoint(Vector coords);
  SpherePoint(std::initializer_list<double> coords);

  const Vector& coords() const noexcept { return coords_; }
  int ambient_dim() const noexcept { return static_cast<int>(coords_.size()); }
  SpherePoint antipode() const { return SpherePoint(Vector(-coords_)); }

 private:
  Vector coords_;
};

/// Point of projective space stored through one representative of {u, -u}.
class ProjPoint {
 public:
  explicit ProjPoint(SpherePoint rep) : rep_(std::move(rep)) {}

  const SpherePoint& rep() const noexcept { return rep_; }
  int ambient_dim() const noexcept { return rep_.ambient_dim(); }

 private:
  SpherePoint rep_;
};

bool approx_equal(const ProjPoint& u, const ProjPoint& v,
                  const Tolerance& tol = kDefaultTolerance);

/// sqrt(1 + |x|^2) without overflow for large |x|.
double bracket(const Point& x);
double bracket(std::span<const double> x);

/// arcosh([x][y] - <x,y>), computed as 2 asinh(sqrt(|x-y|^2 - ([x]-[y])^2) / 2)
/// with the radicand split into radial and angular parts. Accurate to a few
/// ulps of d for nearby points and for points far from the origin; exactly
/// symmetric.
double hyperbolic_distance(const Point& x, const Point& y);
/// Unchecked kernel used by the batch routines; assumes equal sizes.
double hyperbolic_distance(std::span<const double> x, std::span<const double> y);

/// arcosh([x][y] - <x,y>) evaluated literally. Kept for comparison against the
/// stable form; loses all accuracy for nearby points.
double hyperbolic_distance_naive(const Point& x, const Point& y);

double euclidean_distance(const Point& x, const Point& y);
double sphere_distance(const SpherePoint& x, const SpherePoint& y);
double projective_distance(const ProjPoint& u, const ProjPoint& v);

/// ([x], x_1, ..., x_n): the lift to the upper sheet of the unit hyperboloid.
Vector hyperboloid_embed(const Point& x);

/// x / (1 + [x]), a point of the open unit ball.
Vector poincare_coords(const Point& x);
/// Inverse of poincare_coords: p -> 2p / (1 - |p|^2). Requires |p| < 1.
Point from_poincare(const Vector& p);

/// arcosh with the clamping rule: arguments in [1 - 1e-9, 1) are treated as
/// 1, anything smaller is a DomainError.
double clamped_acosh(double t);
/// arccos with the same rule at both ends of [-1, 1].
double clamped_acos(double t);

}  // namespace hypgeo
