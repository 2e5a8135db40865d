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

// Lines, segments, spheres and angles of H^n, and the construction of
// infinitely many lines through the origin that miss a given line.

#pragma once

#include <functional>

#include "hypgeo/core.hpp"
#include "hypgeo/isometry.hpp"

namespace hypgeo {

/// Unit-speed geodesic t -> T_a(sinh(t) z) with |z| = 1. Its image is the
/// unique hyperbolic line through a in direction z.
class Geodesic {
 public:
  /// Normalizes `direction`; throws DegenerateInputError for the zero vector.
  Geodesic(Point base, const Point& direction);

  const Point& base() const noexcept { return base_; }
  const Point& direction() const noexcept { return direction_; }
  int dim() const noexcept { return base_.dim(); }

  Point operator()(double t) const;

 private:
  Point base_;
  Point direction_;
};

Point geodesic_point(const Geodesic& g, double t);

/// Line through distinct points a and b, parametrized from a towards b.
Geodesic line_through(const Point& a, const Point& b);

/// Hyperbolic distance from x to the line of g.
double distance_to_line(const Geodesic& g, const Point& x);

/// True iff d(a,x) + d(x,b) = d(a,b) within `tol` (applied to d(a,b)) and x is
/// within tol.abs + tol.rel d(a,b) of the line through a and b.
bool segment_contains(const Point& a, const Point& b, const Point& x,
                      const Tolerance& tol = kDefaultTolerance);

/// Some ordering of the three points turns the triangle inequality into an
/// equality, with the middle point on the line through the other two (as in
/// segment_contains).
bool metrically_collinear(const Point& a, const Point& b, const Point& c,
                          const Tolerance& tol = kDefaultTolerance);

/// distance_to_line(g, x) <= tol.abs
bool on_line(const Geodesic& g, const Point& x, const Tolerance& tol = kDefaultTolerance);

/// The two geodesics trace the same set.
bool lines_coincide(const Geodesic& g, const Geodesic& h,
                    const Tolerance& tol = kDefaultTolerance);

/// A line not through the origin written as { sinh(t) a + cosh(t) b : t real }
/// with a, b linearly independent.
struct PaperForm {
  Point a;
  Point b;

  Point operator()(double t) const;
};

/// For L = T_y o gamma_z: a = z + <z,y>/([y]+1) y, b = y.
/// Throws DegenerateInputError when L passes through the origin.
PaperForm line_to_paper_form(const Geodesic& line);

/// Inverse of line_to_paper_form. Throws DomainError when (a, b) do not
/// describe a unit-speed line (|z| != 1).
Geodesic paper_form_to_line(const PaperForm& form);

/// The line through the origin spanned by mu a + b. For |mu| > 1 it misses
/// { sinh(t) a + cosh(t) b }.
/// Throws ParameterError for |mu| <= 1 and DegenerateInputError when a and b
/// are linearly dependent.
Geodesic parallel_family(const Point& a, const Point& b, double mu);

struct GapScanOptions {
  double param_min = -10.0;
  double param_max = 10.0;
  /// Samples per curve; the scanned grid has samples^2 parameter pairs.
  int samples = 100;
  /// Golden-section refinement of the best grid cell.
  bool refine = true;
  /// Gap above which the curves are declared disjoint.
  double disjoint_threshold = 1e-4;
  bool use_parallel = true;
};

struct GapScan {
  double min_gap = 0.0;
  double s = 0.0;  ///< parameter on the first curve
  double t = 0.0;  ///< parameter on the second curve
  bool disjoint = false;
};

using Curve = std::function<Point(double)>;

/// Minimum hyperbolic distance between two parametrized curves over the
/// parameter square, by grid scan plus nested golden-section refinement.
/// A falsification harness: it can miss an intersection, never invent one.
GapScan scan_min_gap(const Curve& first, const Curve& second,
                     const GapScanOptions& options = {});

/// Scanned gap between parallel_family(a, b, mu) and {sinh(t) a + cosh(t) b}.
GapScan parallel_gap(const Point& a, const Point& b, double mu,
                     const GapScanOptions& options = {});

/// Pair of closed half-lines t -> T_vertex(sinh(t) z_i), t >= 0.
class Angle {
 public:
  /// Normalizes both directions.
  Angle(Point vertex, const Point& z1, const Point& z2);

  /// Half-lines from `vertex` through p1 and p2.
  static Angle from_points(const Point& vertex, const Point& p1, const Point& p2);

  const Point& vertex() const noexcept { return vertex_; }
  const Point& z1() const noexcept { return z1_; }
  const Point& z2() const noexcept { return z2_; }

  /// Point at hyperbolic distance t along the first or second half-line.
  Point first_ray(double t) const;
  Point second_ray(double t) const;

 private:
  Point vertex_;
  Point z1_;
  Point z2_;
};

/// arccos <z1, z2>, in [0, pi].
double angle_measure(const Angle& angle);

/// Image of an angle under a global isometry.
Angle transform(const Isometry& g, const Angle& angle);

bool angles_congruent(const Angle& x, const Angle& y, const Tolerance& tol = kDefaultTolerance);

/// An isometry taking the vertex and the unit points of both half-lines of
/// `from` onto those of `to`. Throws NotPartialIsometryError if the angles are
/// not congruent.
FitResult congruence_witness(const Angle& from, const Angle& to);

/// The angle and the three angles formed with the opposite half-lines are
/// pairwise congruent.
bool is_right_angle(const Angle& angle, const Tolerance& tol = kDefaultTolerance);

/// The hyperbolic sphere of radius r about 0 is the Euclidean sphere of
/// radius sinh(r). Throws DomainError for r < 0.
double sphere_euclidean_radius(double r);

/// t -> (sinh t), an isometry from the real line onto H^1.
Point h1_embedding(double t);

}  // namespace hypgeo
