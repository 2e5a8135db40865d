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

#pragma once

#include <vector>

#include "hypgeo/core.hpp"

namespace hypgeo {

/// T_y(x) = x + ([x] + <x,y> / ([y] + 1)) y.
///
/// T_y is a hyperbolic isometry with T_y(0) = y and inverse T_{-y}; it also
/// satisfies [T_y(x)] = [x][y] + <x,y>.
Point translate(const Point& y, const Point& x);

class Translation {
 public:
  explicit Translation(Point y) : y_(std::move(y)) {}

  const Point& parameter() const noexcept { return y_; }
  Point operator()(const Point& x) const { return translate(y_, x); }
  Translation inverse() const { return Translation(-y_); }

 private:
  Point y_;
};

/// x -> T_a(U x) with U orthogonal. Every isometry of H^n has exactly one
/// such representation.
class Isometry {
 public:
  /// Throws DomainError unless |U^T U - I| <= 1e-9 entrywise.
  Isometry(Point a, Matrix u);

  static Isometry identity(int dim);
  static Isometry translation(const Point& y);
  static Isometry linear(Matrix u);

  const Point& a() const noexcept { return a_; }
  const Matrix& u() const noexcept { return u_; }
  int dim() const noexcept { return a_.dim(); }

  Point operator()(const Point& x) const;

 private:
  Point a_;
  Matrix u_;
};

Point isometry_apply(const Isometry& g, const Point& x);

/// g o h, recovered by fitting on the images of 0, e_1, ..., e_n.
Isometry isometry_compose(const Isometry& g, const Isometry& h);

/// (a, U)^{-1} = (-U^T a, U^T), using U T_y U^T = T_{U y}.
Isometry isometry_invert(const Isometry& g);

struct FitResult {
  Isometry isometry;
  /// True when the translated sources span R^n, so that g is the only
  /// isometry matching the samples.
  bool unique = false;
  /// max_i d_h(g(source[i]), target[i])
  double max_residual = 0.0;
};

struct FitOptions {
  /// Pairwise distances must agree to rel_tolerance * (1 + distance).
  double rel_tolerance = 1e-6;
};

/// Extends the partial map source[i] -> target[i] to a global isometry.
///
/// Both sets are translated so that their first points sit at the origin,
/// the Gram matrices of the translated sets are compared, an orthogonal U is
/// built between them (completed on the orthogonal complement), and the
/// result T_{target[0]} o U o T_{-source[0]} is rewritten in (a, U) form.
///
/// Throws NotPartialIsometryError naming the first pair whose distances
/// disagree, DimensionError on mixed dimensions and ParameterError for empty
/// or unequal-length inputs.
FitResult fit_isometry(const std::vector<Point>& source,
                       const std::vector<Point>& target,
                       const FitOptions& options = {});

/// |cosh(c arcosh(t^2)) - cosh(c arcosh(t))^2|. A dilation of H^n (n > 1)
/// with constant c forces this to vanish for every t >= 1, which happens only
/// for c = 1. Integer c uses the Chebyshev form of cosh(c arcosh t), so
/// dilation_residual(1, t) is exactly 0.
double dilation_residual(double c, double t);

}  // namespace hypgeo
