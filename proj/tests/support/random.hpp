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

// Seeded generators shared by the unit, property and acceptance suites.

#pragma once

#include <cstdint>
#include <random>

#include "hypgeo/core.hpp"
#include "hypgeo/isometry.hpp"

namespace hypgeo::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Uniform in the box [lo, hi]^dim.
  Point box(int dim, double lo, double hi) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
    return Point(std::move(v));
  }

  /// Uniform on the unit sphere of R^dim.
  Point direction(int dim) {
    std::normal_distribution<double> normal;
    Vector v(dim);
    do {
      for (int i = 0; i < dim; ++i) v[i] = normal(rng_);
    } while (v.norm() < 1e-3);
    return Point(Vector(v / v.norm()));
  }

  SpherePoint sphere(int ambient_dim) { return SpherePoint(direction(ambient_dim).coords()); }

  /// Haar-ish orthogonal matrix: QR of a Gaussian matrix with sign fix.
  Matrix orthogonal(int dim) {
    std::normal_distribution<double> normal;
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) g(i, j) = normal(rng_);
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
      if (r(j, j) < 0) q.col(j) *= -1.0;
    }
    return q;
  }

  Isometry isometry(int dim, double translation_box) {
    return Isometry(box(dim, -translation_box, translation_box), orthogonal(dim));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hypgeo::testing
