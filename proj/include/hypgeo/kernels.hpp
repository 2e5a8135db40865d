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

// Batch kernels over flat point arrays. Each kernel has a serial reference in
// `serial::` and an OpenMP version in `parallel::` that must return identical
// results (the per-element arithmetic is shared; reductions are max/min with
// index tie-breaking, so they do not depend on scheduling).

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hypgeo/core.hpp"

namespace hypgeo::kernels {

/// Row-major array of `size()` points of dimension `dim`.
class PointBatch {
 public:
  explicit PointBatch(int dim, std::size_t reserve = 0);

  void push_back(std::span<const double> coords);
  void push_back(const Point& p) { push_back(p.span()); }

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size() / static_cast<std::size_t>(dim_); }
  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

 private:
  int dim_;
  std::vector<double> data_;
};

struct TriangleStats {
  /// max over triples of d(x,z) - d(x,y) - d(y,z); negative when all hold.
  double max_violation = -std::numeric_limits<double>::infinity();
  std::size_t worst_index = 0;
  /// max |d(x,y) - d(y,x)|
  double max_asymmetry = 0.0;
  /// max d(x,x)
  double max_self_distance = 0.0;
};

struct NearestPair {
  double distance = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;
};

namespace serial {

/// out[i] = d_h(xs[i], ys[i])
void hyperbolic_distances(const PointBatch& xs, const PointBatch& ys, std::span<double> out);
TriangleStats triangle_stats(const PointBatch& xs, const PointBatch& ys, const PointBatch& zs);
/// min over all (i, j) of d_h(as[i], bs[j]); ties resolve to the smallest (i, j).
NearestPair nearest_pair(const PointBatch& as, const PointBatch& bs);

}  // namespace serial

namespace parallel {

void hyperbolic_distances(const PointBatch& xs, const PointBatch& ys, std::span<double> out);
TriangleStats triangle_stats(const PointBatch& xs, const PointBatch& ys, const PointBatch& zs);
NearestPair nearest_pair(const PointBatch& as, const PointBatch& bs);

}  // namespace parallel

}  // namespace hypgeo::kernels
