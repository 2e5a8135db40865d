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

#include <omp.h>

#include <cstdint>

#include "hypgeo/kernels.hpp"
#include "kernels_detail.hpp"

namespace hypgeo::kernels::parallel {

void hyperbolic_distances(const PointBatch& xs, const PointBatch& ys, std::span<double> out) {
  detail::check_pairwise(xs, ys, "hyperbolic_distances");
  if (out.size() != xs.size()) throw ParameterError("hyperbolic_distances: output size");
  const auto n = static_cast<std::int64_t>(xs.size());

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = hypgeo::hyperbolic_distance(xs[k], ys[k]);
  }
}

TriangleStats triangle_stats(const PointBatch& xs, const PointBatch& ys, const PointBatch& zs) {
  detail::check_pairwise(xs, ys, "triangle_stats");
  detail::check_pairwise(xs, zs, "triangle_stats");
  const auto n = static_cast<std::int64_t>(xs.size());
  TriangleStats total;

#pragma omp parallel
  {
    TriangleStats local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      detail::merge(local, detail::triangle_at(xs, ys, zs, static_cast<std::size_t>(i)));
    }
#pragma omp critical
    detail::merge(total, local);
  }
  return total;
}

NearestPair nearest_pair(const PointBatch& as, const PointBatch& bs) {
  require_same_dim(as.dim(), bs.dim(), "nearest_pair");
  const auto rows = static_cast<std::int64_t>(as.size());
  const std::size_t cols = bs.size();
  NearestPair best;

#pragma omp parallel
  {
    NearestPair local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t r = 0; r < rows; ++r) {
      const auto i = static_cast<std::size_t>(r);
      for (std::size_t j = 0; j < cols; ++j) {
        const NearestPair cand{hypgeo::hyperbolic_distance(as[i], bs[j]), i, j};
        if (detail::better(cand, local)) local = cand;
      }
    }
#pragma omp critical
    if (detail::better(local, best)) best = local;
  }
  return best;
}

}  // namespace hypgeo::kernels::parallel
