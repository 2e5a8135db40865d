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

#include <algorithm>
#include <cmath>

#include "hypgeo/kernels.hpp"
#include "kernels_detail.hpp"

namespace hypgeo::kernels {

PointBatch::PointBatch(int dim, std::size_t reserve) : dim_(dim) {
  if (dim < 1) throw DomainError("PointBatch: dim must be >= 1");
  data_.reserve(reserve * static_cast<std::size_t>(dim));
}

void PointBatch::push_back(std::span<const double> coords) {
  require_same_dim(coords.size(), static_cast<std::size_t>(dim_), "PointBatch::push_back");
  data_.insert(data_.end(), coords.begin(), coords.end());
}

namespace detail {

void check_pairwise(const PointBatch& xs, const PointBatch& ys, const char* what) {
  require_same_dim(xs.dim(), ys.dim(), what);
  if (xs.size() != ys.size()) throw ParameterError(std::string(what) + ": batch sizes differ");
}

TriangleStats triangle_at(const PointBatch& xs, const PointBatch& ys, const PointBatch& zs,
                          std::size_t i) {
  const double dxy = hyperbolic_distance(xs[i], ys[i]);
  const double dyx = hyperbolic_distance(ys[i], xs[i]);
  const double dyz = hyperbolic_distance(ys[i], zs[i]);
  const double dxz = hyperbolic_distance(xs[i], zs[i]);
  TriangleStats s;
  s.max_violation = dxz - dxy - dyz;
  s.worst_index = i;
  s.max_asymmetry = std::abs(dxy - dyx);
  s.max_self_distance = hyperbolic_distance(xs[i], xs[i]);
  return s;
}

void merge(TriangleStats& into, const TriangleStats& other) {
  if (other.max_violation > into.max_violation ||
      (other.max_violation == into.max_violation && other.worst_index < into.worst_index)) {
    into.max_violation = other.max_violation;
    into.worst_index = other.worst_index;
  }
  into.max_asymmetry = std::max(into.max_asymmetry, other.max_asymmetry);
  into.max_self_distance = std::max(into.max_self_distance, other.max_self_distance);
}

bool better(const NearestPair& a, const NearestPair& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace detail

namespace serial {

void hyperbolic_distances(const PointBatch& xs, const PointBatch& ys, std::span<double> out) {
  detail::check_pairwise(xs, ys, "hyperbolic_distances");
  if (out.size() != xs.size()) throw ParameterError("hyperbolic_distances: output size");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = hypgeo::hyperbolic_distance(xs[i], ys[i]);
  }
}

TriangleStats triangle_stats(const PointBatch& xs, const PointBatch& ys, const PointBatch& zs) {
  detail::check_pairwise(xs, ys, "triangle_stats");
  detail::check_pairwise(xs, zs, "triangle_stats");
  TriangleStats total;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    detail::merge(total, detail::triangle_at(xs, ys, zs, i));
  }
  return total;
}

NearestPair nearest_pair(const PointBatch& as, const PointBatch& bs) {
  require_same_dim(as.dim(), bs.dim(), "nearest_pair");
  NearestPair best;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      const NearestPair cand{hypgeo::hyperbolic_distance(as[i], bs[j]), i, j};
      if (detail::better(cand, best)) best = cand;
    }
  }
  return best;
}

}  // namespace serial

}  // namespace hypgeo::kernels
