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

#include <string>

#include "hypgeo/kernels.hpp"

namespace hypgeo::kernels::detail {

void check_pairwise(const PointBatch& xs, const PointBatch& ys, const char* what);
TriangleStats triangle_at(const PointBatch& xs, const PointBatch& ys, const PointBatch& zs,
                          std::size_t i);
void merge(TriangleStats& into, const TriangleStats& other);
bool better(const NearestPair& a, const NearestPair& b);

}  // namespace hypgeo::kernels::detail
