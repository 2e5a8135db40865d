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

#include "hypgeo/errors.hpp"

namespace hypgeo {

NotPartialIsometryError::NotPartialIsometryError(std::size_t i, std::size_t j,
                                                 double source_distance,
                                                 double target_distance)
    : Error("not a partial isometry: pair (" + std::to_string(i) + ", " +
            std::to_string(j) + ") has source distance " +
            std::to_string(source_distance) + " but target distance " +
            std::to_string(target_distance)),
      first_(i),
      second_(j),
      source_distance_(source_distance),
      target_distance_(target_distance) {}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace hypgeo
