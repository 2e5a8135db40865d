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

namespace hypgeo::linalg {

/// Residual norm (relative to max(1, |v|)) below which a vector is treated as
/// dependent on the basis accumulated so far.
inline constexpr double kDependenceThreshold = 1e-12;

struct OrthogonalExtension {
  Matrix map;  ///< orthogonal, maps from[i] to to[i] when the Gram matrices agree
  int rank = 0;  ///< dimension of span(from)
};

/// Builds an orthogonal map sending each from[i] to to[i].
///
/// Runs modified Gram-Schmidt (two passes) over `from` in order, replaying the
/// same coefficients on `to`. The orthonormal frames are then completed by
/// orthonormalizing the coordinate vectors e_1, e_2, ... against each frame,
/// and the result is projected onto O(n) by polar decomposition. Assumes the
/// Gram matrices of `from` and `to` agree; callers check that first.
OrthogonalExtension extend_orthogonal(const std::vector<Vector>& from,
                                      const std::vector<Vector>& to, int dim);

/// Nearest orthogonal matrix in the Frobenius norm (U V^T from the SVD).
Matrix polar_project(const Matrix& m);

/// max |(U^T U - I)_{ij}|
double orthogonality_defect(const Matrix& u);

}  // namespace hypgeo::linalg
