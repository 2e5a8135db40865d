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

#include "hypgeo/linalg.hpp"

#include <algorithm>

namespace hypgeo::linalg {

namespace {

// Orthonormalizes `v` against `basis` with two MGS passes. Returns the
// projection coefficients (summed over both passes) and leaves the residual
// in `v`.
Vector project_out(const std::vector<Vector>& basis, Vector& v) {
  Vector coeff = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double c = basis[j].dot(v);
      v -= c * basis[j];
      coeff[static_cast<Eigen::Index>(j)] += c;
    }
  }
  return coeff;
}

void complete_frame(std::vector<Vector>& frame, int dim) {
  for (int i = 0; i < dim && static_cast<int>(frame.size()) < dim; ++i) {
    Vector v = Vector::Unit(dim, i);
    project_out(frame, v);
    const double r = v.norm();
    // A coordinate vector keeps at least 1/sqrt(dim) of its length against
    // some choice of i, so a loose threshold always completes the frame.
    if (r > 1e-8) frame.push_back(v / r);
  }
}

Matrix as_columns(const std::vector<Vector>& frame, int dim) {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.col(j) = frame[static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

OrthogonalExtension extend_orthogonal(const std::vector<Vector>& from,
                                      const std::vector<Vector>& to, int dim) {
  std::vector<Vector> src_frame;
  std::vector<Vector> dst_frame;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (static_cast<int>(src_frame.size()) == dim) break;
    Vector v = from[i];
    const double scale = std::max(1.0, v.norm());
    const Vector coeff = project_out(src_frame, v);
    const double r = v.norm();
    if (r <= kDependenceThreshold * scale) continue;

    Vector w = to[i];
    for (std::size_t j = 0; j < dst_frame.size(); ++j) {
      w -= coeff[static_cast<Eigen::Index>(j)] * dst_frame[j];
    }
    src_frame.push_back(v / r);
    dst_frame.push_back(w / r);
  }

  OrthogonalExtension out;
  out.rank = static_cast<int>(src_frame.size());
  complete_frame(src_frame, dim);
  complete_frame(dst_frame, dim);
  out.map = polar_project(as_columns(dst_frame, dim) *
                          as_columns(src_frame, dim).transpose());
  return out;
}

Matrix polar_project(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

double orthogonality_defect(const Matrix& u) {
  const Matrix gram = u.transpose() * u;
  return (gram - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace hypgeo::linalg
