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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypgeo {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the legal domain of a function (t < 1 for arcosh, NaN
/// coordinates, negative radius, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input that makes the requested object undefined: equal points for a line,
/// dependent vectors, a line through the origin where one is forbidden.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// Raised by isometry fitting when two source points and their targets are
/// at different distances. Carries the offending pair of indices.
class NotPartialIsometryError : public Error {
 public:
  NotPartialIsometryError(std::size_t i, std::size_t j, double source_distance,
                          double target_distance);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  double source_distance() const noexcept { return source_distance_; }
  double target_distance() const noexcept { return target_distance_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double source_distance_;
  double target_distance_;
};

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace hypgeo
