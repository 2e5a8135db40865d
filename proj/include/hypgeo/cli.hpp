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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hypgeo/core.hpp"

namespace hypgeo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kHypothesisViolation = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "[1, -2.5, 3e-4]". Throws ParameterError on malformed input.
std::vector<double> parse_list(std::string_view text);

/// %.15g, or %.17g when `exact`.
std::string format_number(double value, bool exact);

}  // namespace hypgeo::cli
