//
// Copyright 2026 The chebdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CHEBDP_ERRORS_HPP_
#define CHEBDP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace chebdp {

// Bad user input: malformed data, out-of-range parameters, inconsistent
// shapes. Maps to its own process exit code in the CLI.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A configured resource cap (grid cells, moment count, quadrature nodes)
// would be exceeded. The message names the cap and the offending size.
class CapError : public std::length_error {
 public:
  explicit CapError(const std::string& what) : std::length_error(what) {}
};

// The optimizer hit a non-recoverable numerical problem (non-finite
// objective or gradient). Plain non-convergence is reported in the solve
// result, not thrown.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chebdp

#endif  // CHEBDP_ERRORS_HPP_
