// Copyright 2026 The Covering Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVERING_ERROR_H_
#define COVERING_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covering {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input references an unknown id, has an out-of-range value, or does not
// parse. Distinct from a well-formed but invalid solution.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// No feasible solution exists. For set cover the best achievable coverage
// f(all sets) is carried along for diagnostics.
class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& what, int64_t max_coverage = -1)
      : Error(what), max_coverage_(max_coverage) {}
  int64_t max_coverage() const { return max_coverage_; }

 private:
  int64_t max_coverage_;
};

// An exact oracle ran past its enumeration or time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Coordinates are not in general position (repeated x or y).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A randomized secondary net failed verification on every retry.
class NetSampleFailure : public Error {
 public:
  using Error::Error;
};

// The reweighting loop of the hitting-set solver exhausted its round and
// guess limits.
class BgDivergence : public Error {
 public:
  explicit BgDivergence(const std::string& what, int64_t rounds = 0)
      : Error(what), rounds_(rounds) {}
  int64_t rounds() const { return rounds_; }

 private:
  int64_t rounds_;
};

}  // namespace covering

#endif  // COVERING_ERROR_H_
