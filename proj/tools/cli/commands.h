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

#ifndef COVERING_TOOLS_CLI_COMMANDS_H_
#define COVERING_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "covering/geometry.h"

namespace covering::tools {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;  // infeasible, or a failed check
inline constexpr int kExitParse = 3;    // bad arguments, input or I/O
inline constexpr int kExitBudget = 4;   // oracle budget, divergence, retries

// Runs one `covering` invocation; args excludes the program name. Documents
// go to the --out file when given, else to `out`; human-readable reports go
// to `out` when the document went to a file, else to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Replaces coordinates by ranks, breaking ties in a seeded random order.
// Keeps every strict order, so each point subset cut out by a closed
// rectangle is still cut out by one.
PointSet JitterTies(const PointSet& points, uint64_t seed);

}  // namespace covering::tools

#endif  // COVERING_TOOLS_CLI_COMMANDS_H_
