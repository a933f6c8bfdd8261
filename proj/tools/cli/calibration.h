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

#ifndef COVERING_TOOLS_CLI_CALIBRATION_H_
#define COVERING_TOOLS_CLI_CALIBRATION_H_

namespace covering::tools {

// Frozen after calibration runs; see README. Mean |N| * eps over 20 seeds
// at n = 100000 stays below kSizeConstant * log2 log2 (2 / eps).
inline constexpr double kSizeConstant = 40;

// Hitting-set size stays below kHittingConstant * log2 log2 max(4, OPT) * OPT.
inline constexpr double kHittingConstant = 2;

}  // namespace covering::tools

#endif  // COVERING_TOOLS_CLI_CALIBRATION_H_
