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

#ifndef COVERING_IO_H_
#define COVERING_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "covering/epsnet.h"
#include "covering/geometry.h"
#include "covering/hitting.h"
#include "covering/setsystem.h"
#include "covering/wolsey.h"

// Text formats. JSON documents carry "format_version": 1 and are written
// with sorted keys, so equal values serialize to equal bytes. CSV files
// start with a "# format_version=1" line; '#' lines and a header line are
// skipped on input. Readers throw MalformedInput, file helpers IoError.
namespace covering {

inline constexpr int kFormatVersion = 1;

// Shortest decimal that round-trips; infinities as "inf" / "-inf".
std::string FormatDouble(double value);

// Decimal ("0.25", "1e-3") or rational ("3/4") literal.
double ParseNumber(std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

// {"format_version", "n", "sets": [{"id", "members", "cost", "capacity"}]}
SetCoverInstance ParseInstanceJson(std::string_view text);
std::string InstanceToJson(const SetCoverInstance& inst);

// {"format_version", "chosen": [...], "assignment": {"<element>": set}}.
// Repeated element keys are kept as separate pairs.
AssignmentCover ParseCoverJson(std::string_view text);
std::string CoverToJson(const AssignmentCover& cover);

std::string TraceToJson(const GreedyTrace& trace);

// x,y
PointSet ParsePointsCsv(std::string_view text);
std::string PointsToCsv(const PointSet& points);

// x_lo,y_lo,x_hi,y_hi
RectSet ParseRectsCsv(std::string_view text);
std::string RectsToCsv(const RectSet& rects);

// Net ids, first-level sample, per-level breakdown and the heavy
// rectangles with their secondary nets.
std::string EpsNetToJson(const EpsNetResult& result);

// level,j,count
std::string DecayToCsv(const std::vector<DecayRow>& rows);

std::string HittingToJson(const HittingResult& result);

}  // namespace covering

#endif  // COVERING_IO_H_
