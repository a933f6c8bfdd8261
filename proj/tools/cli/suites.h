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

#ifndef COVERING_TOOLS_CLI_SUITES_H_
#define COVERING_TOOLS_CLI_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "covering/rng.h"
#include "covering/setsystem.h"

namespace covering::tools {

// "1..20", "3,5,8" or a mix such as "1..4,10". Throws MalformedInput when
// the list is empty or a range runs backwards.
std::vector<uint64_t> ParseSeeds(const std::string& list);

struct NetSizeOptions {
  int n = 100000;
  std::string distribution = "uniform";
  std::vector<int> inverse_eps = {8, 16, 32, 64, 128};
};

struct NetSizeRow {
  double eps = 0;
  int n = 0;
  int seeds = 0;
  double mean_size = 0;
  double mean_size_eps = 0;  // mean |N| * eps
  double loglog = 0;         // log2 log2 (2 / eps)
  double ratio = 0;          // mean_size_eps / loglog
  double bound = 0;          // kSizeConstant * loglog / eps
  int64_t max_size = 0;
  int64_t retries = 0;
};

std::vector<NetSizeRow> NetSizeSuite(const std::vector<uint64_t>& seeds,
                                     const NetSizeOptions& options);
std::string NetSizeCsv(const std::vector<NetSizeRow>& rows);

struct DecayOptions {
  int n = 5000;
  double eps = 1.0 / 20;
  std::string distribution = "uniform";
};

// Mean of |CT_j| over the seeds, per tree level.
struct DecayMeanRow {
  int level = 0;
  int j = 0;
  double mean = 0;
  int64_t min = 0;
  int64_t max = 0;
};

std::vector<DecayMeanRow> DecaySuite(const std::vector<uint64_t>& seeds,
                                     const DecayOptions& options);
std::string DecayCsv(const std::vector<DecayMeanRow>& rows);

struct RatioOptions {
  int max_n = 10;
  int max_m = 6;
};

// Greedy cost over exact optimum, one feasible instance per (seed, n).
// Feasible instance with n elements, 1..max_m sets, density 0.4 and
// capacities in 1..n; m is redrawn with every attempt.
SetCoverInstance RatioInstance(int n, int max_m, Rng& rng);

struct RatioRow {
  int n = 0;
  int trials = 0;
  double mean_ratio = 0;
  double max_ratio = 0;
  double harmonic = 0;
  int violations = 0;  // greedy > H_n * OPT, checked exactly
};

std::vector<RatioRow> RatioSuite(const std::vector<uint64_t>& seeds,
                                 const RatioOptions& options);
std::string RatioCsv(const std::vector<RatioRow>& rows);

struct HittingOptions {
  int max_points = 20;
  int max_rects = 25;
};

struct HittingRow {
  uint64_t seed = 0;
  int points = 0;
  int rects = 0;
  int opt = 0;
  int size = 0;
  int64_t guess = 0;
  double ratio = 0;
  double bound = 0;  // kHittingConstant * log2 log2 max(4, OPT) * OPT
  bool valid = false;
};

std::vector<HittingRow> HittingSuite(const std::vector<uint64_t>& seeds,
                                     const HittingOptions& options);
std::string HittingCsv(const std::vector<HittingRow>& rows);

}  // namespace covering::tools

#endif  // COVERING_TOOLS_CLI_SUITES_H_
