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

#include "cli/suites.h"

#include <algorithm>
#include <charconv>
#include <map>

#include "cli/calibration.h"
#include "cli/generators.h"
#include "covering/epsnet.h"
#include "covering/error.h"
#include "covering/exact.h"
#include "covering/flowcheck.h"
#include "covering/hitting.h"
#include "covering/io.h"
#include "covering/rng.h"
#include "covering/wolsey.h"

namespace covering::tools {

namespace {

uint64_t ParseSeed(std::string_view text, const std::string& list) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw MalformedInput("bad seed list '" + list + "'");
  }
  return value;
}

// Distinct salts keep the instance stream apart from the algorithm's own
// seed stream.
constexpr uint64_t kInstanceSalt = 0x1234'5678;

}  // namespace

SetCoverInstance RatioInstance(int n, int max_m, Rng& rng) {
  CoverParams params;
  params.n = n;
  params.density = 0.4;
  params.cap_max = n;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    params.m = static_cast<int>(rng.Between(1, max_m));
    SetCoverInstance inst = RandomCover(params, rng);
    if (IsFeasible(inst)) return inst;
  }
  throw Infeasible("no feasible instance in 1000 draws");
}

std::vector<uint64_t> ParseSeeds(const std::string& list) {
  std::vector<uint64_t> seeds;
  std::string_view rest = list;
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    if (item.empty()) continue;
    if (const size_t dots = item.find(".."); dots != std::string_view::npos) {
      const uint64_t lo = ParseSeed(item.substr(0, dots), list);
      const uint64_t hi = ParseSeed(item.substr(dots + 2), list);
      if (lo > hi) throw MalformedInput("seed range runs backwards in '" + list + "'");
      if (hi - lo >= 1'000'000) throw MalformedInput("seed range too long");
      for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(ParseSeed(item, list));
    }
  }
  if (seeds.empty()) throw MalformedInput("empty seed list");
  return seeds;
}

std::vector<NetSizeRow> NetSizeSuite(const std::vector<uint64_t>& seeds,
                                     const NetSizeOptions& options) {
  std::vector<NetSizeRow> rows;
  for (int inverse : options.inverse_eps) {
    NetSizeRow row;
    row.eps = 1.0 / inverse;
    row.n = options.n;
    row.seeds = static_cast<int>(seeds.size());
    double total = 0;
    for (uint64_t seed : seeds) {
      Rng rng(MixSeed(seed, kInstanceSalt));
      const PointSet points = PointsOfKind(options.distribution, options.n, rng);
      NetConfig config;
      config.eps = row.eps;
      config.seed = seed;
      const EpsNetResult result = BuildEpsNet(points, config);
      total += static_cast<double>(result.net.size());
      row.max_size = std::max<int64_t>(row.max_size, static_cast<int64_t>(result.net.size()));
      row.retries += result.retries;
    }
    row.mean_size = total / static_cast<double>(seeds.size());
    row.mean_size_eps = row.mean_size * row.eps;
    row.loglog = LogLog2(2 / row.eps);
    row.ratio = row.mean_size_eps / row.loglog;
    row.bound = kSizeConstant * row.loglog / row.eps;
    rows.push_back(row);
  }
  return rows;
}

std::string NetSizeCsv(const std::vector<NetSizeRow>& rows) {
  std::string out =
      "# format_version=1\n"
      "eps,n,seeds,mean_size,mean_size_eps,loglog,ratio,bound,max_size,retries\n";
  for (const NetSizeRow& r : rows) {
    out += FormatDouble(r.eps) + "," + std::to_string(r.n) + "," +
           std::to_string(r.seeds) + "," + FormatDouble(r.mean_size) + "," +
           FormatDouble(r.mean_size_eps) + "," + FormatDouble(r.loglog) + "," +
           FormatDouble(r.ratio) + "," + FormatDouble(r.bound) + "," +
           std::to_string(r.max_size) + "," + std::to_string(r.retries) + "\n";
  }
  return out;
}

std::vector<DecayMeanRow> DecaySuite(const std::vector<uint64_t>& seeds,
                                     const DecayOptions& options) {
  // (level, j) -> per-seed counts, zero where a seed has no such entry.
  std::map<std::pair<int, int>, std::vector<int64_t>> table;
  for (size_t k = 0; k < seeds.size(); ++k) {
    Rng rng(MixSeed(seeds[k], kInstanceSalt));
    const PointSet points = PointsOfKind(options.distribution, options.n, rng);
    NetConfig config;
    config.eps = options.eps;
    config.seed = seeds[k];
    const EpsNetResult result = BuildEpsNet(points, config);
    for (const DecayRow& row : DecayProfile(result)) {
      auto& counts = table[{row.level, row.j}];
      counts.resize(seeds.size(), 0);
      counts[k] = row.count;
    }
  }
  std::vector<DecayMeanRow> rows;
  for (auto& [key, counts] : table) {
    counts.resize(seeds.size(), 0);
    DecayMeanRow row;
    row.level = key.first;
    row.j = key.second;
    int64_t sum = 0;
    for (int64_t c : counts) sum += c;
    row.mean = static_cast<double>(sum) / static_cast<double>(counts.size());
    row.min = *std::min_element(counts.begin(), counts.end());
    row.max = *std::max_element(counts.begin(), counts.end());
    rows.push_back(row);
  }
  return rows;
}

std::string DecayCsv(const std::vector<DecayMeanRow>& rows) {
  std::string out = "# format_version=1\nlevel,j,mean_count,min_count,max_count\n";
  for (const DecayMeanRow& r : rows) {
    out += std::to_string(r.level) + "," + std::to_string(r.j) + "," +
           FormatDouble(r.mean) + "," + std::to_string(r.min) + "," +
           std::to_string(r.max) + "\n";
  }
  return out;
}

std::vector<RatioRow> RatioSuite(const std::vector<uint64_t>& seeds,
                                 const RatioOptions& options) {
  std::vector<RatioRow> rows;
  for (int n = 1; n <= options.max_n; ++n) {
    RatioRow row;
    row.n = n;
    row.harmonic = Harmonic(n);
    double total = 0;
    for (uint64_t seed : seeds) {
      Rng rng(MixSeed(MixSeed(seed, kInstanceSalt), static_cast<uint64_t>(n)));
      const SetCoverInstance inst = RatioInstance(n, options.max_m, rng);
      const GreedyTrace greedy = SolveCapacitated(inst);
      const OptCover opt = OptCapacitatedCover(inst);
      const double ratio = opt.cost.units() == 0
                               ? (greedy.total_cost.units() == 0 ? 1.0 : kInf)
                               : greedy.total_cost.ToDouble() / opt.cost.ToDouble();
      ++row.trials;
      total += ratio;
      row.max_ratio = std::max(row.max_ratio, ratio);
      if (!WithinHarmonicFactor(greedy.total_cost, opt.cost, n)) ++row.violations;
    }
    row.mean_ratio = total / row.trials;
    rows.push_back(row);
  }
  return rows;
}

std::string RatioCsv(const std::vector<RatioRow>& rows) {
  std::string out =
      "# format_version=1\nn,trials,mean_ratio,max_ratio,harmonic,violations\n";
  for (const RatioRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.trials) + "," +
           FormatDouble(r.mean_ratio) + "," + FormatDouble(r.max_ratio) + "," +
           FormatDouble(r.harmonic) + "," + std::to_string(r.violations) + "\n";
  }
  return out;
}

std::vector<HittingRow> HittingSuite(const std::vector<uint64_t>& seeds,
                                     const HittingOptions& options) {
  std::vector<HittingRow> rows;
  for (uint64_t seed : seeds) {
    Rng rng(MixSeed(seed, kInstanceSalt));
    HittingRow row;
    row.seed = seed;
    row.points = static_cast<int>(rng.Between(1, options.max_points));
    row.rects = static_cast<int>(rng.Between(1, options.max_rects));
    const PointSet points = UniformPoints(row.points, rng);
    const RectSet rects = StabbedRects(points, row.rects, 0.4, rng);
    NetConfig config;
    config.seed = seed;
    const HittingResult result = SolveHitting(points, rects, config);
    const OptHitting opt = OptHittingSet(points, rects);
    row.opt = opt.size;
    row.size = static_cast<int>(result.points.size());
    row.guess = result.guess;
    row.ratio = static_cast<double>(row.size) / std::max(1, row.opt);
    row.bound = kHittingConstant * LogLog2(std::max(4, row.opt)) * row.opt;
    row.valid = VerifyHitting(points, result.points, rects).ok;
    rows.push_back(row);
  }
  return rows;
}

std::string HittingCsv(const std::vector<HittingRow>& rows) {
  std::string out =
      "# format_version=1\nseed,points,rects,opt,size,guess,ratio,bound,valid\n";
  for (const HittingRow& r : rows) {
    out += std::to_string(r.seed) + "," + std::to_string(r.points) + "," +
           std::to_string(r.rects) + "," + std::to_string(r.opt) + "," +
           std::to_string(r.size) + "," + std::to_string(r.guess) + "," +
           FormatDouble(r.ratio) + "," + FormatDouble(r.bound) + "," +
           (r.valid ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace covering::tools
