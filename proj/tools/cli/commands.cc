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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "cli/calibration.h"
#include "cli/generators.h"
#include "cli/suites.h"
#include "covering/epsnet.h"
#include "covering/error.h"
#include "covering/exact.h"
#include "covering/flowcheck.h"
#include "covering/hitting.h"
#include "covering/io.h"
#include "covering/rng.h"
#include "covering/setsystem.h"
#include "covering/wolsey.h"
#include "json.hpp"

namespace covering::tools {

PointSet JitterTies(const PointSet& points, uint64_t seed) {
  Rng rng(seed);
  std::vector<uint64_t> key(points.size());
  for (uint64_t& k : key) k = rng.NextU64();
  std::vector<int> order(points.size());
  PointSet out(points.size());
  auto assign = [&](auto coord, auto set) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const size_t ia = static_cast<size_t>(a), ib = static_cast<size_t>(b);
      return std::tie(coord(points[ia]), key[ia], a) <
             std::tie(coord(points[ib]), key[ib], b);
    });
    for (size_t r = 0; r < order.size(); ++r) {
      set(out[static_cast<size_t>(order[r])], static_cast<double>(r));
    }
  };
  assign([](const Point& p) -> const double& { return p.x; },
         [](Point& p, double v) { p.x = v; });
  assign([](const Point& p) -> const double& { return p.y; },
         [](Point& p, double v) { p.y = v; });
  return out;
}

namespace {

// Shared state for one invocation.
struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string out_path;

  // Where the report goes: stdout unless stdout carries the document.
  std::ostream& report() { return out_path.empty() ? err : out; }

  void Emit(const std::string& document) {
    if (out_path.empty()) {
      out << document;
    } else {
      WriteFile(out_path, document);
    }
  }
};

std::string Fmt(double v) { return FormatDouble(v); }

std::string CostText(Cost c) { return FormatDouble(c.ToDouble()); }

// ---- gen ----

struct GenArgs {
  std::string kind;
  uint64_t seed = 0;
  std::string prefix;
  CoverParams cover;
  AntennaParams antenna;
  int n = -1;  // elements or points; default depends on the kind
  int s = 10;
  int w = 10;
  int h = 10;
  int clusters = 8;
  int rects = 40;
  double max_side = 0.3;
};

int RunGen(Context& ctx, const GenArgs& a) {
  Rng rng(a.seed);
  const int points = a.n < 0 ? 2000 : a.n;
  std::vector<std::pair<std::string, std::string>> files;
  if (a.kind == "random-cover") {
    CoverParams params = a.cover;
    if (a.n >= 0) params.n = a.n;
    files.emplace_back(".json", InstanceToJson(RandomCover(params, rng)));
  } else if (a.kind == "antenna") {
    const AntennaScene scene = RandomAntennaScene(a.antenna, rng);
    files.emplace_back(".json", InstanceToJson(ReduceAntennaScene(scene)));
    files.emplace_back(".scene.json", AntennaSceneToJson(scene));
  } else if (a.kind == "uniform-points") {
    files.emplace_back(".csv", PointsToCsv(UniformPoints(points, rng)));
  } else if (a.kind == "clustered-points") {
    files.emplace_back(".csv", PointsToCsv(ClusteredPoints(points, a.clusters, rng)));
  } else if (a.kind == "staircase") {
    if (a.s < 1) throw MalformedInput("--s must be positive");
    files.emplace_back(".csv", PointsToCsv(DoubleStaircase(a.s)));
  } else if (a.kind == "grid") {
    if (a.w < 1 || a.h < 1) throw MalformedInput("--width and --height must be positive");
    files.emplace_back(".csv", PointsToCsv(Grid(a.w, a.h)));
  } else if (a.kind == "hitting") {
    const PointSet sites = UniformPoints(points, rng);
    files.emplace_back(".points.csv", PointsToCsv(sites));
    files.emplace_back(".rects.csv",
                       RectsToCsv(StabbedRects(sites, a.rects, a.max_side, rng)));
  } else {
    throw MalformedInput("unknown kind '" + a.kind + "'");
  }
  for (const auto& [suffix, content] : files) {
    WriteFile(a.prefix + suffix, content);
    ctx.out << "wrote " << a.prefix << suffix << "\n";
  }
  return kExitOk;
}

// ---- feas / cover ----

int RunFeas(Context& ctx, const std::string& path) {
  const SetCoverInstance inst = ParseInstanceJson(ReadFile(path));
  std::vector<SetId> all(static_cast<size_t>(inst.num_sets()));
  std::iota(all.begin(), all.end(), 0);
  const int64_t f = MaxCoverValue(inst, all).value;
  const bool feasible = f == inst.n_elements;
  ctx.out << "f=" << f << " / n=" << inst.n_elements << " "
          << (feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
  return feasible ? kExitOk : kExitInvalid;
}

int RunCover(Context& ctx, const std::string& path, bool trace, bool exact) {
  const SetCoverInstance inst = ParseInstanceJson(ReadFile(path));
  const GreedyTrace result = SolveCapacitated(inst);
  if (!ValidateCover(inst, result.cover).valid() || !IsComplete(inst, result.cover)) {
    throw Error("internal: greedy returned an invalid cover");
  }
  ctx.Emit(trace ? TraceToJson(result) : CoverToJson(result.cover));
  std::ostream& log = ctx.report();
  log << "cost=" << CostText(result.total_cost)
      << " sets=" << result.cover.chosen.size() << " n=" << inst.n_elements
      << "\n";
  if (exact) {
    const OptCover opt = OptCapacitatedCover(inst);
    const double ratio =
        opt.cost.units() == 0
            ? 1.0
            : result.total_cost.ToDouble() / opt.cost.ToDouble();
    const bool within = WithinHarmonicFactor(result.total_cost, opt.cost, inst.n_elements);
    log << "opt=" << CostText(opt.cost) << " ratio=" << Fmt(ratio)
        << " H_n=" << Fmt(Harmonic(inst.n_elements))
        << " within_bound=" << (within ? "yes" : "NO") << "\n";
    if (!within) return kExitInvalid;
  }
  return kExitOk;
}

// ---- epsnet ----

PointSet LoadPoints(Context& ctx, const std::string& path, uint64_t seed,
                    bool repair) {
  PointSet points = ParsePointsCsv(ReadFile(path));
  if (repair && !InGeneralPosition(points)) {
    points = JitterTies(points, MixSeed(seed, 0x6a17));
    ctx.err << "warning: repeated coordinates in " << path
            << "; applied seeded rank-preserving jitter\n";
  }
  return points;
}

struct EpsnetArgs {
  std::string points;
  double eps = 0.1;
  uint64_t seed = 0;
  bool verify = false;
  std::string profile;
};

int RunEpsnet(Context& ctx, const EpsnetArgs& a) {
  const PointSet original = ParsePointsCsv(ReadFile(a.points));
  const PointSet points = LoadPoints(ctx, a.points, a.seed, true);
  NetConfig config;
  config.eps = a.eps;
  config.seed = a.seed;
  const EpsNetResult result = BuildEpsNet(points, config);
  ctx.Emit(EpsNetToJson(result));
  if (!a.profile.empty()) WriteFile(a.profile, DecayToCsv(DecayProfile(result)));
  std::ostream& log = ctx.report();
  log << "n=" << result.n << " eps=" << Fmt(result.eps)
      << " size=" << result.net.size()
      << " first_level=" << result.first_level.size()
      << " retries=" << result.retries << "\n";
  if (a.verify) {
    const NetCheck check = VerifyEpsNet(original, a.eps, result.net);
    if (!check.ok) {
      const Rect& w = *check.witness;
      log << "verify: FAILED, net-empty rectangle [" << Fmt(w.x_lo) << ", "
          << Fmt(w.x_hi) << "] x [" << Fmt(w.y_lo) << ", " << Fmt(w.y_hi)
          << "] holds " << check.witness_count << " points\n";
      return kExitInvalid;
    }
    log << "verify: ok\n";
  }
  return kExitOk;
}

// ---- hitset ----

int RunHitset(Context& ctx, const std::string& points_path,
              const std::string& rects_path, uint64_t seed, bool exact) {
  const PointSet points = ParsePointsCsv(ReadFile(points_path));
  const RectSet rects = ParseRectsCsv(ReadFile(rects_path));
  NetConfig config;
  config.seed = seed;
  const HittingResult result = SolveHitting(points, rects, config);
  const HitCheck check = VerifyHitting(points, result.points, rects);
  ctx.Emit(HittingToJson(result));
  std::ostream& log = ctx.report();
  log << "size=" << result.points.size() << " guess=" << result.guess
      << " rounds=" << result.log.size() << " net_calls=" << result.net_calls
      << "\n";
  if (!check.ok) {
    log << "verify: FAILED, rectangle " << *check.unhit << " unhit\n";
    return kExitInvalid;
  }
  log << "verify: ok\n";
  if (exact) {
    const OptHitting opt = OptHittingSet(points, rects);
    const double bound =
        kHittingConstant * LogLog2(std::max(4, opt.size)) * opt.size;
    log << "opt=" << opt.size << " ratio="
        << Fmt(static_cast<double>(result.points.size()) / std::max(1, opt.size))
        << " bound=" << Fmt(bound) << "\n";
  }
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::string suite;
  std::string seeds;
  int n = 0;
  std::string distribution = "uniform";
  int max_n = 10;
  int max_m = 6;
  int max_points = 20;
  int max_rects = 25;
};

int RunBench(Context& ctx, const BenchArgs& a) {
  const std::vector<uint64_t> seeds = ParseSeeds(a.seeds);
  std::string csv;
  int failures = 0;
  if (a.suite == "net-size") {
    NetSizeOptions options;
    if (a.n > 0) options.n = a.n;
    options.distribution = a.distribution;
    const auto rows = NetSizeSuite(seeds, options);
    for (const auto& r : rows) failures += r.mean_size > r.bound;
    csv = NetSizeCsv(rows);
  } else if (a.suite == "decay") {
    DecayOptions options;
    if (a.n > 0) options.n = a.n;
    options.distribution = a.distribution;
    csv = DecayCsv(DecaySuite(seeds, options));
  } else if (a.suite == "ratio") {
    RatioOptions options;
    options.max_n = a.max_n;
    options.max_m = a.max_m;
    if (options.max_n < 1 || options.max_m < 1 || options.max_m > 20) {
      throw MalformedInput("--max-n must be >= 1 and --max-m in 1..20");
    }
    const auto rows = RatioSuite(seeds, options);
    for (const auto& r : rows) failures += r.violations;
    csv = RatioCsv(rows);
  } else if (a.suite == "hitting") {
    HittingOptions options;
    options.max_points = a.max_points;
    options.max_rects = a.max_rects;
    if (options.max_points < 1 || options.max_rects < 1) {
      throw MalformedInput("--max-points and --max-rects must be >= 1");
    }
    const auto rows = HittingSuite(seeds, options);
    for (const auto& r : rows) failures += !r.valid || r.size > r.bound;
    csv = HittingCsv(rows);
  } else {
    throw MalformedInput("unknown suite '" + a.suite + "'");
  }
  ctx.Emit(csv);
  ctx.report() << "suite=" << a.suite << " seeds=" << seeds.size()
               << " failed_rows=" << failures << "\n";
  return failures == 0 ? kExitOk : kExitInvalid;
}

// ---- exact ----

int RunExactCover(Context& ctx, const std::string& path) {
  const SetCoverInstance inst = ParseInstanceJson(ReadFile(path));
  const OptCover opt = OptCapacitatedCover(inst);
  ctx.Emit(CoverToJson(opt.witness));
  ctx.report() << "opt=" << CostText(opt.cost) << " sets=" << opt.family.size()
               << "\n";
  return kExitOk;
}

int RunExactHitset(Context& ctx, const std::string& points_path,
                   const std::string& rects_path) {
  const PointSet points = ParsePointsCsv(ReadFile(points_path));
  const RectSet rects = ParseRectsCsv(ReadFile(rects_path));
  CheckHittingInstance(points, rects);
  const OptHitting opt = OptHittingSet(points, rects);
  const nlohmann::json doc = {{"format_version", kFormatVersion},
                              {"points", opt.points},
                              {"size", opt.size}};
  ctx.Emit(doc.dump(2) + "\n");
  ctx.report() << "opt=" << opt.size << "\n";
  return kExitOk;
}

int RunExactMer(Context& ctx, const std::string& path) {
  const PointSet points = ParsePointsCsv(ReadFile(path));
  ctx.out << "maximal_empty_rects=" << CountAllMaximalEmptyRects(points) << "\n";
  return kExitOk;
}

int RunExactVerifyNet(Context& ctx, const std::string& points_path,
                      const std::string& net_path, double eps) {
  const PointSet points = ParsePointsCsv(ReadFile(points_path));
  std::vector<int> net;
  try {
    const nlohmann::json doc = nlohmann::json::parse(ReadFile(net_path));
    net = doc.at("net").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid net file: ") + e.what());
  }
  const NetCheck check = VerifyEpsNet(points, eps, net);
  if (!check.ok) {
    const Rect& w = *check.witness;
    ctx.out << "FAILED: net-empty rectangle [" << Fmt(w.x_lo) << ", "
            << Fmt(w.x_hi) << "] x [" << Fmt(w.y_lo) << ", " << Fmt(w.y_hi)
            << "] holds " << check.witness_count << " points\n";
    return kExitInvalid;
  }
  ctx.out << "ok: every rectangle with >= " << HeavyThreshold(eps, static_cast<int64_t>(points.size()))
          << " points holds a net point\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Capacitated set cover and rectangle epsilon-net toolkit",
               "covering"};
  app.require_subcommand(1);
  Context ctx{out, err, {}};
  std::function<int()> action;

  // gen
  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("kind", gen.kind,
                      "random-cover | antenna | uniform-points | "
                      "clustered-points | staircase | grid | hitting")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed")->required();
  gen_cmd->add_option("--out", gen.prefix,
                      "Output prefix; suffixes .json, .scene.json, .csv, "
                      ".points.csv, .rects.csv are appended")
      ->required();
  gen_cmd->add_option("--n", gen.n,
                      "Elements (random-cover, default 10) or points "
                      "(point kinds, default 2000)");
  gen_cmd->add_option("--m", gen.cover.m, "Sets (random-cover)");
  gen_cmd->add_option("--density", gen.cover.density, "Membership probability");
  gen_cmd->add_option("--cost-min", gen.cover.cost_min, "Smallest integer cost");
  gen_cmd->add_option("--cost-max", gen.cover.cost_max, "Largest integer cost");
  gen_cmd->add_option("--cap-min", gen.cover.cap_min, "Smallest capacity");
  gen_cmd->add_option("--cap-max", gen.cover.cap_max, "Largest capacity");
  gen_cmd->add_option("--users", gen.antenna.users, "Users (antenna)");
  gen_cmd->add_option("--antennas", gen.antenna.antennas, "Antennas (antenna)");
  gen_cmd->add_option("--radius-min", gen.antenna.radius_min, "Smallest radius");
  gen_cmd->add_option("--radius-max", gen.antenna.radius_max, "Largest radius");
  gen_cmd->add_option("--s", gen.s, "Staircase half size");
  gen_cmd->add_option("--width", gen.w, "Grid width");
  gen_cmd->add_option("--height", gen.h, "Grid height");
  gen_cmd->add_option("--clusters", gen.clusters, "Cluster count");
  gen_cmd->add_option("--rects", gen.rects, "Rectangles (hitting)");
  gen_cmd->add_option("--max-side", gen.max_side, "Largest rectangle side");
  gen_cmd->callback([&] {
    if (gen.kind == "antenna") {
      gen.antenna.cost_min = gen.cover.cost_min;
      gen.antenna.cost_max = gen.cover.cost_max;
      if (gen_cmd->count("--cap-min")) gen.antenna.cap_min = gen.cover.cap_min;
      if (gen_cmd->count("--cap-max")) gen.antenna.cap_max = gen.cover.cap_max;
    }
    action = [&] { return RunGen(ctx, gen); };
  });

  // feas
  std::string feas_path;
  auto* feas_cmd = app.add_subcommand("feas", "Check feasibility by max-flow");
  feas_cmd->add_option("instance", feas_path, "Instance JSON")->required();
  feas_cmd->callback([&] { action = [&] { return RunFeas(ctx, feas_path); }; });

  // cover
  std::string cover_path;
  bool cover_trace = false, cover_exact = false;
  auto* cover_cmd = app.add_subcommand("cover", "Run the capacitated greedy");
  cover_cmd->add_option("instance", cover_path, "Instance JSON")->required();
  cover_cmd->add_flag("--trace", cover_trace, "Emit the per-step trace");
  cover_cmd->add_flag("--exact", cover_exact,
                      "Also solve exactly and compare with H_n");
  cover_cmd->add_option("--out", ctx.out_path, "Write the JSON here");
  cover_cmd->callback([&] {
    action = [&] { return RunCover(ctx, cover_path, cover_trace, cover_exact); };
  });

  // epsnet
  EpsnetArgs net;
  auto* net_cmd = app.add_subcommand("epsnet", "Build an epsilon-net");
  net_cmd->add_option("points", net.points, "Points CSV")->required();
  net_cmd->add_option("--eps", net.eps, "Epsilon in (0, 1)")->required();
  net_cmd->add_option("--seed", net.seed, "64-bit seed")->required();
  net_cmd->add_flag("--verify", net.verify, "Check the net exactly");
  net_cmd->add_option("--profile", net.profile, "Write the decay table CSV here");
  net_cmd->add_option("--out", ctx.out_path, "Write the net JSON here");
  net_cmd->callback([&] { action = [&] { return RunEpsnet(ctx, net); }; });

  // hitset
  std::string hit_points, hit_rects;
  uint64_t hit_seed = 0;
  bool hit_exact = false;
  auto* hit_cmd = app.add_subcommand("hitset", "Hitting set by reweighting");
  hit_cmd->add_option("points", hit_points, "Points CSV")->required();
  hit_cmd->add_option("rects", hit_rects, "Rectangles CSV")->required();
  hit_cmd->add_option("--seed", hit_seed, "64-bit seed")->required();
  hit_cmd->add_flag("--exact", hit_exact, "Also compute the optimum");
  hit_cmd->add_option("--out", ctx.out_path, "Write the result JSON here");
  hit_cmd->callback([&] {
    action = [&] {
      return RunHitset(ctx, hit_points, hit_rects, hit_seed, hit_exact);
    };
  });

  // bench
  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite to CSV");
  bench_cmd->add_option("suite", bench.suite, "net-size | decay | ratio | hitting")
      ->required();
  bench_cmd->add_option("--seeds", bench.seeds, "Seed list, e.g. 1..20 or 1,4,9")
      ->required();
  bench_cmd->add_option("--out", ctx.out_path, "Write the CSV here");
  bench_cmd->add_option("--n", bench.n,
                        "Points per instance (net-size 100000, decay 5000)");
  bench_cmd->add_option("--dist", bench.distribution,
                        "uniform | clustered | staircase");
  bench_cmd->add_option("--max-n", bench.max_n, "Largest n (ratio)");
  bench_cmd->add_option("--max-m", bench.max_m, "Largest m (ratio)");
  bench_cmd->add_option("--max-points", bench.max_points, "Largest point count (hitting)");
  bench_cmd->add_option("--max-rects", bench.max_rects, "Largest rectangle count (hitting)");
  bench_cmd->callback([&] { action = [&] { return RunBench(ctx, bench); }; });

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "Brute-force oracles");
  exact_cmd->require_subcommand(1);
  std::string ex_a, ex_b;
  double ex_eps = 0.1;
  auto* ex_cover = exact_cmd->add_subcommand("cover", "Optimal capacitated cover");
  ex_cover->add_option("instance", ex_a, "Instance JSON")->required();
  ex_cover->add_option("--out", ctx.out_path, "Write the cover JSON here");
  ex_cover->callback([&] { action = [&] { return RunExactCover(ctx, ex_a); }; });
  auto* ex_hit = exact_cmd->add_subcommand("hitset", "Minimum hitting set");
  ex_hit->add_option("points", ex_a, "Points CSV")->required();
  ex_hit->add_option("rects", ex_b, "Rectangles CSV")->required();
  ex_hit->add_option("--out", ctx.out_path, "Write the result JSON here");
  ex_hit->callback([&] { action = [&] { return RunExactHitset(ctx, ex_a, ex_b); }; });
  auto* ex_mer = exact_cmd->add_subcommand("mer", "Count maximal empty rectangles");
  ex_mer->add_option("points", ex_a, "Points CSV")->required();
  ex_mer->callback([&] { action = [&] { return RunExactMer(ctx, ex_a); }; });
  auto* ex_verify = exact_cmd->add_subcommand("verify-net", "Check a net exactly");
  ex_verify->add_option("points", ex_a, "Points CSV")->required();
  ex_verify->add_option("net", ex_b, "Net JSON with a \"net\" id array")->required();
  ex_verify->add_option("--eps", ex_eps, "Epsilon in (0, 1)")->required();
  ex_verify->callback([&] {
    action = [&] { return RunExactVerifyNet(ctx, ex_a, ex_b, ex_eps); };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("covering");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return action ? action() : kExitParse;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what();
    if (e.max_coverage() >= 0) err << " (f=" << e.max_coverage() << ")";
    err << "\n";
    return kExitInvalid;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const BgDivergence& e) {
    err << "diverged: " << e.what() << "\n";
    return kExitBudget;
  } catch (const NetSampleFailure& e) {
    err << "net sampling failed: " << e.what() << "\n";
    return kExitBudget;
  }
}

}  // namespace covering::tools
