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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli/generators.h"
#include "cli/suites.h"
#include "covering/error.h"
#include "covering/exact.h"
#include "covering/hitting.h"
#include "covering/io.h"
#include "testing/oracles.h"

namespace covering::tools {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("covering_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  CliRun Cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun run;
    run.code = RunCli(args, out, err);
    run.out = out.str();
    run.err = err.str();
    return run;
  }

  std::string WriteWorkedExample(int capacity_override = 0) {
    SetCoverInstance inst = testing::WorkedExample();
    if (capacity_override > 0) {
      for (SetEntry& s : inst.sets) s.capacity = capacity_override;
    }
    const std::string path = Path(capacity_override ? "caps.json" : "example.json");
    WriteFile(path, InstanceToJson(inst));
    return path;
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({}).code, kExitParse);
  EXPECT_EQ(Cli({"cover"}).code, kExitParse);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(Cli({"gen", "staircase", "--out", Path("x")}).code, kExitParse)
      << "seed is mandatory";
}

TEST_F(CliTest, FeasReportsFlowValue) {
  CliRun ok = Cli({"feas", WriteWorkedExample()});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "f=6 / n=6 FEASIBLE\n");
  CliRun bad = Cli({"feas", WriteWorkedExample(1)});
  EXPECT_EQ(bad.code, kExitInvalid);
  EXPECT_EQ(bad.out, "f=4 / n=6 INFEASIBLE\n");
  WriteFile(Path("empty.json"), InstanceToJson(MakeInstance(0, {})));
  EXPECT_EQ(Cli({"feas", Path("empty.json")}).code, kExitOk);
  WriteFile(Path("broken.json"), "{\"n\": ");
  EXPECT_EQ(Cli({"feas", Path("broken.json")}).code, kExitParse);
  EXPECT_EQ(Cli({"feas", Path("missing.json")}).code, kExitParse);
}

TEST_F(CliTest, CoverWithExactComparison) {
  CliRun run = Cli({"cover", WriteWorkedExample(), "--exact", "--out", Path("c.json")});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_NE(run.out.find("cost=6"), std::string::npos);
  EXPECT_NE(run.out.find("opt=6 ratio=1 H_n=2.45 within_bound=yes"), std::string::npos);
  const AssignmentCover cover = ParseCoverJson(ReadFile(Path("c.json")));
  EXPECT_TRUE(ValidateCover(testing::WorkedExample(), cover).valid());
  EXPECT_EQ(CoverCost(testing::WorkedExample(), cover), Cost::FromDouble(6));

  CliRun trace = Cli({"cover", WriteWorkedExample(), "--trace"});
  EXPECT_NE(trace.out.find("\"steps\""), std::string::npos);
  EXPECT_NE(trace.err.find("cost=6"), std::string::npos);

  EXPECT_EQ(Cli({"cover", WriteWorkedExample(1)}).code, kExitInvalid);
}

TEST_F(CliTest, CoverWithZeroCostSet) {
  WriteFile(Path("zero.json"),
            InstanceToJson(MakeInstance(2, {{0, {0, 1}, Cost(), 2}})));
  CliRun run = Cli({"cover", Path("zero.json")});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_NE(run.err.find("cost=0"), std::string::npos);
}

TEST_F(CliTest, GenStaircase) {
  ASSERT_EQ(Cli({"gen", "staircase", "--s", "10", "--seed", "1", "--out", Path("st")}).code,
            kExitOk);
  const PointSet points = ParsePointsCsv(ReadFile(Path("st.csv")));
  EXPECT_EQ(points.size(), 20u);
  EXPECT_GE(CountAllMaximalEmptyRects(points), 25);
  CliRun count = Cli({"exact", "mer", Path("st.csv")});
  EXPECT_EQ(count.out, "maximal_empty_rects=179\n");
}

TEST_F(CliTest, GenRandomCoverRoundTrips) {
  ASSERT_EQ(Cli({"gen", "random-cover", "--n", "6", "--m", "4", "--seed", "2", "--out",
                 Path("rc")})
                .code,
            kExitOk);
  const std::string text = ReadFile(Path("rc.json"));
  const SetCoverInstance inst = ParseInstanceJson(text);
  EXPECT_EQ(inst.n_elements, 6);
  EXPECT_EQ(inst.num_sets(), 4);
  EXPECT_NO_THROW(CheckInstance(inst));
  EXPECT_EQ(InstanceToJson(inst), text);
}

TEST_F(CliTest, GenAntennaMembershipIsDiskContainment) {
  ASSERT_EQ(Cli({"gen", "antenna", "--users", "50", "--antennas", "8", "--seed", "3",
                 "--out", Path("ant")})
                .code,
            kExitOk);
  const SetCoverInstance inst = ParseInstanceJson(ReadFile(Path("ant.json")));
  const AntennaScene scene = ParseAntennaSceneJson(ReadFile(Path("ant.scene.json")));
  ASSERT_EQ(inst.n_elements, 50);
  ASSERT_EQ(inst.num_sets(), 8);
  for (SetId s = 0; s < 8; ++s) {
    const Antenna& a = scene.antennas[static_cast<size_t>(s)];
    std::vector<ElementId> expected;
    for (int u = 0; u < 50; ++u) {
      const Point p = scene.users[static_cast<size_t>(u)];
      if (std::hypot(p.x - a.x, p.y - a.y) <= a.radius * (1 + 1e-12)) expected.push_back(u);
    }
    EXPECT_EQ(inst.set(s).members, expected) << "antenna " << s;
    EXPECT_EQ(inst.set(s).capacity, a.capacity);
  }
}

TEST_F(CliTest, EpsnetVerifiesAndProfiles) {
  ASSERT_EQ(Cli({"gen", "uniform-points", "--n", "2000", "--seed", "4", "--out",
                 Path("u")})
                .code,
            kExitOk);
  CliRun run = Cli({"epsnet", Path("u.csv"), "--eps", "0.1", "--seed", "1", "--verify",
                 "--profile", Path("u.decay.csv"), "--out", Path("u.net.json")});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("verify: ok"), std::string::npos);
  EXPECT_EQ(ReadFile(Path("u.decay.csv")).rfind("# format_version=1\nlevel,j,count\n", 0),
            0u);
  CliRun check = Cli({"exact", "verify-net", Path("u.csv"), Path("u.net.json"), "--eps", "0.1"});
  EXPECT_EQ(check.code, kExitOk);
}

TEST_F(CliTest, EpsnetRejectsTooFewPoints) {
  WriteFile(Path("tiny.csv"), PointsToCsv({{0, 0}, {1, 1}, {2, 3}}));
  CliRun run = Cli({"epsnet", Path("tiny.csv"), "--eps", "0.5", "--seed", "1"});
  EXPECT_EQ(run.code, kExitParse);
  EXPECT_NE(run.err.find("n >= 2r"), std::string::npos);
}

TEST_F(CliTest, EpsnetOnStaircaseAndGrid) {
  ASSERT_EQ(Cli({"gen", "staircase", "--s", "200", "--seed", "1", "--out", Path("st")}).code,
            kExitOk);
  EXPECT_EQ(Cli({"epsnet", Path("st.csv"), "--eps", "0.1", "--seed", "2", "--verify"}).code,
            kExitOk);
  ASSERT_EQ(Cli({"gen", "grid", "--width", "20", "--height", "20", "--seed", "1", "--out",
                 Path("g")})
                .code,
            kExitOk);
  CliRun grid = Cli({"epsnet", Path("g.csv"), "--eps", "0.1", "--seed", "2", "--verify"});
  EXPECT_EQ(grid.code, kExitOk);
  EXPECT_NE(grid.err.find("warning: repeated coordinates"), std::string::npos);
}

TEST_F(CliTest, HitsetWithExactComparison) {
  ASSERT_EQ(Cli({"gen", "hitting", "--n", "30", "--rects", "40", "--seed", "5", "--out",
                 Path("h")})
                .code,
            kExitOk);
  CliRun run = Cli({"hitset", Path("h.points.csv"), Path("h.rects.csv"), "--seed", "5",
                 "--exact", "--out", Path("h.json")});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("verify: ok"), std::string::npos);
  EXPECT_NE(run.out.find("opt="), std::string::npos);
  CliRun exact = Cli({"exact", "hitset", Path("h.points.csv"), Path("h.rects.csv")});
  EXPECT_EQ(exact.code, kExitOk);

  WriteFile(Path("far.csv"), RectsToCsv({{0, 0, 1, 1}, {50, 50, 51, 51}}));
  CliRun unhittable = Cli({"hitset", Path("h.points.csv"), Path("far.csv"), "--seed", "1"});
  EXPECT_EQ(unhittable.code, kExitInvalid);
  EXPECT_NE(unhittable.err.find("rectangle 1"), std::string::npos);
}

TEST_F(CliTest, BenchSeedListsAndRatioColumn) {
  EXPECT_EQ(Cli({"bench", "ratio", "--seeds", ""}).code, kExitParse);
  EXPECT_EQ(Cli({"bench", "ratio", "--seeds", "5..1"}).code, kExitParse);
  EXPECT_EQ(Cli({"bench", "nope", "--seeds", "1"}).code, kExitParse);
  CliRun run = Cli({"bench", "ratio", "--seeds", "1..10", "--out", Path("ratio.csv")});
  EXPECT_EQ(run.code, kExitOk);
  const std::string csv = ReadFile(Path("ratio.csv"));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  EXPECT_EQ(line, "n,trials,mean_ratio,max_ratio,harmonic,violations");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 6u);
    EXPECT_LE(ParseNumber(cells[3]), ParseNumber(cells[4]) + 1e-12);
    EXPECT_EQ(cells[5], "0");
    ++rows;
  }
  EXPECT_EQ(rows, 10);
}

TEST_F(CliTest, ParseSeeds) {
  EXPECT_EQ(ParseSeeds("1..3"), (std::vector<uint64_t>{1, 2, 3}));
  EXPECT_EQ(ParseSeeds("4,1..2,9"), (std::vector<uint64_t>{4, 1, 2, 9}));
  EXPECT_THROW(ParseSeeds(""), MalformedInput);
  EXPECT_THROW(ParseSeeds(","), MalformedInput);
  EXPECT_THROW(ParseSeeds("a"), MalformedInput);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  ASSERT_EQ(Cli({"gen", "clustered-points", "--n", "3000", "--seed", "9", "--out",
                 Path("c")})
                .code,
            kExitOk);
  std::string first;
  for (int i = 0; i < 2; ++i) {
    const std::string out = Path("net" + std::to_string(i) + ".json");
    ASSERT_EQ(Cli({"epsnet", Path("c.csv"), "--eps", "0.05", "--seed", "3", "--out", out})
                  .code,
              kExitOk);
    if (i == 0) {
      first = ReadFile(out);
    } else {
      EXPECT_EQ(ReadFile(out), first);
    }
  }
}

TEST(JitterTiesTest, KeepsStrictOrderAndBreaksTies) {
  const PointSet points = {{0, 0}, {0, 0}, {1, 0}, {1, 2}};
  const PointSet jittered = JitterTies(points, 5);
  EXPECT_TRUE(InGeneralPosition(jittered));
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      if (points[i].x < points[j].x) {
        EXPECT_LT(jittered[i].x, jittered[j].x);
      }
      if (points[i].y < points[j].y) {
        EXPECT_LT(jittered[i].y, jittered[j].y);
      }
    }
  }
  EXPECT_EQ(jittered, JitterTies(points, 5));
}

}  // namespace
}  // namespace covering::tools
