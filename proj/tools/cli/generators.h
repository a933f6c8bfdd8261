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

#ifndef COVERING_TOOLS_CLI_GENERATORS_H_
#define COVERING_TOOLS_CLI_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "covering/geometry.h"
#include "covering/rng.h"
#include "covering/setsystem.h"

namespace covering::tools {

// Integer ranges are inclusive.
struct CoverParams {
  int n = 10;
  int m = 6;
  double density = 0.4;  // membership probability per (set, element)
  int64_t cost_min = 1;
  int64_t cost_max = 10;
  int64_t cap_min = 1;
  int64_t cap_max = 3;
};

SetCoverInstance RandomCover(const CoverParams& params, Rng& rng);

// Redraws until f(all sets) = n. Throws Infeasible after `attempts` draws.
SetCoverInstance RandomFeasibleCover(const CoverParams& params, Rng& rng,
                                     int attempts = 1000);

struct Antenna {
  double x = 0;
  double y = 0;
  double radius = 0;
  int64_t cost = 1;
  int64_t capacity = 1;
};

// Users and disk antennas in [0, 100]^2. The reduced instance has one
// element per user and one set per antenna holding the users within its
// radius (closed disk).
struct AntennaScene {
  std::vector<Point> users;
  std::vector<Antenna> antennas;
};

struct AntennaParams {
  int users = 50;
  int antennas = 8;
  double radius_min = 15;
  double radius_max = 35;
  int64_t cost_min = 1;
  int64_t cost_max = 10;
  int64_t cap_min = 5;
  int64_t cap_max = 15;
};

AntennaScene RandomAntennaScene(const AntennaParams& params, Rng& rng);
SetCoverInstance ReduceAntennaScene(const AntennaScene& scene);
std::string AntennaSceneToJson(const AntennaScene& scene);
AntennaScene ParseAntennaSceneJson(const std::string& text);

// Uniform in the unit square.
PointSet UniformPoints(int n, Rng& rng);

// Gaussian blobs (sigma 0.03) around `clusters` uniform centres.
PointSet ClusteredPoints(int n, int clusters, Rng& rng);

// 2s points a_i = (-i, i), b_j = (j, 3s + 1 - j), i, j = 1..s. Every pair
// (a_i, b_j) spans its own maximal empty rectangle, so there are more
// than s^2 of them. General position.
PointSet DoubleStaircase(int s);

// Double staircase with n points in total; for odd n the a side gets the
// extra point.
PointSet DoubleStaircasePoints(int n);

// w x h integer lattice; deliberately degenerate.
PointSet Grid(int w, int h);

// m rectangles, each a random box around a randomly chosen point, so every
// rectangle is stabbed. Sides are uniform in (0, max_side].
RectSet StabbedRects(const PointSet& points, int m, double max_side, Rng& rng);

// Named point distribution: "uniform", "clustered" or "staircase".
PointSet PointsOfKind(const std::string& kind, int n, Rng& rng);

}  // namespace covering::tools

#endif  // COVERING_TOOLS_CLI_GENERATORS_H_
