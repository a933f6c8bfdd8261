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

#include "cli/generators.h"

#include <algorithm>
#include <cmath>

#include "covering/error.h"
#include "covering/flowcheck.h"
#include "json.hpp"

namespace covering::tools {

using nlohmann::json;

namespace {

void CheckRange(int64_t lo, int64_t hi, const char* what) {
  if (lo > hi) throw MalformedInput(std::string(what) + " range is empty");
}

}  // namespace

SetCoverInstance RandomCover(const CoverParams& params, Rng& rng) {
  if (params.n < 0 || params.m < 0) throw MalformedInput("n and m must be >= 0");
  if (!(params.density >= 0 && params.density <= 1)) {
    throw MalformedInput("density must lie in [0, 1]");
  }
  CheckRange(params.cost_min, params.cost_max, "cost");
  CheckRange(params.cap_min, params.cap_max, "capacity");
  if (params.cost_min < 0 || params.cap_min < 1) {
    throw MalformedInput("costs must be >= 0 and capacities >= 1");
  }
  std::vector<SetEntry> sets;
  for (int s = 0; s < params.m; ++s) {
    SetEntry e;
    e.id = s;
    for (int x = 0; x < params.n; ++x) {
      if (rng.Bernoulli(params.density)) e.members.push_back(x);
    }
    e.cost = Cost::FromUnits(rng.Between(params.cost_min, params.cost_max) *
                             Cost::kUnitsPerOne);
    e.capacity = rng.Between(params.cap_min, params.cap_max);
    sets.push_back(std::move(e));
  }
  return MakeInstance(params.n, std::move(sets));
}

SetCoverInstance RandomFeasibleCover(const CoverParams& params, Rng& rng,
                                     int attempts) {
  for (int i = 0; i < attempts; ++i) {
    SetCoverInstance inst = RandomCover(params, rng);
    if (IsFeasible(inst)) return inst;
  }
  throw Infeasible("no feasible instance in " + std::to_string(attempts) +
                   " draws");
}

AntennaScene RandomAntennaScene(const AntennaParams& params, Rng& rng) {
  if (params.users < 0 || params.antennas < 0) {
    throw MalformedInput("counts must be >= 0");
  }
  if (!(params.radius_min > 0 && params.radius_min <= params.radius_max)) {
    throw MalformedInput("radius range must be positive and nonempty");
  }
  CheckRange(params.cost_min, params.cost_max, "cost");
  CheckRange(params.cap_min, params.cap_max, "capacity");
  AntennaScene scene;
  for (int i = 0; i < params.users; ++i) {
    scene.users.push_back({rng.Uniform(0, 100), rng.Uniform(0, 100)});
  }
  for (int i = 0; i < params.antennas; ++i) {
    Antenna a;
    a.x = rng.Uniform(0, 100);
    a.y = rng.Uniform(0, 100);
    a.radius = rng.Uniform(params.radius_min, params.radius_max);
    a.cost = rng.Between(params.cost_min, params.cost_max);
    a.capacity = rng.Between(params.cap_min, params.cap_max);
    scene.antennas.push_back(a);
  }
  return scene;
}

SetCoverInstance ReduceAntennaScene(const AntennaScene& scene) {
  std::vector<SetEntry> sets;
  for (size_t i = 0; i < scene.antennas.size(); ++i) {
    const Antenna& a = scene.antennas[i];
    SetEntry e;
    e.id = static_cast<SetId>(i);
    for (size_t u = 0; u < scene.users.size(); ++u) {
      const double dx = scene.users[u].x - a.x;
      const double dy = scene.users[u].y - a.y;
      if (dx * dx + dy * dy <= a.radius * a.radius) {
        e.members.push_back(static_cast<ElementId>(u));
      }
    }
    e.cost = Cost::FromUnits(a.cost * Cost::kUnitsPerOne);
    e.capacity = a.capacity;
    sets.push_back(std::move(e));
  }
  return MakeInstance(static_cast<int>(scene.users.size()), std::move(sets));
}

std::string AntennaSceneToJson(const AntennaScene& scene) {
  json users = json::array();
  for (const Point& p : scene.users) users.push_back({p.x, p.y});
  json antennas = json::array();
  for (size_t i = 0; i < scene.antennas.size(); ++i) {
    const Antenna& a = scene.antennas[i];
    antennas.push_back({{"id", i},
                        {"x", a.x},
                        {"y", a.y},
                        {"radius", a.radius},
                        {"cost", a.cost},
                        {"capacity", a.capacity}});
  }
  json doc = {{"format_version", 1},
              {"users", std::move(users)},
              {"antennas", std::move(antennas)}};
  return doc.dump(2) + "\n";
}

AntennaScene ParseAntennaSceneJson(const std::string& text) {
  AntennaScene scene;
  try {
    const json doc = json::parse(text);
    for (const json& u : doc.at("users")) {
      scene.users.push_back({u.at(0).get<double>(), u.at(1).get<double>()});
    }
    for (const json& a : doc.at("antennas")) {
      scene.antennas.push_back({a.at("x").get<double>(), a.at("y").get<double>(),
                                a.at("radius").get<double>(),
                                a.at("cost").get<int64_t>(),
                                a.at("capacity").get<int64_t>()});
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid antenna scene: ") + e.what());
  }
  return scene;
}

PointSet UniformPoints(int n, Rng& rng) {
  PointSet points;
  points.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) points.push_back({rng.Uniform(), rng.Uniform()});
  return points;
}

PointSet ClusteredPoints(int n, int clusters, Rng& rng) {
  if (clusters < 1) throw MalformedInput("need at least one cluster");
  std::vector<Point> centres;
  for (int c = 0; c < clusters; ++c) centres.push_back({rng.Uniform(), rng.Uniform()});
  PointSet points;
  points.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    const Point c = centres[static_cast<size_t>(rng.Below(static_cast<uint64_t>(clusters)))];
    points.push_back({c.x + 0.03 * rng.Normal(), c.y + 0.03 * rng.Normal()});
  }
  return points;
}

PointSet DoubleStaircase(int s) { return DoubleStaircasePoints(2 * s); }

PointSet DoubleStaircasePoints(int n) {
  const int b = n / 2;
  const int a = n - b;
  PointSet points;
  for (int i = 1; i <= a; ++i) points.push_back({-double(i), double(i)});
  for (int j = 1; j <= b; ++j) {
    points.push_back({double(j), double(2 * a + b + 1 - j)});
  }
  return points;
}

PointSet Grid(int w, int h) {
  PointSet points;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) points.push_back({double(x), double(y)});
  }
  return points;
}

RectSet StabbedRects(const PointSet& points, int m, double max_side, Rng& rng) {
  if (points.empty() && m > 0) throw MalformedInput("no points to stab");
  if (!(max_side > 0)) throw MalformedInput("max_side must be positive");
  RectSet rects;
  for (int i = 0; i < m; ++i) {
    const Point p = points[static_cast<size_t>(rng.Below(points.size()))];
    const double w = rng.Uniform(0, max_side);
    const double h = rng.Uniform(0, max_side);
    const double fx = rng.Uniform();
    const double fy = rng.Uniform();
    rects.push_back({p.x - fx * w, p.y - fy * h, p.x + (1 - fx) * w,
                     p.y + (1 - fy) * h});
  }
  return rects;
}

PointSet PointsOfKind(const std::string& kind, int n, Rng& rng) {
  if (kind == "uniform") return UniformPoints(n, rng);
  if (kind == "clustered") return ClusteredPoints(n, 8, rng);
  if (kind == "staircase") return DoubleStaircasePoints(n);
  throw MalformedInput("unknown point distribution '" + kind + "'");
}

}  // namespace covering::tools
