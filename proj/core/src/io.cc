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

#include "covering/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "covering/error.h"
#include "json.hpp"

namespace covering {

using nlohmann::json;

std::string FormatDouble(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0) return "0";  // folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseDecimal(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw MalformedInput("not a number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double ParseNumber(std::string_view text) {
  const std::string_view t = Trim(text);
  double value;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    const double p = ParseDecimal(Trim(t.substr(0, slash)), t);
    const double q = ParseDecimal(Trim(t.substr(slash + 1)), t);
    if (q == 0) throw MalformedInput("zero denominator: '" + std::string(t) + "'");
    value = p / q;
  } else {
    value = ParseDecimal(t, t);
  }
  if (!std::isfinite(value)) {
    throw MalformedInput("not a finite number: '" + std::string(t) + "'");
  }
  return value;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

json ParseJson(std::string_view text, const json::parser_callback_t& cb = nullptr) {
  try {
    return json::parse(text.begin(), text.end(), cb);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

void CheckVersion(const json& doc) {
  if (!doc.is_object()) throw MalformedInput("expected a JSON object");
  if (auto it = doc.find("format_version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
      throw MalformedInput("unsupported format_version");
    }
  }
}

const json& Field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw MalformedInput(std::string("missing field '") + name + "'");
  }
  return *it;
}

int64_t IntField(const json& obj, const char* name) {
  const json& v = Field(obj, name);
  if (!v.is_number_integer()) {
    throw MalformedInput(std::string("field '") + name + "' must be an integer");
  }
  return v.get<int64_t>();
}

json CostJson(Cost c) {
  if (c.IsIntegral()) return c.units() / Cost::kUnitsPerOne;
  return c.ToDouble();
}

// Infinite coordinates become strings, which JSON numbers cannot hold.
json CoordJson(double v) {
  if (std::isinf(v)) return FormatDouble(v);
  return v;
}

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

SetCoverInstance ParseInstanceJson(std::string_view text) {
  const json doc = ParseJson(text);
  CheckVersion(doc);
  const int64_t n = IntField(doc, "n");
  if (n < 0 || n > (int64_t{1} << 30)) throw MalformedInput("n out of range");
  const json& sets = Field(doc, "sets");
  if (!sets.is_array()) throw MalformedInput("'sets' must be an array");
  std::vector<SetEntry> entries;
  for (const json& s : sets) {
    if (!s.is_object()) throw MalformedInput("set entries must be objects");
    SetEntry e;
    e.id = static_cast<SetId>(IntField(s, "id"));
    const json& members = Field(s, "members");
    if (!members.is_array()) throw MalformedInput("'members' must be an array");
    for (const json& m : members) {
      if (!m.is_number_integer()) throw MalformedInput("members must be integers");
      e.members.push_back(m.get<ElementId>());
    }
    const json& cost = Field(s, "cost");
    if (!cost.is_number()) throw MalformedInput("'cost' must be a number");
    e.cost = cost.is_number_integer()
                 ? Cost::FromUnits(cost.get<int64_t>() * Cost::kUnitsPerOne)
                 : Cost::FromDouble(cost.get<double>());
    if (cost.is_number_integer() && cost.get<int64_t>() < 0) {
      throw MalformedInput("costs must be non-negative");
    }
    e.capacity = IntField(s, "capacity");
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const SetEntry& a, const SetEntry& b) { return a.id < b.id; });
  return MakeInstance(static_cast<int>(n), std::move(entries));
}

std::string InstanceToJson(const SetCoverInstance& inst) {
  json sets = json::array();
  for (const SetEntry& s : inst.sets) {
    sets.push_back({{"id", s.id},
                    {"members", s.members},
                    {"cost", CostJson(s.cost)},
                    {"capacity", s.capacity}});
  }
  return Dump({{"format_version", kFormatVersion},
               {"n", inst.n_elements},
               {"sets", std::move(sets)}});
}

AssignmentCover ParseCoverJson(std::string_view text) {
  AssignmentCover cover;
  std::string top_key;
  std::string element_key;
  std::string bad;
  auto cb = [&](int depth, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::key && depth == 1) {
      top_key = parsed.get<std::string>();
    } else if (top_key == "assignment" && depth == 2) {
      if (event == json::parse_event_t::key) {
        element_key = parsed.get<std::string>();
      } else if (event == json::parse_event_t::value) {
        int element = 0;
        auto [ptr, ec] = std::from_chars(
            element_key.data(), element_key.data() + element_key.size(), element);
        if (ec != std::errc() || ptr != element_key.data() + element_key.size() ||
            !parsed.is_number_integer()) {
          if (bad.empty()) bad = element_key;
        } else {
          cover.assignment.emplace_back(element, parsed.get<SetId>());
        }
      }
    }
    return true;
  };
  const json doc = ParseJson(text, cb);
  if (!bad.empty()) {
    throw MalformedInput("bad assignment entry for key '" + bad + "'");
  }
  CheckVersion(doc);
  const json& chosen = Field(doc, "chosen");
  if (!chosen.is_array()) throw MalformedInput("'chosen' must be an array");
  for (const json& c : chosen) {
    if (!c.is_number_integer()) throw MalformedInput("chosen ids must be integers");
    cover.chosen.push_back(c.get<SetId>());
  }
  if (!Field(doc, "assignment").is_object()) {
    throw MalformedInput("'assignment' must be an object");
  }
  return cover;
}

namespace {

json CoverObject(const AssignmentCover& cover) {
  AssignmentCover c = cover;
  c.Canonicalize();
  // Keys sort as strings ("10" before "2"); still canonical.
  json assignment = json::object();
  for (auto [e, s] : c.assignment) assignment[std::to_string(e)] = s;
  return {{"format_version", kFormatVersion},
          {"chosen", c.chosen},
          {"assignment", std::move(assignment)}};
}

}  // namespace

std::string CoverToJson(const AssignmentCover& cover) {
  return Dump(CoverObject(cover));
}

std::string TraceToJson(const GreedyTrace& trace) {
  json steps = json::array();
  for (const GreedyStep& s : trace.steps) {
    steps.push_back({{"set", s.set},
                     {"gain", s.gain},
                     {"cost", CostJson(s.cost)},
                     {"ratio", s.ratio()},
                     {"covered", s.covered}});
  }
  json cover = CoverObject(trace.cover);
  cover.erase("format_version");
  return Dump({{"format_version", kFormatVersion},
               {"steps", std::move(steps)},
               {"cover", std::move(cover)},
               {"total_cost", CostJson(trace.total_cost)}});
}

namespace {

// Splits non-comment lines into numeric rows of the given width. A first
// row that does not parse as numbers is taken as the header.
std::vector<std::vector<double>> ParseCsv(std::string_view text, size_t width,
                                          const char* what) {
  std::vector<std::vector<double>> rows;
  bool first = true;
  size_t line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> cells;
    size_t start = 0;
    while (true) {
      size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const bool header = first && std::any_of(line.begin(), line.end(), [](char ch) {
      return std::isalpha(static_cast<unsigned char>(ch)) && ch != 'e' && ch != 'E';
    });
    first = false;
    if (header) continue;
    if (cells.size() != width) {
      throw MalformedInput(std::string(what) + " line " + std::to_string(line_no) +
                           ": expected " + std::to_string(width) + " columns");
    }
    std::vector<double> row;
    for (std::string_view cell : cells) {
      try {
        row.push_back(ParseNumber(cell));
      } catch (const MalformedInput& e) {
        throw MalformedInput(std::string(what) + " line " +
                             std::to_string(line_no) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PointSet ParsePointsCsv(std::string_view text) {
  PointSet points;
  for (const auto& row : ParseCsv(text, 2, "points")) {
    points.push_back({row[0], row[1]});
  }
  return points;
}

std::string PointsToCsv(const PointSet& points) {
  std::string out = "# format_version=1\nx,y\n";
  for (const Point& p : points) {
    out += FormatDouble(p.x) + "," + FormatDouble(p.y) + "\n";
  }
  return out;
}

RectSet ParseRectsCsv(std::string_view text) {
  RectSet rects;
  for (const auto& row : ParseCsv(text, 4, "rects")) {
    rects.push_back({row[0], row[1], row[2], row[3]});
  }
  return rects;
}

std::string RectsToCsv(const RectSet& rects) {
  std::string out = "# format_version=1\nx_lo,y_lo,x_hi,y_hi\n";
  for (const Rect& r : rects) {
    out += FormatDouble(r.x_lo) + "," + FormatDouble(r.y_lo) + "," +
           FormatDouble(r.x_hi) + "," + FormatDouble(r.y_hi) + "\n";
  }
  return out;
}

std::string EpsNetToJson(const EpsNetResult& result) {
  json levels = json::array();
  for (const LevelStats& l : result.levels) {
    int64_t heavy = 0;
    std::vector<int> secondary;
    for (const AnchoredRect& m : result.rects) {
      if (result.tree.nodes[static_cast<size_t>(m.node)].level != l.level || !m.heavy) {
        continue;
      }
      ++heavy;
      secondary.insert(secondary.end(), m.net.begin(), m.net.end());
    }
    std::sort(secondary.begin(), secondary.end());
    secondary.erase(std::unique(secondary.begin(), secondary.end()), secondary.end());
    levels.push_back({{"level", l.level},
                      {"nodes", l.nodes},
                      {"sample_points", l.sample_points},
                      {"rects", l.at_least.empty() ? 0 : l.at_least[0]},
                      {"heavy_rects", heavy},
                      {"secondary_points", secondary.size()},
                      {"at_least", l.at_least}});
  }
  json heavy = json::array();
  for (const AnchoredRect& m : result.rects) {
    if (!m.heavy) continue;
    heavy.push_back({{"node", m.node},
                     {"anchor", m.anchor == AnchorSide::kLeft ? "left" : "right"},
                     {"rect", {CoordJson(m.rect.x_lo), CoordJson(m.rect.y_lo),
                               CoordJson(m.rect.x_hi), CoordJson(m.rect.y_hi)}},
                     {"count", m.count},
                     {"weight_factor", m.weight_factor},
                     {"net", m.net},
                     {"attempts", m.attempts}});
  }
  return Dump({{"format_version", kFormatVersion},
               {"n", result.n},
               {"eps", result.eps},
               {"r", result.r},
               {"s", result.s},
               {"size", result.net.size()},
               {"net", result.net},
               {"first_level", result.first_level},
               {"tree_nodes", result.tree.nodes.size()},
               {"tree_levels", result.tree.levels()},
               {"retries", result.retries},
               {"levels", std::move(levels)},
               {"heavy_rects", std::move(heavy)}});
}

std::string DecayToCsv(const std::vector<DecayRow>& rows) {
  std::string out = "# format_version=1\nlevel,j,count\n";
  for (const DecayRow& r : rows) {
    out += std::to_string(r.level) + "," + std::to_string(r.j) + "," +
           std::to_string(r.count) + "\n";
  }
  return out;
}

std::string HittingToJson(const HittingResult& result) {
  json rounds = json::array();
  for (const HittingRound& r : result.log) {
    rounds.push_back({{"guess", r.guess},
                      {"round", r.round},
                      {"violated", r.violated ? json(*r.violated) : json(nullptr)},
                      {"doublings", r.doublings},
                      {"net_size", r.net_size},
                      {"net_attempts", r.net_attempts}});
  }
  return Dump({{"format_version", kFormatVersion},
               {"points", result.points},
               {"size", result.points.size()},
               {"guess", result.guess},
               {"net_calls", result.net_calls},
               {"rounds", std::move(rounds)}});
}

}  // namespace covering
