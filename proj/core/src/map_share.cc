// Copyright 2026 The ZebraT Simulator Authors
//
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

#include "zebrat/map_share.h"

#include <algorithm>

#include "zebrat/errors.h"

namespace zebrat {
namespace {

char Symbol(std::uint8_t value) {
  switch (static_cast<CellKnowledge>(value)) {
    case CellKnowledge::kUnknown:
      return '?';
    case CellKnowledge::kFree:
      return '.';
    case CellKnowledge::kOccupied:
      return '#';
  }
  return '?';
}

}  // namespace

KnownMap::KnownMap(int width, int height, double resolution, double origin_x,
                   double origin_y)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_x_(origin_x),
      origin_y_(origin_y) {
  if (width < 1 || height < 1 || !(resolution > 0.0)) {
    throw InvalidParameterError("known map needs a positive size");
  }
  cells_.assign(static_cast<std::size_t>(width) * height, 0);
}

KnownMap KnownMap::Like(const OccupancyGrid& grid) {
  return KnownMap(grid.width(), grid.height(), grid.resolution(),
                  grid.origin_x(), grid.origin_y());
}

void KnownMap::Set(int col, int row, CellKnowledge value) {
  if (col < 0 || row < 0 || col >= width_ || row >= height_) {
    throw InvalidParameterError("known map cell out of bounds");
  }
  cells_[static_cast<std::size_t>(row) * width_ + col] =
      static_cast<std::uint8_t>(value);
}

void KnownMap::Integrate(const OccupancyGrid& world, const KinematicState& pose,
                         const ScanConfig& cfg) {
  ValidateScanConfig(cfg);
  const KinematicState sensor = SensorPose(pose, cfg.mount);
  auto mark = [this](const CellIndex& c, CellKnowledge value) {
    if (c.col < 0 || c.row < 0 || c.col >= width_ || c.row >= height_) return;
    auto& cell = cells_[static_cast<std::size_t>(c.row) * width_ + c.col];
    cell = std::max(cell, static_cast<std::uint8_t>(value));
  };
  for (int i = 0; i < cfg.num_beams; ++i) {
    const RayTrace trace =
        TraceRay(world, {sensor.x, sensor.y},
                 sensor.theta + BeamAngle(cfg, i), cfg.max_range);
    for (const auto& c : trace.free_cells) mark(c, CellKnowledge::kFree);
    if (trace.hit) mark(*trace.hit, CellKnowledge::kOccupied);
  }
}

std::size_t KnownMap::MergeFrom(const KnownMap& other) {
  if (other.width_ != width_ || other.height_ != height_ ||
      other.resolution_ != resolution_ || other.origin_x_ != origin_x_ ||
      other.origin_y_ != origin_y_) {
    throw InvalidParameterError("cannot merge maps with different geometry");
  }
  std::size_t changed = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const std::uint8_t merged = std::max(cells_[i], other.cells_[i]);
    if (merged != cells_[i]) {
      cells_[i] = merged;
      ++changed;
    }
  }
  return changed;
}

std::size_t KnownMap::Count(CellKnowledge value) const {
  return static_cast<std::size_t>(std::count(
      cells_.begin(), cells_.end(), static_cast<std::uint8_t>(value)));
}

std::string KnownMap::EncodeRle() const {
  std::string out;
  std::size_t i = 0;
  while (i < cells_.size()) {
    std::size_t j = i;
    while (j < cells_.size() && cells_[j] == cells_[i]) ++j;
    out += std::to_string(j - i);
    out += Symbol(cells_[i]);
    i = j;
  }
  return out;
}

KnownMap KnownMap::DecodeRle(std::string_view rle, int width, int height,
                             double resolution, double origin_x,
                             double origin_y) {
  KnownMap map(width, height, resolution, origin_x, origin_y);
  std::size_t filled = 0;
  std::size_t pos = 0;
  while (pos < rle.size()) {
    std::size_t count = 0;
    const std::size_t start = pos;
    while (pos < rle.size() && rle[pos] >= '0' && rle[pos] <= '9') {
      count = count * 10 + static_cast<std::size_t>(rle[pos] - '0');
      ++pos;
    }
    if (pos == start || pos >= rle.size() || count == 0) {
      throw ParseError("malformed run-length map", 1, pos + 1);
    }
    std::uint8_t value = 0;
    switch (rle[pos]) {
      case '?':
        value = 0;
        break;
      case '.':
        value = 1;
        break;
      case '#':
        value = 2;
        break;
      default:
        throw ParseError("unknown map symbol", 1, pos + 1);
    }
    ++pos;
    if (filled + count > map.cells_.size()) {
      throw ParseError("run-length map longer than the grid", 1, pos);
    }
    std::fill_n(map.cells_.begin() + static_cast<long>(filled), count, value);
    filled += count;
  }
  if (filled != map.cells_.size()) {
    throw ParseError("run-length map shorter than the grid", 1, pos + 1);
  }
  return map;
}

}  // namespace zebrat
