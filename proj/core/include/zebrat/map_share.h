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

#ifndef ZEBRAT_MAP_SHARE_H_
#define ZEBRAT_MAP_SHARE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zebrat/kinematics.h"
#include "zebrat/lidar.h"
#include "zebrat/world.h"

namespace zebrat {

enum class CellKnowledge : std::uint8_t { kUnknown = 0, kFree = 1, kOccupied = 2 };

// An agent's scan-derived belief about the world, aligned with a world grid.
class KnownMap {
 public:
  KnownMap(int width, int height, double resolution, double origin_x,
           double origin_y);
  static KnownMap Like(const OccupancyGrid& grid);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  double origin_x() const { return origin_x_; }
  double origin_y() const { return origin_y_; }

  CellKnowledge At(int col, int row) const {
    return static_cast<CellKnowledge>(
        cells_[static_cast<std::size_t>(row) * width_ + col]);
  }
  void Set(int col, int row, CellKnowledge value);

  // Marks the cells crossed by each beam free and the blocking cell occupied.
  // Occupied cells stay occupied.
  void Integrate(const OccupancyGrid& world, const KinematicState& pose,
                 const ScanConfig& cfg);

  // Cell-wise merge where occupied beats free beats unknown. Returns the
  // number of cells that changed. Throws InvalidParameterError when the maps
  // are not aligned.
  std::size_t MergeFrom(const KnownMap& other);

  std::size_t Count(CellKnowledge value) const;

  // Row-major run-length encoding: `<count><symbol>` runs with symbols
  // '?' (unknown), '.' (free), '#' (occupied).
  std::string EncodeRle() const;
  // Throws ParseError.
  static KnownMap DecodeRle(std::string_view rle, int width, int height,
                            double resolution, double origin_x,
                            double origin_y);

  bool operator==(const KnownMap&) const = default;

 private:
  int width_;
  int height_;
  double resolution_;
  double origin_x_;
  double origin_y_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace zebrat

#endif  // ZEBRAT_MAP_SHARE_H_
