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

#ifndef ZEBRAT_WORLD_H_
#define ZEBRAT_WORLD_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zebrat/kinematics.h"
#include "zebrat/robot_model.h"

namespace zebrat {

struct CellIndex {
  int col = 0;
  int row = 0;

  bool operator==(const CellIndex&) const = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

// Binary occupancy grid. Cell (col, row) covers
// [origin_x + col*res, origin_x + (col+1)*res) x [origin_y + row*res, ...).
// Queries outside the grid report occupied, so the world is always closed.
class OccupancyGrid {
 public:
  // Throws InvalidParameterError unless width, height >= 1 and resolution > 0.
  OccupancyGrid(int width, int height, double resolution,
                double origin_x = 0.0, double origin_y = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  double origin_x() const { return origin_x_; }
  double origin_y() const { return origin_y_; }
  std::size_t size() const { return cells_.size(); }

  bool InBounds(int col, int row) const {
    return col >= 0 && row >= 0 && col < width_ && row < height_;
  }
  bool InBounds(const CellIndex& c) const { return InBounds(c.col, c.row); }
  bool Occupied(int col, int row) const {
    return !InBounds(col, row) ||
           cells_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  bool Occupied(const CellIndex& c) const { return Occupied(c.col, c.row); }
  void Set(int col, int row, bool occupied);

  // Row-major index, row 0 first.
  std::size_t Index(const CellIndex& c) const {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }
  CellIndex FromIndex(std::size_t index) const {
    return {static_cast<int>(index % width_), static_cast<int>(index / width_)};
  }

  Point2 CellCenter(const CellIndex& c) const;
  // Cell containing the point; may be out of bounds.
  CellIndex CellAt(const Point2& p) const;

  double max_x() const { return origin_x_ + width_ * resolution_; }
  double max_y() const { return origin_y_ + height_ * resolution_; }

  // Marks every cell whose center lies in [x0, x1) x [y0, y1).
  void FillRect(double x0, double y0, double x1, double y1, bool occupied);
  void CloseBoundary();
  bool IsClosed() const;
  std::size_t OccupiedCount() const;

  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const OccupancyGrid&) const = default;

 private:
  int width_;
  int height_;
  double resolution_;
  double origin_x_;
  double origin_y_;
  std::vector<std::uint8_t> cells_;
};

// Text map: a header `width height resolution origin_x origin_y` followed by
// `height` rows of `.` (free) and `#` (occupied), top row first.
std::string FormatGrid(const OccupancyGrid& grid);
// Throws ParseError.
OccupancyGrid ParseGrid(std::string_view text);
OccupancyGrid LoadGrid(const std::filesystem::path& path);
void SaveGrid(const OccupancyGrid& grid, const std::filesystem::path& path);

// Axis-aligned rectangle in the body frame whose center sits `offset` meters
// ahead of the rear-axle midpoint.
struct Footprint {
  double length = Dimensions{}.shell_length;
  double width = Dimensions{}.shell_width;
  double offset = Dimensions{}.wheelbase / 2.0;

  static Footprint FromDimensions(const Dimensions& dims);
  // Radius of the circle through the rectangle corners.
  double CircumRadius() const;
};

// Counter-clockwise corners of the footprint placed at `pose`.
std::array<Point2, 4> FootprintCorners(const Footprint& footprint,
                                       const KinematicState& pose);

// True iff an occupied cell overlaps the placed rectangle with positive area,
// or the rectangle leaves the grid.
bool Collide(const OccupancyGrid& grid, const Footprint& footprint,
             const KinematicState& pose);

// Euclidean distance (m) from every cell center to the nearest occupied cell
// center; infinity when the grid has no occupied cell.
std::vector<double> DistanceField(const OccupancyGrid& grid);

// Collide() with a distance-field shortcut for poses far from obstacles.
// Holds a reference to the grid, which must outlive the checker.
class CollisionChecker {
 public:
  CollisionChecker(const OccupancyGrid& grid, const Footprint& footprint);

  bool Collides(const KinematicState& pose) const;
  // Distance from the point's cell center to the nearest occupied cell.
  double Clearance(const Point2& p) const;

  const OccupancyGrid& grid() const { return *grid_; }
  const Footprint& footprint() const { return footprint_; }

 private:
  const OccupancyGrid* grid_;
  Footprint footprint_;
  std::vector<double> distance_;
  double safe_distance_;
};

}  // namespace zebrat

#endif  // ZEBRAT_WORLD_H_
