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

#include "zebrat/world.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "zebrat/errors.h"
#include "zebrat/format.h"

namespace zebrat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D squared distance transform of a sampled function (lower envelope of
// parabolas).
void DistanceTransform1D(const std::vector<double>& f, std::vector<double>& d,
                         std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  int first = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] < kInf) {
      first = q;
      break;
    }
  }
  if (first < 0) {
    std::fill(d.begin(), d.end(), kInf);
    return;
  }
  v[0] = first;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = first + 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s = 0.0;
    for (;;) {
      const int p = v[k];
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
      if (s <= z[k] && k > 0) {
        --k;
      } else {
        break;
      }
    }
    if (s <= z[k]) {
      // Only possible when k == 0: the new parabola dominates everywhere.
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double diff = q - v[k];
    d[q] = diff * diff + f[v[k]];
  }
}

}  // namespace

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             double origin_x, double origin_y)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_x_(origin_x),
      origin_y_(origin_y) {
  if (width < 1 || height < 1) {
    throw InvalidParameterError("grid must be at least 1x1 cells");
  }
  if (!(resolution > 0.0)) {
    throw InvalidParameterError("grid resolution must be positive");
  }
  cells_.assign(static_cast<std::size_t>(width) * height, 0);
}

void OccupancyGrid::Set(int col, int row, bool occupied) {
  if (!InBounds(col, row)) {
    throw InvalidParameterError("cell (" + std::to_string(col) + ", " +
                                std::to_string(row) + ") is out of bounds");
  }
  cells_[static_cast<std::size_t>(row) * width_ + col] = occupied ? 1 : 0;
}

Point2 OccupancyGrid::CellCenter(const CellIndex& c) const {
  return {origin_x_ + (c.col + 0.5) * resolution_,
          origin_y_ + (c.row + 0.5) * resolution_};
}

CellIndex OccupancyGrid::CellAt(const Point2& p) const {
  return {static_cast<int>(std::floor((p.x - origin_x_) / resolution_)),
          static_cast<int>(std::floor((p.y - origin_y_) / resolution_))};
}

void OccupancyGrid::FillRect(double x0, double y0, double x1, double y1,
                             bool occupied) {
  const int c0 = std::max(0, static_cast<int>(std::ceil(
                                 (x0 - origin_x_) / resolution_ - 0.5)));
  const int c1 = std::min(width_, static_cast<int>(std::ceil(
                                      (x1 - origin_x_) / resolution_ - 0.5)));
  const int r0 = std::max(0, static_cast<int>(std::ceil(
                                 (y0 - origin_y_) / resolution_ - 0.5)));
  const int r1 = std::min(height_, static_cast<int>(std::ceil(
                                       (y1 - origin_y_) / resolution_ - 0.5)));
  for (int r = r0; r < r1; ++r) {
    for (int c = c0; c < c1; ++c) Set(c, r, occupied);
  }
}

void OccupancyGrid::CloseBoundary() {
  for (int c = 0; c < width_; ++c) {
    Set(c, 0, true);
    Set(c, height_ - 1, true);
  }
  for (int r = 0; r < height_; ++r) {
    Set(0, r, true);
    Set(width_ - 1, r, true);
  }
}

bool OccupancyGrid::IsClosed() const {
  for (int c = 0; c < width_; ++c) {
    if (!Occupied(c, 0) || !Occupied(c, height_ - 1)) return false;
  }
  for (int r = 0; r < height_; ++r) {
    if (!Occupied(0, r) || !Occupied(width_ - 1, r)) return false;
  }
  return true;
}

std::size_t OccupancyGrid::OccupiedCount() const {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::string FormatGrid(const OccupancyGrid& grid) {
  std::string out = std::to_string(grid.width()) + " " +
                    std::to_string(grid.height()) + " " +
                    FormatFixed6(grid.resolution()) + " " +
                    FormatFixed6(grid.origin_x()) + " " +
                    FormatFixed6(grid.origin_y()) + "\n";
  out.reserve(out.size() + grid.size() + grid.height());
  for (int r = grid.height() - 1; r >= 0; --r) {
    for (int c = 0; c < grid.width(); ++c) {
      out += grid.Occupied(c, r) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

OccupancyGrid ParseGrid(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  if (lines.empty()) throw ParseError("empty world file", 1, 1);

  std::istringstream header{std::string(lines[0])};
  std::string fields[5];
  for (auto& field : fields) {
    if (!(header >> field)) {
      throw ParseError(
          "header must be 'width height resolution origin_x origin_y'", 1, 1);
    }
  }
  std::string extra;
  if (header >> extra) throw ParseError("trailing data in header", 1, 1);
  double numbers[5];
  for (int i = 0; i < 5; ++i) {
    if (!ParseDouble(fields[i], &numbers[i])) {
      throw ParseError("invalid header value '" + fields[i] + "'", 1, 1);
    }
  }
  const double w = numbers[0];
  const double h = numbers[1];
  if (w != std::floor(w) || h != std::floor(h) || w < 1 || h < 1 ||
      !(numbers[2] > 0.0)) {
    throw ParseError("invalid grid size or resolution", 1, 1);
  }
  const int width = static_cast<int>(w);
  const int height = static_cast<int>(h);
  OccupancyGrid grid(width, height, numbers[2], numbers[3], numbers[4]);

  std::size_t body = lines.size() - 1;
  while (body > 0 && lines[body].empty()) --body;  // trailing blank lines
  if (body != static_cast<std::size_t>(height)) {
    throw ParseError("expected " + std::to_string(height) + " grid rows, got " +
                         std::to_string(body),
                     lines.size(), 1);
  }
  for (int i = 0; i < height; ++i) {
    const std::string_view row = lines[i + 1];
    if (row.size() != static_cast<std::size_t>(width)) {
      throw ParseError("row has " + std::to_string(row.size()) +
                           " cells, expected " + std::to_string(width),
                       i + 2, 1);
    }
    for (int c = 0; c < width; ++c) {
      if (row[c] != '.' && row[c] != '#') {
        throw ParseError(std::string("unexpected cell character '") + row[c] +
                             "'",
                         i + 2, c + 1);
      }
      grid.Set(c, height - 1 - i, row[c] == '#');
    }
  }
  return grid;
}

OccupancyGrid LoadGrid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open world file " + path.string(), 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGrid(buffer.str());
}

void SaveGrid(const OccupancyGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << FormatGrid(grid);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Footprint Footprint::FromDimensions(const Dimensions& dims) {
  return {dims.shell_length, dims.shell_width, dims.wheelbase / 2.0};
}

double Footprint::CircumRadius() const {
  return std::hypot(length / 2.0, width / 2.0);
}

std::array<Point2, 4> FootprintCorners(const Footprint& footprint,
                                       const KinematicState& pose) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const double cx = pose.x + footprint.offset * c;
  const double cy = pose.y + footprint.offset * s;
  const double a = footprint.length / 2.0;
  const double b = footprint.width / 2.0;
  const double local[4][2] = {{-a, -b}, {a, -b}, {a, b}, {-a, b}};
  std::array<Point2, 4> corners;
  for (int i = 0; i < 4; ++i) {
    corners[i] = {cx + c * local[i][0] - s * local[i][1],
                  cy + s * local[i][0] + c * local[i][1]};
  }
  return corners;
}

bool Collide(const OccupancyGrid& grid, const Footprint& footprint,
             const KinematicState& pose) {
  const auto corners = FootprintCorners(footprint, pose);
  double min_x = corners[0].x, max_x = corners[0].x;
  double min_y = corners[0].y, max_y = corners[0].y;
  for (const auto& p : corners) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  // A corner outside the grid overlaps the (occupied) exterior.
  if (min_x < grid.origin_x() || min_y < grid.origin_y() ||
      max_x > grid.max_x() || max_y > grid.max_y()) {
    return true;
  }

  // Separating-axis test between the rectangle and each candidate cell.
  const double cth = std::cos(pose.theta);
  const double sth = std::sin(pose.theta);
  const double ac = std::abs(cth);
  const double as = std::abs(sth);
  const double cx = pose.x + footprint.offset * cth;
  const double cy = pose.y + footprint.offset * sth;
  const double a = footprint.length / 2.0;
  const double b = footprint.width / 2.0;
  const double h = grid.resolution() / 2.0;
  const double reach_x = h + a * ac + b * as;
  const double reach_y = h + a * as + b * ac;
  const double reach_u = a + h * (ac + as);
  const double reach_n = b + h * (ac + as);

  const CellIndex lo = grid.CellAt({min_x, min_y});
  const CellIndex hi = grid.CellAt({max_x, max_y});
  for (int r = std::max(0, lo.row); r <= std::min(grid.height() - 1, hi.row);
       ++r) {
    for (int c = std::max(0, lo.col); c <= std::min(grid.width() - 1, hi.col);
         ++c) {
      if (!grid.Occupied(c, r)) continue;
      const Point2 q = grid.CellCenter({c, r});
      const double dx = q.x - cx;
      const double dy = q.y - cy;
      if (std::abs(dx) >= reach_x || std::abs(dy) >= reach_y) continue;
      if (std::abs(dx * cth + dy * sth) >= reach_u) continue;
      if (std::abs(-dx * sth + dy * cth) >= reach_n) continue;
      return true;
    }
  }
  return false;
}

std::vector<double> DistanceField(const OccupancyGrid& grid) {
  const int w = grid.width();
  const int h = grid.height();
  const int n = std::max(w, h);
  std::vector<double> squared(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    squared[i] = grid.cells()[i] ? 0.0 : kInf;
  }
  std::vector<double> f(n), d(n), z(n + 1);
  std::vector<int> v(n);
  // Columns.
  f.resize(h);
  d.resize(h);
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) f[r] = squared[static_cast<std::size_t>(r) * w + c];
    DistanceTransform1D(f, d, v, z);
    for (int r = 0; r < h; ++r) squared[static_cast<std::size_t>(r) * w + c] = d[r];
  }
  // Rows.
  f.resize(w);
  d.resize(w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) f[c] = squared[static_cast<std::size_t>(r) * w + c];
    DistanceTransform1D(f, d, v, z);
    for (int c = 0; c < w; ++c) squared[static_cast<std::size_t>(r) * w + c] = d[c];
  }
  for (double& value : squared) {
    value = value == kInf ? kInf : std::sqrt(value) * grid.resolution();
  }
  return squared;
}

CollisionChecker::CollisionChecker(const OccupancyGrid& grid,
                                   const Footprint& footprint)
    : grid_(&grid),
      footprint_(footprint),
      distance_(DistanceField(grid)),
      safe_distance_(footprint.CircumRadius() +
                     grid.resolution() * std::sqrt(2.0)) {}

double CollisionChecker::Clearance(const Point2& p) const {
  const CellIndex cell = grid_->CellAt(p);
  if (!grid_->InBounds(cell)) return 0.0;
  return distance_[grid_->Index(cell)];
}

bool CollisionChecker::Collides(const KinematicState& pose) const {
  const Point2 center{pose.x + footprint_.offset * std::cos(pose.theta),
                      pose.y + footprint_.offset * std::sin(pose.theta)};
  const double radius = footprint_.CircumRadius();
  const bool inside = center.x - radius >= grid_->origin_x() &&
                      center.y - radius >= grid_->origin_y() &&
                      center.x + radius <= grid_->max_x() &&
                      center.y + radius <= grid_->max_y();
  if (inside && Clearance(center) > safe_distance_) return false;
  return Collide(*grid_, footprint_, pose);
}

}  // namespace zebrat
