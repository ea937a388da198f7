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

#include "plot.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace zebrat::tools {
namespace {

std::string Num(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 2);
  std::string s(buf.data(), res.ptr);
  return s == "-0.00" ? "0.00" : s;
}

struct Frame {
  double width_px;
  double height_px;
  double scale;     // px per unit
  double x0;        // data x at the left edge
  double y0;        // data y at the bottom edge
  double margin;

  double X(double x) const { return margin + (x - x0) * scale; }
  double Y(double y) const { return margin + height_px - (y - y0) * scale; }
};

std::string Header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(w) +
         "\" height=\"" + Num(h) + "\" viewBox=\"0 0 " + Num(w) + " " +
         Num(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

template <typename Points>
std::string Polyline(const Points& pts, const std::string& style) {
  std::string out = "<polyline fill=\"none\" " + style + " points=\"";
  bool first = true;
  for (const auto& [x, y] : pts) {
    if (!first) out += ' ';
    first = false;
    out += Num(x) + "," + Num(y);
  }
  return out + "\"/>\n";
}

}  // namespace

std::string NavigationSvg(const OccupancyGrid& grid,
                          const std::vector<Point2>& path,
                          const std::vector<TrajectoryRow>& trajectory,
                          const Point2& goal) {
  const double w_m = grid.width() * grid.resolution();
  const double h_m = grid.height() * grid.resolution();
  const double scale = 800.0 / std::max(w_m, h_m);
  const Frame f{w_m * scale, h_m * scale, scale, grid.origin_x(),
                grid.origin_y(), 10.0};
  std::string out = Header(f.width_px + 2 * f.margin, f.height_px + 2 * f.margin);
  out += "<rect x=\"" + Num(f.margin) + "\" y=\"" + Num(f.margin) +
         "\" width=\"" + Num(f.width_px) + "\" height=\"" +
         Num(f.height_px) + "\" fill=\"none\" stroke=\"#999\"/>\n";
  out += "<g fill=\"#333\">\n";
  const double cell = grid.resolution() * scale;
  for (int row = 0; row < grid.height(); ++row) {
    int col = 0;
    while (col < grid.width()) {
      if (!grid.Occupied(col, row)) {
        ++col;
        continue;
      }
      const int begin = col;
      while (col < grid.width() && grid.Occupied(col, row)) ++col;
      const double x = f.X(grid.origin_x() + begin * grid.resolution());
      const double y = f.Y(grid.origin_y() + (row + 1) * grid.resolution());
      out += "<rect x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" width=\"" +
             Num((col - begin) * cell) + "\" height=\"" + Num(cell) + "\"/>\n";
    }
  }
  out += "</g>\n";

  std::vector<std::pair<double, double>> pts;
  for (const auto& p : path) pts.emplace_back(f.X(p.x), f.Y(p.y));
  if (!pts.empty()) {
    out += Polyline(pts,
                    "stroke=\"#1f77b4\" stroke-width=\"2\" "
                    "stroke-dasharray=\"6,4\"");
  }
  pts.clear();
  for (const auto& r : trajectory) {
    pts.emplace_back(f.X(r.state.x), f.Y(r.state.y));
  }
  if (!pts.empty()) {
    out += Polyline(pts, "stroke=\"#d62728\" stroke-width=\"2\"");
    out += "<circle cx=\"" + Num(pts.front().first) + "\" cy=\"" +
           Num(pts.front().second) + "\" r=\"5\" fill=\"#2ca02c\"/>\n";
  }
  out += "<circle cx=\"" + Num(f.X(goal.x)) + "\" cy=\"" + Num(f.Y(goal.y)) +
         "\" r=\"5\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"2\"/>\n";
  out += "<text x=\"" + Num(f.margin) + "\" y=\"" +
         Num(2 * f.margin + f.height_px - 1) +
         "\" font-size=\"9\" font-family=\"sans-serif\">path (dashed), "
         "trajectory (solid)</text>\n";
  return out + "</svg>\n";
}

std::string LearningCurveSvg(const std::vector<EpisodeRecord>& curve,
                             int window) {
  constexpr double kW = 800.0;
  constexpr double kH = 400.0;
  constexpr double kM = 40.0;
  std::string out = Header(kW + 2 * kM, kH + 2 * kM);
  out += "<rect x=\"" + Num(kM) + "\" y=\"" + Num(kM) + "\" width=\"" +
         Num(kW) + "\" height=\"" + Num(kH) +
         "\" fill=\"none\" stroke=\"#999\"/>\n";
  if (curve.empty()) return out + "</svg>\n";

  double lo = curve.front().ret;
  double hi = lo;
  for (const auto& r : curve) {
    lo = std::min(lo, r.ret);
    hi = std::max(hi, r.ret);
  }
  if (hi - lo < 1e-9) hi = lo + 1.0;
  const double n = static_cast<double>(std::max<std::size_t>(curve.size(), 2) - 1);
  auto x = [&](std::size_t i) { return kM + kW * static_cast<double>(i) / n; };
  auto y_ret = [&](double r) { return kM + kH * (hi - r) / (hi - lo); };
  auto y_rate = [&](double s) { return kM + kH * (1.0 - s); };

  std::vector<std::pair<double, double>> raw, avg, rate;
  double sum = 0.0;
  int wins = 0;
  window = std::max(window, 1);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    sum += curve[i].ret;
    wins += curve[i].success ? 1 : 0;
    if (i >= static_cast<std::size_t>(window)) {
      sum -= curve[i - window].ret;
      wins -= curve[i - window].success ? 1 : 0;
    }
    const double count =
        static_cast<double>(std::min<std::size_t>(i + 1, window));
    raw.emplace_back(x(i), y_ret(curve[i].ret));
    avg.emplace_back(x(i), y_ret(sum / count));
    rate.emplace_back(x(i), y_rate(wins / count));
  }
  out += Polyline(raw, "stroke=\"#c6dbef\" stroke-width=\"0.5\"");
  out += Polyline(avg, "stroke=\"#1f77b4\" stroke-width=\"2\"");
  out += Polyline(rate, "stroke=\"#2ca02c\" stroke-width=\"1.5\"");
  const std::string font = "font-size=\"11\" font-family=\"sans-serif\"";
  out += "<text x=\"" + Num(kM) + "\" y=\"" + Num(kM - 8) + "\" " + font +
         ">return (blue, " + std::to_string(window) +
         "-episode mean) and success rate (green, 0..1); return range " +
         Num(lo) + " to " + Num(hi) + "</text>\n";
  out += "<text x=\"" + Num(kM) + "\" y=\"" + Num(kM + kH + 20) + "\" " +
         font + ">episode 0 to " + std::to_string(curve.size() - 1) +
         "</text>\n";
  return out + "</svg>\n";
}

}  // namespace zebrat::tools
