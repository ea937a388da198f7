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

#include "zebrat/scenarios.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "zebrat/errors.h"
#include "zebrat/grid_search.h"

namespace zebrat {
namespace {

TEST(Urban, DefaultLayout) {
  const Scenario s = BuildUrban({});
  EXPECT_EQ(s.grid.width(), 450);
  EXPECT_EQ(s.grid.height(), 450);
  EXPECT_TRUE(s.grid.IsClosed());
  const Footprint f;
  EXPECT_FALSE(Collide(s.grid, f, s.start));
  EXPECT_FALSE(Collide(s.grid, f, s.goal));
  EXPECT_DOUBLE_EQ(s.start.x, 1.5);
  EXPECT_DOUBLE_EQ(s.goal.y, 21.0);
}

TEST(Urban, StartAndGoalConnectedAfterInflation) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    UrbanConfig cfg;
    cfg.seed = seed;
    const Scenario s = BuildUrban(cfg);
    const OccupancyGrid plan = Inflate(s.grid, cfg.footprint);
    const auto reach =
        oracle::FloodFill(plan, plan.CellAt({s.start.x, s.start.y}));
    EXPECT_TRUE(reach[plan.Index(plan.CellAt({s.goal.x, s.goal.y}))]) << seed;
  }
}

TEST(Urban, ObstaclesDependOnSeed) {
  UrbanConfig a, b;
  b.seed = 1;
  EXPECT_EQ(BuildUrban(a).grid, BuildUrban(a).grid);
  EXPECT_NE(BuildUrban(a).grid, BuildUrban(b).grid);
  UrbanConfig none;
  none.num_obstacles = 0;
  EXPECT_GT(BuildUrban(a).grid.OccupiedCount(),
            BuildUrban(none).grid.OccupiedCount());
}

TEST(Urban, RejectsInfeasibleLayouts) {
  UrbanConfig tiny;
  tiny.resolution = 1.0;
  EXPECT_THROW(BuildUrban(tiny), ConfigurationError);
  UrbanConfig narrow;
  narrow.road_width = 2.0;
  EXPECT_THROW(BuildUrban(narrow), ConfigurationError);
  UrbanConfig crowded;
  crowded.num_obstacles = 100000;
  crowded.blocks_x = 1;
  crowded.blocks_y = 1;
  EXPECT_THROW(BuildUrban(crowded), ConfigurationError);
}

TEST(Alley, CorridorGeometry) {
  const AlleyConfig cfg;
  const Scenario s = BuildAlley(cfg);
  EXPECT_TRUE(s.grid.IsClosed());
  EXPECT_EQ(s.start.x, 0.0);
  EXPECT_EQ(s.goal.x, cfg.length);
  for (double x = 0.025; x < cfg.length; x += 0.05) {
    EXPECT_FALSE(s.grid.Occupied(s.grid.CellAt({x, 0.575})));
    EXPECT_TRUE(s.grid.Occupied(s.grid.CellAt({x, 0.625})));
    EXPECT_FALSE(s.grid.Occupied(s.grid.CellAt({x, -0.575})));
    EXPECT_TRUE(s.grid.Occupied(s.grid.CellAt({x, -0.625})));
  }
  // Plazas before and after are open.
  EXPECT_FALSE(s.grid.Occupied(s.grid.CellAt({-0.5, 1.0})));
  EXPECT_FALSE(s.grid.Occupied(s.grid.CellAt({cfg.length + 0.5, 1.0})));
  EXPECT_FALSE(Collide(s.grid, cfg.footprint, s.start));
}

TEST(Alley, StraightDriveReachesTheExit) {
  const AlleyConfig cfg;
  const Scenario s = BuildAlley(cfg);
  for (double x = 0.0; x <= cfg.length; x += 0.05) {
    EXPECT_FALSE(Collide(s.grid, cfg.footprint, {x, 0.0, 0.0})) << x;
  }
  EXPECT_TRUE(Collide(s.grid, cfg.footprint, {1.0, 0.3, 0.0}));
}

TEST(Alley, RejectsTooNarrow) {
  AlleyConfig cfg;
  cfg.width = 0.6;
  EXPECT_THROW(BuildAlley(cfg), ConfigurationError);
  cfg.width = 1.2;
  cfg.length = 0.0;
  EXPECT_THROW(BuildAlley(cfg), ConfigurationError);
}

}  // namespace
}  // namespace zebrat
