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

#include "zebrat/session.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.h"
#include "test_util.h"
#include "zebrat/trajectory_log.h"

namespace zebrat {
namespace {

std::vector<std::string> Transcript(Session& session,
                                    const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const auto& line : lines) out.push_back(session.HandleLine(line));
  return out;
}

std::vector<std::string> DrivingScript(int steps) {
  std::vector<std::string> lines = {R"({"type":"hello"})",
                                    R"({"type":"reset","seed":11,"agents":2})"};
  for (int i = 0; i < steps; ++i) {
    const double phi = 0.05 * std::sin(0.2 * i);
    lines.push_back(R"({"type":"step","agent":"adr","v":0.4,"phi":)" +
                    std::to_string(phi) + "}");
    if (i % 10 == 0) {
      lines.push_back(R"({"type":"step","agent":"av","v":1.0,"phi":0.0})");
      lines.push_back(R"({"type":"map_share","from":"av","to":"adr"})");
      lines.push_back(R"({"type":"observe","agent":"adr"})");
    }
  }
  return lines;
}

std::string Code(const std::string& line) {
  return std::get<ErrorResponse>(ParseResponse(line)).code;
}

TEST(Session, HelloAndErrorsBeforeReset) {
  Session s;
  const auto hello = std::get<AckResponse>(ParseResponse(s.HandleLine(R"({"type":"hello"})")));
  EXPECT_EQ(std::get<std::string>(hello.fields[0].second), "1");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"step","agent":"adr","v":0,"phi":0})")),
            "no_session");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"observe","agent":"adr"})")), "no_session");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"map_share","from":"adr","to":"av"})")),
            "no_session");
  EXPECT_EQ(Code(s.HandleLine("garbage")), "bad_request");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"jump"})")), "unknown_type");
}

TEST(Session, ErrorsAfterReset) {
  Session s;
  s.HandleLine(R"({"type":"reset","seed":1})");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"step","agent":"av","v":0,"phi":0})")),
            "unknown_agent");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"reset","scenario":"moon"})")), "bad_request");
  s.HandleLine(R"({"type":"reset","seed":1,"agents":2})");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"map_share","from":"adr","to":"adr"})")),
            "invalid_target");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"map_share","from":"adr","to":"bob"})")),
            "unknown_agent");
  // Drive into the wall, then keep stepping.
  std::string last;
  for (int i = 0; i < 200; ++i) {
    last = s.HandleLine(R"({"type":"step","agent":"adr","v":0.5,"phi":1.0})");
    if (std::get<StateResponse>(ParseResponse(last)).done) break;
  }
  EXPECT_EQ(std::get<StateResponse>(ParseResponse(last)).reason, "collision");
  EXPECT_EQ(Code(s.HandleLine(R"({"type":"step","agent":"adr","v":0.5,"phi":0})")),
            "episode_done");
  // The other agent is unaffected.
  const auto av = std::get<StateResponse>(
      ParseResponse(s.HandleLine(R"({"type":"step","agent":"av","v":0.5,"phi":0})")));
  EXPECT_FALSE(av.done);
}

TEST(Session, TranscriptsAreByteIdentical) {
  const auto script = DrivingScript(60);
  Session a, b;
  EXPECT_EQ(Transcript(a, script), Transcript(b, script));
}

TEST(Session, SharedMapArrivesOnNextObserve) {
  Session s;
  s.HandleLine(R"({"type":"reset","seed":2,"agents":2})");
  const auto ack = std::get<AckResponse>(ParseResponse(
      s.HandleLine(R"({"type":"map_share","from":"av","to":"adr"})")));
  EXPECT_GT(std::get<std::int64_t>(ack.fields[2].second), 0);
  const auto again = std::get<AckResponse>(ParseResponse(
      s.HandleLine(R"({"type":"map_share","from":"av","to":"adr"})")));
  EXPECT_EQ(std::get<std::int64_t>(again.fields[2].second), 0);
  const Response first = ParseResponse(s.HandleLine(R"({"type":"observe","agent":"adr"})"));
  ASSERT_TRUE(std::holds_alternative<MapResponse>(first));
  const auto& map = std::get<MapResponse>(first);
  const KnownMap decoded = KnownMap::DecodeRle(map.cells, map.width, map.height,
                                               map.resolution, map.origin_x,
                                               map.origin_y);
  EXPECT_GT(decoded.Count(CellKnowledge::kOccupied), 0u);
  const Response second = ParseResponse(s.HandleLine(R"({"type":"observe","agent":"adr"})"));
  ASSERT_TRUE(std::holds_alternative<StateResponse>(second));
  EXPECT_EQ(std::get<StateResponse>(second).reward, 0.0);
}

TEST(Session, ShutdownIsAcknowledged) {
  Session s;
  EXPECT_FALSE(s.shutdown_requested());
  EXPECT_EQ(s.HandleLine(R"({"type":"shutdown"})"), R"({"type":"ack","shutdown":true})");
  EXPECT_TRUE(s.shutdown_requested());
}

TEST(Session, UrbanTwoAgents) {
  Session s;
  const auto ack = std::get<AckResponse>(ParseResponse(
      s.HandleLine(R"({"type":"reset","scenario":"urban","seed":4,"agents":2})")));
  EXPECT_EQ(std::get<std::string>(ack.fields[3].second), "adr,av");
  const auto st = std::get<StateResponse>(ParseResponse(
      s.HandleLine(R"({"type":"step","agent":"av","v":1.0,"phi":0})")));
  EXPECT_FALSE(st.done);
  EXPECT_EQ(st.sectors.size(), 8u);
}

class SessionLogs : public ::testing::Test {
 protected:
  SessionConfig Config() {
    SessionConfig cfg;
    cfg.log_dir = dir_;
    return cfg;
  }
  std::vector<TrajectoryRow> Rows(const std::string& name) {
    std::ifstream in(dir_ / name);
    EXPECT_TRUE(in.good()) << name;
    return ReadTrajectoryCsv(in);
  }
  std::filesystem::path dir_ = testing::TempDir("session_logs");
};

TEST_F(SessionLogs, RowCountsAndReplay) {
  const auto script = DrivingScript(100);
  double client_sum = 0.0;
  double reported = 0.0;
  {
    SessionConfig cfg = Config();
    cfg.alley.lateral_jitter = 0.0;
    cfg.alley.heading_jitter = 0.0;
    Session s(cfg);
    for (const auto& line : script) {
      const Response r = ParseResponse(s.HandleLine(line));
      if (const auto* st = std::get_if<StateResponse>(&r); st && st->agent == "adr") {
        client_sum += st->reward;
        reported = st->total_reward;
      }
    }
  }
  EXPECT_NEAR(client_sum, reported, 1e-9);
  const auto adr = Rows("session_ep1_adr.csv");
  ASSERT_EQ(adr.size(), 101u);
  EXPECT_LT(oracle::LatticeReplayDeviation(adr, 0.1, KinematicParams{}), 1e-9);
  const auto av = Rows("session_ep1_av.csv");
  EXPECT_EQ(av.size(), 11u);
  EXPECT_LT(oracle::LatticeReplayDeviation(av, 0.1, AvProfile().kinematics), 1e-9);
}

TEST_F(SessionLogs, ZeroStepEpisodeLogsOneRow) {
  {
    Session s(Config());
    s.HandleLine(R"({"type":"reset","seed":3})");
    s.HandleLine(R"({"type":"reset","seed":4})");
  }
  EXPECT_EQ(Rows("session_ep1_adr.csv").size(), 1u);
  EXPECT_EQ(Rows("session_ep2_adr.csv").size(), 1u);
}

TEST_F(SessionLogs, FinishedEpisodeIsWrittenImmediately) {
  Session s(Config());
  s.HandleLine(R"({"type":"reset","seed":3})");
  for (int i = 0; i < 500; ++i) {
    const auto st = std::get<StateResponse>(ParseResponse(
        s.HandleLine(R"({"type":"step","agent":"adr","v":0.0,"phi":0})")));
    if (st.done) {
      EXPECT_EQ(st.reason, "timeout");
      break;
    }
  }
  EXPECT_EQ(Rows("session_ep1_adr.csv").size(), 501u);
}

TEST(SessionIo, UnwritableLogDirReportsIoError) {
  const auto dir = testing::TempDir("session_io");
  SessionConfig cfg;
  cfg.log_dir = dir / "missing" / "deeper";
  Session s(cfg);
  s.HandleLine(R"({"type":"reset","seed":0})");
  const auto reply = s.HandleLine(R"({"type":"reset","seed":0})");
  EXPECT_EQ(Code(reply), "io_error");
  // The new episode is live regardless.
  const Response r = ParseResponse(s.HandleLine(R"({"type":"observe","agent":"adr"})"));
  EXPECT_TRUE(std::holds_alternative<StateResponse>(r));
  EXPECT_FALSE(s.Close());
}

}  // namespace
}  // namespace zebrat
