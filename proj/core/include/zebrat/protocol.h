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

#ifndef ZEBRAT_PROTOCOL_H_
#define ZEBRAT_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace zebrat {

inline constexpr std::string_view kProtocolVersion = "1";

// Error codes carried by error responses.
namespace wire_error {
inline constexpr std::string_view kBadRequest = "bad_request";
inline constexpr std::string_view kUnknownType = "unknown_type";
inline constexpr std::string_view kNoSession = "no_session";
inline constexpr std::string_view kUnknownAgent = "unknown_agent";
inline constexpr std::string_view kInvalidTarget = "invalid_target";
inline constexpr std::string_view kEpisodeDone = "episode_done";
inline constexpr std::string_view kIoError = "io_error";
}  // namespace wire_error

struct HelloRequest {};
struct ResetRequest {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> scenario;
  std::optional<int> agents;
};
struct StepRequest {
  std::string agent;
  double v = 0.0;
  double phi = 0.0;
};
struct ObserveRequest {
  std::string agent;
  bool map = false;  // "what":"map" forces a map response
};
struct MapShareRequest {
  std::string from;
  std::string to;
};
struct ShutdownRequest {};

using Request = std::variant<HelloRequest, ResetRequest, StepRequest,
                             ObserveRequest, MapShareRequest, ShutdownRequest>;

struct ErrorResponse {
  std::string code;
  std::string message;
};

// Parses one line. Unknown keys are ignored.
std::variant<Request, ErrorResponse> ParseRequest(std::string_view line);

using WireScalar = std::variant<std::string, std::int64_t, double, bool>;
using WireFields = std::vector<std::pair<std::string, WireScalar>>;

struct AckResponse {
  WireFields fields;  // emitted after "type":"ack", in order
};

struct StateResponse {
  std::string agent;
  std::int64_t step = 0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  std::vector<double> sectors;
  double reward = 0.0;
  double total_reward = 0.0;
  bool done = false;
  std::string reason;
};

struct MapResponse {
  std::string agent;
  int width = 0;
  int height = 0;
  double resolution = 0.0;
  double origin_x = 0.0;
  double origin_y = 0.0;
  std::string cells;  // run-length payload
};

using Response =
    std::variant<AckResponse, StateResponse, MapResponse, ErrorResponse>;

// One line of JSON, without the trailing newline.
std::string FormatResponse(const Response& response);

// Client-side decoding, used by tests and tools. Throws ProtocolError.
Response ParseResponse(std::string_view line);

}  // namespace zebrat

#endif  // ZEBRAT_PROTOCOL_H_
