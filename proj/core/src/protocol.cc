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

#include "zebrat/protocol.h"

#include <cmath>
#include <limits>

#include "json.hpp"
#include "zebrat/errors.h"

namespace zebrat {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

ErrorResponse BadRequest(std::string message) {
  return {std::string(wire_error::kBadRequest), std::move(message)};
}

// Returns an error message, or nullopt on success.
std::optional<std::string> GetString(const Json& obj, const char* key,
                                     std::optional<std::string>* out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_string()) return std::string("'") + key + "' must be a string";
  *out = it->get<std::string>();
  return std::nullopt;
}

std::optional<std::string> RequireString(const Json& obj, const char* key,
                                         std::string* out) {
  std::optional<std::string> value;
  if (auto err = GetString(obj, key, &value)) return err;
  if (!value) return std::string("missing '") + key + "'";
  *out = *value;
  return std::nullopt;
}

std::optional<std::string> RequireNumber(const Json& obj, const char* key,
                                         double* out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::string("missing '") + key + "'";
  if (!it->is_number()) return std::string("'") + key + "' must be a number";
  *out = it->get<double>();
  if (!std::isfinite(*out)) return std::string("'") + key + "' must be finite";
  return std::nullopt;
}

OrderedJson ScalarToJson(const WireScalar& value) {
  return std::visit([](const auto& v) { return OrderedJson(v); }, value);
}

template <typename J>
WireScalar JsonToScalar(const J& value) {
  if (value.is_string()) return value.template get<std::string>();
  if (value.is_boolean()) return value.template get<bool>();
  if (value.is_number_integer()) return value.template get<std::int64_t>();
  if (value.is_number()) return value.template get<double>();
  throw ProtocolError("ack fields must be scalars");
}

}  // namespace

std::variant<Request, ErrorResponse> ParseRequest(std::string_view line) {
  Json obj = Json::parse(line.begin(), line.end(), nullptr, false);
  if (obj.is_discarded()) return BadRequest("malformed JSON");
  if (!obj.is_object()) return BadRequest("request must be a JSON object");
  std::string type;
  if (auto err = RequireString(obj, "type", &type)) return BadRequest(*err);

  if (type == "hello") return Request{HelloRequest{}};
  if (type == "shutdown") return Request{ShutdownRequest{}};
  if (type == "reset") {
    ResetRequest req;
    if (const auto it = obj.find("seed"); it != obj.end()) {
      if (!it->is_number_unsigned()) {
        return BadRequest("'seed' must be a non-negative integer");
      }
      req.seed = it->get<std::uint64_t>();
    }
    if (auto err = GetString(obj, "scenario", &req.scenario)) {
      return BadRequest(*err);
    }
    if (const auto it = obj.find("agents"); it != obj.end()) {
      if (!it->is_number_integer()) {
        return BadRequest("'agents' must be an integer");
      }
      const auto n = it->get<std::int64_t>();
      if (n < 1 || n > 2) return BadRequest("'agents' must be 1 or 2");
      req.agents = static_cast<int>(n);
    }
    return Request{req};
  }
  if (type == "step") {
    StepRequest req;
    if (auto err = RequireString(obj, "agent", &req.agent)) {
      return BadRequest(*err);
    }
    if (auto err = RequireNumber(obj, "v", &req.v)) return BadRequest(*err);
    if (auto err = RequireNumber(obj, "phi", &req.phi)) return BadRequest(*err);
    return Request{req};
  }
  if (type == "observe") {
    ObserveRequest req;
    if (auto err = RequireString(obj, "agent", &req.agent)) {
      return BadRequest(*err);
    }
    std::optional<std::string> what;
    if (auto err = GetString(obj, "what", &what)) return BadRequest(*err);
    if (what && *what != "map" && *what != "state") {
      return BadRequest("'what' must be \"state\" or \"map\"");
    }
    req.map = what && *what == "map";
    return Request{req};
  }
  if (type == "map_share") {
    MapShareRequest req;
    if (auto err = RequireString(obj, "from", &req.from)) {
      return BadRequest(*err);
    }
    if (auto err = RequireString(obj, "to", &req.to)) return BadRequest(*err);
    return Request{req};
  }
  return ErrorResponse{std::string(wire_error::kUnknownType),
                       "unknown request type '" + type + "'"};
}

std::string FormatResponse(const Response& response) {
  OrderedJson out;
  if (const auto* ack = std::get_if<AckResponse>(&response)) {
    out["type"] = "ack";
    for (const auto& [key, value] : ack->fields) out[key] = ScalarToJson(value);
  } else if (const auto* s = std::get_if<StateResponse>(&response)) {
    out["type"] = "state";
    out["agent"] = s->agent;
    out["step"] = s->step;
    out["x"] = s->x;
    out["y"] = s->y;
    out["theta"] = s->theta;
    out["sectors"] = s->sectors;
    out["reward"] = s->reward;
    out["total_reward"] = s->total_reward;
    out["done"] = s->done;
    out["reason"] = s->reason;
  } else if (const auto* m = std::get_if<MapResponse>(&response)) {
    out["type"] = "map";
    out["agent"] = m->agent;
    out["width"] = m->width;
    out["height"] = m->height;
    out["resolution"] = m->resolution;
    out["origin_x"] = m->origin_x;
    out["origin_y"] = m->origin_y;
    out["cells"] = m->cells;
  } else {
    const auto& e = std::get<ErrorResponse>(response);
    out["type"] = "error";
    out["code"] = e.code;
    out["message"] = e.message;
  }
  return out.dump(-1, ' ', false, Json::error_handler_t::replace);
}

Response ParseResponse(std::string_view line) {
  Json obj = Json::parse(line.begin(), line.end(), nullptr, false);
  if (obj.is_discarded() || !obj.is_object() || !obj.contains("type") ||
      !obj["type"].is_string()) {
    throw ProtocolError("malformed response line");
  }
  try {
    const std::string type = obj["type"].get<std::string>();
    if (type == "ack") {
      // Preserve the field order of the line.
      const OrderedJson ordered = OrderedJson::parse(line);
      AckResponse ack;
      for (const auto& [key, value] : ordered.items()) {
        if (key == "type") continue;
        ack.fields.emplace_back(key, JsonToScalar(value));
      }
      return ack;
    }
    if (type == "state") {
      StateResponse s;
      s.agent = obj.at("agent").get<std::string>();
      s.step = obj.at("step").get<std::int64_t>();
      s.x = obj.at("x").get<double>();
      s.y = obj.at("y").get<double>();
      s.theta = obj.at("theta").get<double>();
      s.sectors = obj.at("sectors").get<std::vector<double>>();
      s.reward = obj.at("reward").get<double>();
      s.total_reward = obj.at("total_reward").get<double>();
      s.done = obj.at("done").get<bool>();
      s.reason = obj.at("reason").get<std::string>();
      return s;
    }
    if (type == "map") {
      MapResponse m;
      m.agent = obj.at("agent").get<std::string>();
      m.width = obj.at("width").get<int>();
      m.height = obj.at("height").get<int>();
      m.resolution = obj.at("resolution").get<double>();
      m.origin_x = obj.at("origin_x").get<double>();
      m.origin_y = obj.at("origin_y").get<double>();
      m.cells = obj.at("cells").get<std::string>();
      return m;
    }
    if (type == "error") {
      return ErrorResponse{obj.at("code").get<std::string>(),
                           obj.at("message").get<std::string>()};
    }
  } catch (const Json::exception& e) {
    throw ProtocolError(std::string("malformed response: ") + e.what());
  }
  throw ProtocolError("unknown response type");
}

}  // namespace zebrat
