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

#ifndef ZEBRAT_SERVER_H_
#define ZEBRAT_SERVER_H_

#include <cstdint>
#include <memory>
#include <string>

#include "zebrat/session.h"

namespace zebrat {

struct ServerOptions {
  std::string host = "127.0.0.1";
  std::uint16_t port = 5555;  // 0 picks a free port
  SessionConfig session;
};

// TCP front end: one thread and one Session per connection, one JSON object
// per line in each direction. A "shutdown" request stops the whole server.
class Server {
 public:
  // Binds immediately; throws ConfigurationError when the address is
  // unusable.
  explicit Server(ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  std::uint16_t port() const;

  // Serves until Stop() or a shutdown request.
  void Run();
  // Thread-safe.
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Parses "HOST:PORT". Throws InvalidParameterError.
std::pair<std::string, std::uint16_t> ParseBindAddress(const std::string& text);

}  // namespace zebrat

#endif  // ZEBRAT_SERVER_H_
