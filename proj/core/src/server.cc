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

#include "zebrat/server.h"

#include <sys/socket.h>

#include <atomic>
#include <charconv>
#include <istream>
#include <mutex>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include <boost/asio.hpp>

#include "zebrat/errors.h"

namespace zebrat {

namespace asio = boost::asio;
using asio::ip::tcp;

struct Server::Impl {
  ServerOptions options;
  asio::io_context io;
  tcp::acceptor acceptor{io};
  std::atomic<bool> stopping{false};
  std::mutex mutex;
  std::set<int> open_sockets;
  std::vector<std::thread> workers;
  int connections = 0;

  void Accept() {
    acceptor.async_accept([this](boost::system::error_code ec,
                                 tcp::socket socket) {
      if (ec || stopping) return;
      std::lock_guard lock(mutex);
      SessionConfig config = options.session;
      config.log_prefix += std::to_string(++connections);
      open_sockets.insert(socket.native_handle());
      workers.emplace_back(
          [this, s = std::move(socket), config]() mutable {
            Serve(std::move(s), std::move(config));
          });
      Accept();
    });
  }

  void Serve(tcp::socket socket, SessionConfig config) {
    const int fd = socket.native_handle();
    Session session(std::move(config));
    asio::streambuf buffer;
    std::istream in(&buffer);
    boost::system::error_code ec;
    while (!stopping) {
      asio::read_until(socket, buffer, '\n', ec);
      if (ec) break;
      std::string line;
      std::getline(in, line);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const std::string reply = session.HandleLine(line) + "\n";
      asio::write(socket, asio::buffer(reply), ec);
      if (ec) break;
      if (session.shutdown_requested()) {
        RequestStop();
        break;
      }
    }
    session.Close();
    std::lock_guard lock(mutex);
    open_sockets.erase(fd);
    socket.close(ec);
  }

  void RequestStop() {
    if (stopping.exchange(true)) return;
    asio::post(io, [this] {
      boost::system::error_code ec;
      acceptor.close(ec);
    });
    // Unblock workers waiting on idle clients.
    std::lock_guard lock(mutex);
    for (const int fd : open_sockets) ::shutdown(fd, SHUT_RDWR);
  }
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  try {
    const tcp::endpoint endpoint(
        asio::ip::make_address(impl_->options.host), impl_->options.port);
    impl_->acceptor.open(endpoint.protocol());
    impl_->acceptor.set_option(tcp::acceptor::reuse_address(true));
    impl_->acceptor.bind(endpoint);
    impl_->acceptor.listen();
  } catch (const boost::system::system_error& e) {
    throw ConfigurationError("cannot bind " + impl_->options.host + ":" +
                             std::to_string(impl_->options.port) + ": " +
                             e.what());
  }
}

Server::~Server() {
  Stop();
  for (auto& t : impl_->workers) {
    if (t.joinable()) t.join();
  }
}

std::uint16_t Server::port() const {
  return impl_->acceptor.local_endpoint().port();
}

void Server::Run() {
  impl_->Accept();
  impl_->io.run();
  std::vector<std::thread> workers;
  {
    std::lock_guard lock(impl_->mutex);
    workers.swap(impl_->workers);
  }
  for (auto& t : workers) t.join();
}

void Server::Stop() { impl_->RequestStop(); }

std::pair<std::string, std::uint16_t> ParseBindAddress(
    const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw InvalidParameterError("bind address must be HOST:PORT");
  }
  unsigned port = 0;
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, port);
  if (ec != std::errc() || ptr != last || port > 65535) {
    throw InvalidParameterError("invalid port in '" + text + "'");
  }
  std::string host = text.substr(0, colon);
  if (host.size() > 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  return {host, static_cast<std::uint16_t>(port)};
}

}  // namespace zebrat
