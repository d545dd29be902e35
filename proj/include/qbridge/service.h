// Copyright 2026 The qbridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "json.hpp"

namespace qbridge {

struct ServiceConfig {
    std::string bind_address = "127.0.0.1";
    int port = 8765;  // 0 picks a free port
    std::optional<std::filesystem::path> user_template_dir;
    std::optional<std::filesystem::path> static_dir;  // designer UI bundle
};

/// Result of handling one request, independent of the transport.
struct ServiceResponse {
    int status = 200;
    nlohmann::ordered_json body;
};

/// Dispatches a request to the matching endpoint handler without any
/// transport. The HTTP server routes through this too.
ServiceResponse handle_request(const std::string &method, const std::string &path,
                               const std::string &body, const ServiceConfig &config);

/// Local JSON API over HTTP. Handlers are stateless and run concurrently.
class Service {
   public:
    explicit Service(ServiceConfig config);
    ~Service();
    Service(const Service &) = delete;
    Service &operator=(const Service &) = delete;

    /// Binds and starts serving on a background thread; returns the port.
    /// Throws Error(Io) if the address cannot be bound.
    int start();
    /// Binds and serves on the calling thread until stop().
    void run();
    void stop();
    int port() const {
        return port_;
    }

   private:
    int bind();

    struct Impl;
    ServiceConfig config_;
    std::unique_ptr<Impl> impl_;
    std::thread thread_;
    int port_ = 0;
};

}  // namespace qbridge
