// Copyright 2026 The cqmkit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace cqmkit {

/// In-process HTTP server speaking the remote solver protocol, for tests and
/// local experiments. Binds to 127.0.0.1 on an ephemeral port.
class MockSolverServer {
 public:
    enum class Mode {
        exact,           // answer with solve_exact's samples
        fixed,           // answer with the samples set by set_fixed_samples
        corrupt_energy,  // exact samples with a wrong "energy" field
        server_error,    // HTTP 500 with an error document
        malformed,       // HTTP 200 with a body that is not JSON
        wrong_length,    // exact samples with the last bit dropped
    };

    explicit MockSolverServer(Mode mode = Mode::exact);
    ~MockSolverServer();

    MockSolverServer(const MockSolverServer&) = delete;
    MockSolverServer& operator=(const MockSolverServer&) = delete;

    void set_mode(Mode mode);
    /// `samples` is the value of the response's "samples" array.
    void set_fixed_samples(nlohmann::json samples);

    /// Starts serving; returns the bound port.
    int start(const std::string& host = "127.0.0.1", int port = 0);
    void stop();

    /// "http://127.0.0.1:<port>"
    std::string url() const;

    /// Most recent request body, parsed.
    std::optional<nlohmann::json> last_request() const;
    std::optional<std::string> last_authorization() const;

 private:
    std::string respond(const std::string& body, int& status);

    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    std::string host_;
    int port_ = 0;

    mutable std::mutex mutex_;
    Mode mode_;
    nlohmann::json fixed_ = nlohmann::json::array();
    std::optional<nlohmann::json> last_request_;
    std::optional<std::string> last_authorization_;
};

}  // namespace cqmkit
