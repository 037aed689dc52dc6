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

#include "cqmkit/mock_server.hpp"

#include <httplib.h>

#include "cqmkit/exact_solver.hpp"
#include "cqmkit/exceptions.hpp"
#include "cqmkit/model_json.hpp"

namespace cqmkit {

namespace {

nlohmann::json error_document(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

MockSolverServer::MockSolverServer(Mode mode)
    : server_(std::make_unique<httplib::Server>()), mode_(mode) {
    server_->Post("/v1/solve", [this](const httplib::Request& req, httplib::Response& res) {
        {
            std::lock_guard lock(mutex_);
            if (req.has_header("Authorization")) {
                last_authorization_ = req.get_header_value("Authorization");
            }
        }
        int status = 200;
        std::string body = respond(req.body, status);
        res.status = status;
        res.set_content(body, "application/json");
    });
}

MockSolverServer::~MockSolverServer() { stop(); }

void MockSolverServer::set_mode(Mode mode) {
    std::lock_guard lock(mutex_);
    mode_ = mode;
}

void MockSolverServer::set_fixed_samples(nlohmann::json samples) {
    std::lock_guard lock(mutex_);
    fixed_ = std::move(samples);
}

int MockSolverServer::start(const std::string& host, int port) {
    host_ = host;
    port_ = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (port_ <= 0) throw BackendError("mock server cannot bind to " + host);
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port_;
}

void MockSolverServer::stop() {
    if (thread_.joinable()) {
        server_->stop();
        thread_.join();
    }
}

std::string MockSolverServer::url() const { return "http://" + host_ + ":" + std::to_string(port_); }

std::optional<nlohmann::json> MockSolverServer::last_request() const {
    std::lock_guard lock(mutex_);
    return last_request_;
}

std::optional<std::string> MockSolverServer::last_authorization() const {
    std::lock_guard lock(mutex_);
    return last_authorization_;
}

std::string MockSolverServer::respond(const std::string& body, int& status) {
    Mode mode;
    nlohmann::json fixed;
    auto request = nlohmann::json::parse(body, nullptr, false);
    {
        std::lock_guard lock(mutex_);
        mode = mode_;
        fixed = fixed_;
        if (!request.is_discarded()) last_request_ = request;
    }

    if (mode == Mode::server_error) {
        status = 500;
        return error_document("internal", "mock failure").dump();
    }
    if (mode == Mode::malformed) return "{\"samples\": [ this is not json";
    if (request.is_discarded() || !request.is_object() || !request.contains("model") ||
        !request.contains("time_limit_s") || !request.contains("max_samples")) {
        status = 400;
        return error_document("bad_request", "expected model, time_limit_s and max_samples").dump();
    }

    nlohmann::json samples = nlohmann::json::array();
    if (mode == Mode::fixed) {
        samples = fixed;
    } else {
        try {
            CqmModel model = model_from_json(request.at("model"));
            auto top_k = std::max<std::size_t>(1, request.at("max_samples").get<std::size_t>());
            SampleSet set = solve_exact(model, top_k);
            for (const auto& s : set.samples) {
                nlohmann::json bits = nlohmann::json::array();
                for (auto b : s.assignment.bits()) bits.push_back(static_cast<int>(b));
                if (mode == Mode::wrong_length && !bits.empty()) bits.erase(bits.size() - 1);
                double energy = mode == Mode::corrupt_energy ? s.energy + 1000.0 : s.energy;
                samples.push_back({{"bits", std::move(bits)},
                                   {"count", s.num_occurrences},
                                   {"energy", energy},
                                   {"feasible", s.feasible}});
            }
        } catch (const std::exception& e) {
            status = 422;
            return error_document("invalid_model", e.what()).dump();
        }
    }
    return nlohmann::json{{"samples", std::move(samples)}, {"solver_info", {{"name", "mock"}}}}
        .dump();
}

}  // namespace cqmkit
