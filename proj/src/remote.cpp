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

#include "cqmkit/remote.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include <httplib.h>

#include "cqmkit/model_json.hpp"

namespace cqmkit {

namespace {

constexpr double kGraceSeconds = 30.0;

}  // namespace

RemoteStatusError::RemoteStatusError(int status, std::string code, const std::string& message)
    : RemoteError("remote solver returned HTTP " + std::to_string(status) +
                  (code.empty() ? std::string() : " (" + code + ")") +
                  (message.empty() ? std::string() : ": " + message)),
      status_(status),
      code_(std::move(code)) {}

Endpoint parse_endpoint(std::string_view url) {
    constexpr std::string_view kScheme = "http://";
    if (!url.starts_with(kScheme)) {
        throw InputError("endpoint '" + std::string(url) + "' must start with http://");
    }
    auto rest = url.substr(kScheme.size());
    auto slash = rest.find('/');
    auto authority = rest.substr(0, slash);
    if (authority.empty()) throw InputError("endpoint '" + std::string(url) + "' has no host");
    Endpoint ep;
    ep.origin = std::string(kScheme) + std::string(authority);
    if (slash != std::string_view::npos) {
        ep.base_path = std::string(rest.substr(slash));
        while (!ep.base_path.empty() && ep.base_path.back() == '/') ep.base_path.pop_back();
    }
    return ep;
}

nlohmann::json make_solve_request(const CqmModel& model, const SolveParams& params) {
    return {{"model", model_to_json(model)},
            {"time_limit_s", params.time_limit.count()},
            {"max_samples", params.num_reads}};
}

SampleSet parse_solve_response(const CqmModel& model, std::string_view body) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw RemoteMalformedResponse(std::string("response is not JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("samples") || !doc.at("samples").is_array()) {
        throw RemoteMalformedResponse("response has no 'samples' array");
    }

    std::string name = "remote";
    if (doc.contains("solver_info")) {
        const auto& info = doc.at("solver_info");
        if (!info.is_object()) throw RemoteMalformedResponse("'solver_info' must be an object");
        if (info.contains("name")) {
            if (!info.at("name").is_string()) {
                throw RemoteMalformedResponse("'solver_info.name' must be a string");
            }
            name = "remote:" + info.at("name").get<std::string>();
        }
    }

    std::vector<RawSample> raw;
    const auto& samples = doc.at("samples");
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& entry = samples[s];
        const std::string where = "sample " + std::to_string(s);
        if (!entry.is_object() || !entry.contains("bits") || !entry.at("bits").is_array()) {
            throw RemoteMalformedResponse(where + " has no 'bits' array");
        }
        const auto& bits = entry.at("bits");
        std::vector<std::uint8_t> values;
        values.reserve(bits.size());
        for (const auto& b : bits) {
            if (!b.is_number_integer() || (b.get<long long>() != 0 && b.get<long long>() != 1)) {
                throw RemoteMalformedResponse(where + " has a bit that is not 0 or 1");
            }
            values.push_back(static_cast<std::uint8_t>(b.get<long long>()));
        }
        if (values.size() != model.num_variables()) {
            throw RemoteSampleLengthError(where + " has " + std::to_string(values.size()) +
                                          " bits, expected " +
                                          std::to_string(model.num_variables()));
        }
        std::uint64_t count = 1;
        if (entry.contains("count")) {
            const auto& c = entry.at("count");
            if (!c.is_number_integer() || c.get<long long>() < 1) {
                throw RemoteMalformedResponse(where + " has a count that is not a positive integer");
            }
            count = c.get<std::uint64_t>();
        }
        raw.emplace_back(Assignment(std::move(values)), count);
    }
    return aggregate(model, raw, name);
}

SampleSet solve_remote(const CqmModel& model, std::string_view endpoint,
                       const SolveParams& params, const std::optional<std::string>& token) {
    params.validate();
    const Endpoint ep = parse_endpoint(endpoint);
    const auto start = std::chrono::steady_clock::now();

    httplib::Client client(ep.origin);
    const double timeout = params.time_limit.count() + kGraceSeconds;
    const auto seconds = static_cast<time_t>(timeout);
    const auto micros = static_cast<time_t>((timeout - std::floor(timeout)) * 1e6);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);
    if (token && !token->empty()) client.set_bearer_token_auth(*token);

    const std::string body = make_solve_request(model, params).dump();
    auto result = client.Post(ep.base_path + "/v1/solve", body, "application/json");
    if (!result) {
        throw RemoteConnectionError("cannot reach " + std::string(endpoint) + ": " +
                                    httplib::to_string(result.error()));
    }
    if (result->status < 200 || result->status >= 300) {
        std::string code;
        std::string message;
        auto doc = nlohmann::json::parse(result->body, nullptr, false);
        if (doc.is_object() && doc.contains("error") && doc.at("error").is_object()) {
            const auto& error = doc.at("error");
            if (error.contains("code") && error.at("code").is_string()) {
                code = error.at("code").get<std::string>();
            }
            if (error.contains("message") && error.at("message").is_string()) {
                message = error.at("message").get<std::string>();
            }
        }
        throw RemoteStatusError(result->status, std::move(code), message);
    }

    SampleSet set = parse_solve_response(model, result->body);
    set.wall_time = std::chrono::steady_clock::now() - start;
    return set;
}

}  // namespace cqmkit
