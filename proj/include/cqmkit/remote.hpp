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

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cqmkit/annealing.hpp"
#include "cqmkit/exceptions.hpp"
#include "cqmkit/model.hpp"
#include "cqmkit/sample_set.hpp"

namespace cqmkit {

// Wire protocol, version 1:
//
//   POST {endpoint}/v1/solve
//     {"model": <model document>, "time_limit_s": 5.0, "max_samples": 100}
//   200 {"samples": [{"bits": [0, 1, ...], "count": 3}, ...],
//        "solver_info": {"name": "..."}}
//   4xx/5xx {"error": {"code": "...", "message": "..."}}
//
// Any energy or feasibility a server reports is ignored; both are recomputed
// locally.

class RemoteError : public BackendError {
 public:
    using BackendError::BackendError;
};

/// The server could not be reached or the request timed out.
class RemoteConnectionError : public RemoteError {
 public:
    using RemoteError::RemoteError;
};

/// The server answered with a non-2xx status.
class RemoteStatusError : public RemoteError {
 public:
    RemoteStatusError(int status, std::string code, const std::string& message);

    int status() const { return status_; }
    const std::string& code() const { return code_; }

 private:
    int status_;
    std::string code_;
};

/// The response body is not a valid protocol document.
class RemoteMalformedResponse : public RemoteError {
 public:
    using RemoteError::RemoteError;
};

/// A returned sample does not have one bit per model variable.
class RemoteSampleLengthError : public RemoteError {
 public:
    using RemoteError::RemoteError;
};

struct Endpoint {
    std::string origin;     // "http://host:port"
    std::string base_path;  // "" or "/prefix", no trailing slash
};

/// Splits "http://host[:port][/prefix]". Throws InputError for other schemes.
Endpoint parse_endpoint(std::string_view url);

nlohmann::json make_solve_request(const CqmModel& model, const SolveParams& params);

/// Parses a 2xx body. Throws RemoteMalformedResponse or
/// RemoteSampleLengthError.
SampleSet parse_solve_response(const CqmModel& model, std::string_view body);

/// One blocking POST to {endpoint}/v1/solve with a read timeout of
/// time_limit + 30 s. `token`, when given, is sent as a bearer token.
SampleSet solve_remote(const CqmModel& model, std::string_view endpoint,
                       const SolveParams& params = {},
                       const std::optional<std::string>& token = std::nullopt);

}  // namespace cqmkit
