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

#include <json.hpp>

#include "cqmkit/expression.hpp"
#include "cqmkit/model.hpp"

namespace cqmkit {

// Model document layout:
//
//   {"variables":   [{"index": 0, "label": "..."}, ...],
//    "objective":   <expression>,
//    "constraints": [{"name", "sense", "kind", "scale", "expr": <expression>}, ...],
//    "feasibility_tolerance": 1e-9}
//
//   <expression> = {"linear": {"<i>": a_i, ...},
//                   "quadratic": [[i, j, b_ij], ...],   // i < j
//                   "offset": c}
//
// Unknown top-level keys are ignored, so callers may attach metadata.

nlohmann::json expression_to_json(const QuadraticExpression& expr);
QuadraticExpression expression_from_json(const nlohmann::json& doc);

nlohmann::json model_to_json(const CqmModel& model);

/// Throws InputError on a malformed document and InvalidModel when the
/// document describes an inconsistent model.
CqmModel model_from_json(const nlohmann::json& doc);

}  // namespace cqmkit
