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

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cqmkit/expression.hpp"
#include "cqmkit/model.hpp"

namespace cqmkit {

struct Violation {
    std::string constraint;
    double magnitude = 0.0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// One distinct assignment returned by a backend.
///
/// `energy` is always the model objective at `assignment`, recomputed
/// locally; `feasible` holds exactly when `violations` is empty.
struct Sample {
    Assignment assignment;
    double energy = 0.0;
    std::uint64_t num_occurrences = 1;
    bool feasible = false;
    std::vector<Violation> violations;

    double total_violation() const;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Evaluates `x` against `model` and fills energy, feasibility and violations.
Sample make_sample(const CqmModel& model, const Assignment& x, std::uint64_t count = 1);

/// Feasible before infeasible, then ascending energy, then lexicographic bits.
bool canonical_less(const Sample& a, const Sample& b);

struct SampleSet {
    std::vector<Sample> samples;
    std::uint64_t total_reads = 0;
    std::string backend_name;
    std::chrono::duration<double> wall_time{0.0};

    bool empty() const { return samples.empty(); }
    std::size_t size() const { return samples.size(); }
    bool has_feasible() const { return !samples.empty() && samples.front().feasible; }

    /// Lowest-energy feasible sample, or nullptr.
    const Sample* best_feasible() const;

    /// Sample with the smallest summed violation (ties: canonical order), or
    /// nullptr when empty.
    const Sample* least_violating() const;

    /// Every feasible sample sharing the best feasible energy.
    std::vector<const Sample*> optimal_samples() const;
};

using RawSample = std::pair<Assignment, std::uint64_t>;

/// Merges duplicate assignments by summing counts, recomputes energy and
/// feasibility against `model`, and applies the canonical order. Entries with
/// a zero count are ignored.
SampleSet aggregate(const CqmModel& model, std::span<const RawSample> raw,
                    std::string backend_name = {});

/// Machine-readable rendering. Wall time is only included on request so that
/// fixed inputs give byte-identical documents.
nlohmann::json sampleset_to_json(const SampleSet& set, const CqmModel& model,
                                 bool include_timing = false);

}  // namespace cqmkit
