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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cqmkit/model.hpp"
#include "cqmkit/sample_set.hpp"

namespace cqmkit {

/// Disjoint one-hot groups detected in a model plus the variables outside
/// every group. A constraint counts as a group when it is EQ, linear, every
/// coefficient is 1 and the offset is -1.
struct OneHotStructure {
    std::vector<std::vector<Index>> groups;
    std::vector<std::size_t> group_constraints;  // index into model.constraints()
    std::vector<Index> free_variables;

    /// Product of group sizes times 2^free; saturates at UINT64_MAX.
    std::uint64_t cartesian_size() const;
};

/// Groups in constraint order; a group overlapping an earlier one is left to
/// be checked as an ordinary constraint.
OneHotStructure one_hot_structure(const CqmModel& model);

/// Calls `visit` with the sorted active (x = 1) indices of every assignment
/// that sets exactly one variable per group and any subset of free variables.
void for_each_one_hot_candidate(const OneHotStructure& structure,
                                const std::function<void(std::span<const Index>)>& visit);

enum class EnumerationMode { full, cartesian };

struct ExactLimits {
    std::size_t max_full_variables = 30;
    std::uint64_t max_cartesian = 100'000'000;
    std::size_t max_optimal_ties = 65536;
};

struct ExactOutcome {
    SampleSet samples;
    EnumerationMode mode = EnumerationMode::full;
    std::uint64_t visited = 0;
    std::uint64_t feasible_count = 0;
};

/// Exhaustive search.
///
/// Cartesian mode (used whenever one-hot groups exist and the product fits
/// `max_cartesian`) only visits one-hot-respecting assignments; full mode
/// walks all 2^n assignments in Gray-code order. The result holds every
/// feasible assignment tied at the optimum (up to `max_optimal_ties`) and the
/// `top_k` best feasible ones overall. When nothing is feasible it holds the
/// `top_k` assignments with the smallest summed violation instead.
///
/// Throws SizeLimitError when neither mode fits its cap.
ExactOutcome enumerate_exact(const CqmModel& model, std::size_t top_k,
                             const ExactLimits& limits = {});

SampleSet solve_exact(const CqmModel& model, std::size_t top_k, const ExactLimits& limits = {});

}  // namespace cqmkit
