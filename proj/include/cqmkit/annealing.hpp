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

#include "cqmkit/model.hpp"
#include "cqmkit/qubo.hpp"
#include "cqmkit/sample_set.hpp"

namespace cqmkit {

struct SolveParams {
    std::uint64_t num_reads = 100;
    std::uint64_t seed = 0;
    std::uint64_t sweeps = 1000;
    double beta_start = 0.01;
    double beta_end = 10.0;
    std::chrono::duration<double> time_limit{5.0};  // remote backend only
    unsigned num_workers = 0;                        // 0: hardware concurrency

    /// Throws InputError unless beta_start < beta_end and all counts >= 1.
    void validate() const;
};

/// splitmix64 finaliser; used to derive independent per-read seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Inverse temperature for `sweep` of a geometric schedule with `sweeps` steps.
double geometric_beta(const SolveParams& params, std::uint64_t sweep);

/// Anneals the penalized form with single-flip Metropolis sweeps over the
/// original variables. Slack bits are not flipped on their own: every move
/// also resets the slack of the inequalities it touches to the value that
/// minimises the QUBO energy, and the Metropolis test uses the exact energy
/// change of that compound move.
///
/// Each read starts from a random state and uses its own generator seeded
/// from splitmix64(seed ^ read_index), so the output depends only on
/// (qubo, model, params) and not on the worker count. Final states are
/// decoded, re-checked against `model` and aggregated.
///
/// Throws BackendError if `qubo` was not derived from `model`.
SampleSet solve_sa(const QuboModel& qubo, const CqmModel& model, const SolveParams& params = {});

}  // namespace cqmkit
