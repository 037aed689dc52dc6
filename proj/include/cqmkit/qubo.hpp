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
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqmkit/expression.hpp"
#include "cqmkit/model.hpp"

namespace cqmkit {

/// How constraint penalty weights are chosen.
struct PenaltyPolicy {
    enum class Mode { automatic, fixed };

    Mode mode = Mode::automatic;
    double fixed_weight = 1.0;     // used when mode == fixed; must be > 0
    double auto_multiplier = 2.0;  // used when mode == automatic; must be >= 1

    static PenaltyPolicy automatic(double multiplier = 2.0) {
        return {Mode::automatic, 1.0, multiplier};
    }
    static PenaltyPolicy fixed(double weight) { return {Mode::fixed, weight, 2.0}; }

    /// Throws InvalidModel when the active field is out of range.
    void validate() const;
};

/// Log-binary slack encoding of one inequality, in scaled integer units.
///
/// Weights are 1, 2, 4, ..., 2^(k-2) followed by a trimmed top weight so that
/// the sums over all bit patterns are exactly {0, ..., range}.
struct SlackEncoding {
    std::int64_t range = 0;
    std::vector<std::int64_t> bit_weights;
    std::int64_t scaled_min = 0;  // lower bound of scale*expr over the hypercube
    std::int64_t scaled_max = 0;  // upper bound of scale*expr over the hypercube

    std::size_t num_bits() const { return bit_weights.size(); }
};

/// Slack encoding for an LE constraint whose coefficients become integral
/// after multiplying by `scale`. Bounds are exact for linear expressions.
///
/// Throws InvalidModel if the constraint is not LE or a scaled coefficient is
/// not integral (the offending term is named).
SlackEncoding slack_bits(const Constraint& constraint, std::int64_t scale);

/// Sum of absolute objective coefficients (linear and quadratic).
double objective_spread(const QuadraticExpression& objective);

/// multiplier * objective_spread for every constraint, with a floor of 1.0
/// when the spread is zero.
std::map<std::string, double> auto_penalty(const CqmModel& model, double multiplier);

struct SlackBit {
    std::string constraint;
    std::size_t bit = 0;
    std::int64_t weight = 0;

    friend bool operator==(const SlackBit&, const SlackBit&) = default;
};

struct QuboWarning {
    std::string constraint;
    std::string message;

    friend bool operator==(const QuboWarning&, const QuboWarning&) = default;
};

/// Unconstrained penalized form of a CQM.
///
/// Variables [0, num_original) are the model's variables; [num_original,
/// num_vars) are slack bits, each listed in `provenance`.
struct QuboModel {
    std::size_t num_original = 0;
    std::size_t num_vars = 0;
    QuadraticExpression form;
    std::map<Index, SlackBit> provenance;
    std::map<std::string, double> penalty_weights;
    std::vector<QuboWarning> warnings;

    std::size_t num_slack() const { return num_vars - num_original; }

    friend bool operator==(const QuboModel&, const QuboModel&) = default;
};

/// energy(x, s) = objective(x) + sum_c P_c * penalty_c(x, s) where
/// penalty_c = expr_c(x)^2 for EQ constraints and (expr_c(x) + s_c/scale_c)^2
/// for LE constraints.
///
/// LE constraints that no binary point can violate contribute nothing and get
/// a "redundant" warning. LE constraints that no point can satisfy get zero
/// slack bits and an "unsatisfiable" warning. Constraints with quadratic terms
/// are rejected since squaring them produces quartic terms.
QuboModel to_qubo(const CqmModel& model, const PenaltyPolicy& policy = {});

/// Energy of a full (original + slack) assignment.
double qubo_energy(const QuboModel& qubo, const Assignment& x);

struct DecodedSolution {
    Assignment assignment;                            // original variables only
    std::map<std::string, std::int64_t> slack_values;  // scaled units
};

/// Throws DimensionMismatch if `solution` does not have `num_vars` bits.
DecodedSolution decode(const QuboModel& qubo, const Assignment& solution);

/// True when `qubo` could have been produced from `model` by to_qubo.
bool provenance_matches(const QuboModel& qubo, const CqmModel& model);

nlohmann::json qubo_to_json(const QuboModel& qubo);
QuboModel qubo_from_json(const nlohmann::json& doc);

/// Upper-triangular coordinate text: header comments followed by one
/// "i j value" line per term in (i, j) order, linear biases on the diagonal.
std::string qubo_to_coo(const QuboModel& qubo);

}  // namespace cqmkit
