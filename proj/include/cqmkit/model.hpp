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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cqmkit/expression.hpp"

namespace cqmkit {

enum class Sense { EQ, LE, GE };

/// Reporting metadata; does not change constraint semantics.
enum class ConstraintKind { one_hot, resource_bound, generic };

std::string_view to_string(Sense sense);
std::string_view to_string(ConstraintKind kind);

/// Accepts "eq"/"le"/"ge" (any case) and "==", "=", "<=", ">=".
Sense parse_sense(std::string_view text);
ConstraintKind parse_kind(std::string_view text);

/// A named constraint `expr (sense) 0`.
///
/// `scale` is the minor-unit factor of the constraint's coefficients (100 for
/// cents, 10 for tenths of a kcal). Multiplying the expression by `scale` must
/// give integral coefficients before an inequality can be slack-encoded.
struct Constraint {
    std::string name;
    QuadraticExpression expr;
    Sense sense = Sense::LE;
    ConstraintKind kind = ConstraintKind::generic;
    std::int64_t scale = 1;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Verdict {
    bool satisfied = false;
    double lhs = 0.0;
    double violation = 0.0;
};

/// EQ: violation = max(|lhs| - eps, 0). LE: max(lhs - eps, 0).
/// GE: max(-lhs - eps, 0). Satisfied iff the violation is zero.
Verdict check_constraint(const Constraint& constraint, const Assignment& x, double eps);

struct Variable {
    Index index = 0;
    std::string label;

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// Constrained quadratic model over binary variables. Immutable once built;
/// use CqmBuilder to construct one.
class CqmModel {
 public:
    static constexpr double kDefaultTolerance = 1e-9;

    CqmModel() = default;

    std::size_t num_variables() const { return variables_.size(); }
    std::size_t num_constraints() const { return constraints_.size(); }

    const std::vector<Variable>& variables() const { return variables_; }
    const std::string& label(Index v) const { return variables_.at(v).label; }
    std::optional<Index> find_variable(std::string_view label) const;

    const QuadraticExpression& objective() const { return objective_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const Constraint* find_constraint(std::string_view name) const;

    double tolerance() const { return tolerance_; }

    friend bool operator==(const CqmModel& a, const CqmModel& b) {
        return a.variables_ == b.variables_ && a.objective_ == b.objective_ &&
               a.constraints_ == b.constraints_ && a.tolerance_ == b.tolerance_;
    }

 private:
    friend class CqmBuilder;

    std::vector<Variable> variables_;
    std::unordered_map<std::string, Index> label_index_;
    QuadraticExpression objective_;
    std::vector<Constraint> constraints_;
    double tolerance_ = kDefaultTolerance;
};

/// Single-owner construction phase for a CqmModel.
///
/// Expressions are normalized on insertion and GE constraints are stored as
/// LE with the expression negated.
class CqmBuilder {
 public:
    /// Returns the new variable's index. Labels must be unique and non-empty.
    Index add_variable(std::string label);

    CqmBuilder& set_objective(const QuadraticExpression& objective);
    CqmBuilder& add_constraint(Constraint constraint);
    CqmBuilder& set_tolerance(double eps);

    std::size_t num_variables() const { return model_.variables_.size(); }

    /// Throws InvalidModel if an expression references an unknown variable.
    CqmModel build() &&;

 private:
    CqmModel model_;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<Verdict> per_constraint;  // same order as model.constraints()

    double total_violation() const;
};

/// Throws DimensionMismatch if `x` does not have one bit per model variable.
FeasibilityReport is_feasible(const CqmModel& model, const Assignment& x);

}  // namespace cqmkit
