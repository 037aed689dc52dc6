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

#include "cqmkit/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cqmkit/exceptions.hpp"

namespace cqmkit {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view to_string(Sense sense) {
    switch (sense) {
        case Sense::EQ:
            return "eq";
        case Sense::LE:
            return "le";
        case Sense::GE:
            return "ge";
    }
    return "?";
}

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::one_hot:
            return "one_hot";
        case ConstraintKind::resource_bound:
            return "resource_bound";
        case ConstraintKind::generic:
            return "generic";
    }
    return "?";
}

Sense parse_sense(std::string_view text) {
    auto s = lower(text);
    if (s == "eq" || s == "==" || s == "=") return Sense::EQ;
    if (s == "le" || s == "<=") return Sense::LE;
    if (s == "ge" || s == ">=") return Sense::GE;
    throw InputError("unknown constraint sense '" + std::string(text) + "'");
}

ConstraintKind parse_kind(std::string_view text) {
    if (text == "one_hot") return ConstraintKind::one_hot;
    if (text == "resource_bound") return ConstraintKind::resource_bound;
    if (text == "generic") return ConstraintKind::generic;
    throw InputError("unknown constraint kind '" + std::string(text) + "'");
}

Verdict check_constraint(const Constraint& constraint, const Assignment& x, double eps) {
    Verdict verdict;
    verdict.lhs = evaluate(constraint.expr, x);
    switch (constraint.sense) {
        case Sense::EQ:
            verdict.violation = std::max(std::abs(verdict.lhs) - eps, 0.0);
            break;
        case Sense::LE:
            verdict.violation = std::max(verdict.lhs - eps, 0.0);
            break;
        case Sense::GE:
            verdict.violation = std::max(-verdict.lhs - eps, 0.0);
            break;
    }
    verdict.satisfied = verdict.violation == 0.0;
    return verdict;
}

std::optional<Index> CqmModel::find_variable(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

const Constraint* CqmModel::find_constraint(std::string_view name) const {
    for (const auto& c : constraints_) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

Index CqmBuilder::add_variable(std::string label) {
    if (label.empty()) {
        throw InvalidModel("variable labels must be non-empty");
    }
    if (model_.label_index_.contains(label)) {
        throw InvalidModel("duplicate variable label '" + label + "'");
    }
    Index v = model_.variables_.size();
    model_.label_index_.emplace(label, v);
    model_.variables_.push_back({v, std::move(label)});
    return v;
}

CqmBuilder& CqmBuilder::set_objective(const QuadraticExpression& objective) {
    if (!objective.is_finite()) {
        throw InvalidModel("objective has a non-finite coefficient");
    }
    model_.objective_ = normalize(objective);
    return *this;
}

CqmBuilder& CqmBuilder::add_constraint(Constraint constraint) {
    if (constraint.name.empty()) {
        throw InvalidModel("constraint names must be non-empty");
    }
    if (model_.find_constraint(constraint.name) != nullptr) {
        throw InvalidModel("duplicate constraint name '" + constraint.name + "'");
    }
    if (!constraint.expr.is_finite()) {
        throw InvalidModel("constraint '" + constraint.name + "' has a non-finite coefficient");
    }
    if (constraint.scale < 1) {
        throw InvalidModel("constraint '" + constraint.name + "' has a non-positive scale");
    }
    constraint.expr = normalize(constraint.expr);
    if (constraint.sense == Sense::GE) {
        constraint.expr = constraint.expr.scaled(-1.0);
        constraint.sense = Sense::LE;
    }
    model_.constraints_.push_back(std::move(constraint));
    return *this;
}

CqmBuilder& CqmBuilder::set_tolerance(double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw InvalidModel("feasibility tolerance must be finite and non-negative");
    }
    model_.tolerance_ = eps;
    return *this;
}

CqmModel CqmBuilder::build() && {
    const std::size_t n = model_.variables_.size();
    if (model_.objective_.span_size() > n) {
        throw InvalidModel("objective references an undeclared variable");
    }
    for (const auto& c : model_.constraints_) {
        if (c.expr.span_size() > n) {
            throw InvalidModel("constraint '" + c.name + "' references an undeclared variable");
        }
    }
    return std::move(model_);
}

double FeasibilityReport::total_violation() const {
    double total = 0.0;
    for (const auto& v : per_constraint) total += v.violation;
    return total;
}

FeasibilityReport is_feasible(const CqmModel& model, const Assignment& x) {
    if (x.size() != model.num_variables()) {
        throw DimensionMismatch("assignment has " + std::to_string(x.size()) +
                                " bits but the model has " +
                                std::to_string(model.num_variables()) + " variables");
    }
    FeasibilityReport report;
    report.per_constraint.reserve(model.num_constraints());
    for (const auto& c : model.constraints()) {
        auto verdict = check_constraint(c, x, model.tolerance());
        report.feasible = report.feasible && verdict.satisfied;
        report.per_constraint.push_back(verdict);
    }
    return report;
}

}  // namespace cqmkit
