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
#include <vector>

#include <json.hpp>

#include "cqmkit/catalog.hpp"
#include "cqmkit/model.hpp"
#include "cqmkit/sample_set.hpp"

namespace cqmkit {

enum class Direction { minimize, maximize };

/// `attribute (sense) limit`, e.g. calories <= 700.
struct Bound {
    std::string attribute;
    Sense sense = Sense::LE;
    double limit = 0.0;

    friend bool operator==(const Bound&, const Bound&) = default;
};

/// Parses "calories<=700" or "protein >= 20".
Bound parse_bound(std::string_view text);

/// Pick one item per group, optimise one attribute, bound others.
struct ChoiceSpec {
    std::string objective_attribute = "price";
    Direction direction = Direction::minimize;
    std::vector<Bound> bounds;

    /// Throws InputError for unknown attributes, EQ bounds or non-finite limits.
    void validate(const ChoiceCatalog& catalog) const;

    friend bool operator==(const ChoiceSpec&, const ChoiceSpec&) = default;
};

nlohmann::json spec_to_json(const ChoiceSpec& spec);
ChoiceSpec spec_from_json(const nlohmann::json& doc);

/// One binary variable per item (catalog order, labelled by
/// ChoiceCatalog::label), objective sum(attr_i x_i) (negated to maximise),
/// an EQ constraint "one_hot:<group>" = sum_{i in group} x_i - 1 per group and
/// an LE constraint "bound:<attribute>" = sum(attr_i x_i) - limit per bound
/// (GE bounds are negated). Bound constraints carry the attribute's scale.
CqmModel build_model(const ChoiceCatalog& catalog, const ChoiceSpec& spec);

struct GroupChoice {
    std::string group;
    std::optional<std::size_t> item;  // set only when exactly one item is chosen
    std::string display;              // item name, or an em dash
    std::string note;                 // empty unless the one-hot is broken
};

struct AttributeTotal {
    std::string attribute;
    std::int64_t minor_units = 0;
    std::int64_t scale = 1;
    bool currency = false;

    double value() const { return static_cast<double>(minor_units) / static_cast<double>(scale); }
    /// Fixed decimals, no currency symbol.
    std::string display() const;
};

/// A sample presented per group, with exact attribute totals.
struct MealReport {
    std::vector<GroupChoice> choices;
    std::vector<AttributeTotal> totals;
    double objective = 0.0;  // un-negated for maximisation
    bool feasible = false;
    std::vector<Violation> violations;
    std::uint64_t num_occurrences = 0;

    const AttributeTotal* total(std::string_view attribute) const;
};

/// Throws DimensionMismatch unless the sample, model and catalog agree on the
/// number of items.
MealReport describe_solution(const ChoiceCatalog& catalog, const CqmModel& model,
                             const Sample& sample, Direction direction = Direction::minimize);

nlohmann::json report_to_json(const MealReport& report);

/// Aligned text table, one row per report; currency totals get a "$" prefix.
std::string render_meal_table(const ChoiceCatalog& catalog, const std::vector<MealReport>& reports);

/// Display width of UTF-8 text in code points.
std::size_t display_width(std::string_view text);

}  // namespace cqmkit
