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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cqmkit {

/// A numeric catalog column. Values are held as integer minor units
/// (value * scale), so totals are exact.
struct Attribute {
    std::string name;
    std::int64_t scale = 1000;
    bool currency = false;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct CatalogItem {
    std::string name;
    std::string group;
    std::vector<std::int64_t> values;  // minor units, one per catalog attribute

    friend bool operator==(const CatalogItem&, const CatalogItem&) = default;
};

/// Default minor-unit factors: price -> 100, calories -> 10, anything else -> 1000.
std::int64_t default_scale(std::string_view attribute);

struct CatalogOptions {
    std::map<std::string, std::int64_t> scales;  // overrides default_scale

    std::int64_t scale_for(std::string_view attribute) const;
};

/// Grouped items with exact numeric attributes, in file order.
class ChoiceCatalog {
 public:
    ChoiceCatalog() = default;

    /// Throws InputError on an empty catalog, a duplicate (name, group) pair,
    /// an empty name or group, or a value count that does not match.
    ChoiceCatalog(std::vector<Attribute> attributes, std::vector<CatalogItem> items);

    const std::vector<Attribute>& attributes() const { return attributes_; }
    const std::vector<CatalogItem>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }

    /// Distinct group names in first-appearance order.
    const std::vector<std::string>& groups() const { return groups_; }
    const std::vector<std::size_t>& group_members(std::size_t group) const {
        return members_.at(group);
    }
    std::size_t group_of(std::size_t item) const { return item_group_.at(item); }

    std::optional<std::size_t> attribute_index(std::string_view name) const;

    /// Value of `attribute` for `item` in display units (minor units / scale).
    double value(std::size_t item, std::size_t attribute) const;

    /// The item's name, or "group/name" when the name occurs in several groups.
    std::string label(std::size_t item) const;

    friend bool operator==(const ChoiceCatalog& a, const ChoiceCatalog& b) {
        return a.attributes_ == b.attributes_ && a.items_ == b.items_;
    }

 private:
    std::vector<Attribute> attributes_;
    std::vector<CatalogItem> items_;
    std::vector<std::string> groups_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> item_group_;
    std::map<std::string, int> name_uses_;
};

/// Reads a CSV catalog with a header containing `name`, `item_type` (or
/// `group`) and at least one numeric column. Fields may be quoted; numeric
/// cells may carry a "$" or "\$" prefix.
///
/// Throws InputError naming the row and column of the first problem.
ChoiceCatalog parse_catalog(std::string_view csv, const CatalogOptions& options = {});

/// CSV text that parse_catalog reads back to an identical catalog (given the
/// same scales).
std::string write_catalog_csv(const ChoiceCatalog& catalog);

nlohmann::json catalog_to_json(const ChoiceCatalog& catalog);
ChoiceCatalog catalog_from_json(const nlohmann::json& doc);

}  // namespace cqmkit
