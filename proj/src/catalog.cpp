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

#include "cqmkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "cqmkit/decimal.hpp"
#include "cqmkit/exceptions.hpp"

namespace cqmkit {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

// RFC 4180 style: quoted fields may contain commas, newlines and "" escapes.
std::vector<CsvRow> split_csv(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<CsvRow> rows;
    CsvRow row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t line = 1;
    row.line = line;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        bool blank = row.fields.size() == 1 && trim(row.fields[0]).empty();
        if (!blank) rows.push_back(std::move(row));
        row = CsvRow{};
        row.line = line;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field_started || trim(field).empty()) {
                    field.clear();
                    quoted = true;
                    field_started = true;
                } else {
                    field.push_back(c);
                }
                break;
            case ',':
                end_field();
                break;
            case '\r':
                break;
            case '\n':
                ++line;
                end_row();
                break;
            default:
                field.push_back(c);
                field_started = true;
        }
    }
    if (quoted) {
        throw InputError("row " + std::to_string(row.line) + ": unterminated quoted field");
    }
    if (!field.empty() || !row.fields.empty()) end_row();
    return rows;
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos && trim(s) == s) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

}  // namespace

std::int64_t default_scale(std::string_view attribute) {
    auto name = lower(std::string(attribute));
    if (name == "price") return 100;
    if (name == "calories") return 10;
    return 1000;
}

std::int64_t CatalogOptions::scale_for(std::string_view attribute) const {
    auto it = scales.find(std::string(attribute));
    return it == scales.end() ? default_scale(attribute) : it->second;
}

ChoiceCatalog::ChoiceCatalog(std::vector<Attribute> attributes, std::vector<CatalogItem> items)
    : attributes_(std::move(attributes)), items_(std::move(items)) {
    if (items_.empty()) throw InputError("catalog is empty");
    if (attributes_.empty()) throw InputError("catalog has no numeric attributes");
    std::set<std::string> attribute_names;
    for (const auto& a : attributes_) {
        if (a.name.empty()) throw InputError("attribute names must be non-empty");
        if (a.scale < 1) throw InputError("attribute '" + a.name + "' has a non-positive scale");
        if (!attribute_names.insert(a.name).second) {
            throw InputError("duplicate attribute '" + a.name + "'");
        }
    }

    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        const auto& item = items_[i];
        if (item.name.empty()) throw InputError("item " + std::to_string(i) + " has no name");
        if (item.group.empty()) throw InputError("item '" + item.name + "' has no group");
        if (item.values.size() != attributes_.size()) {
            throw InputError("item '" + item.name + "' has the wrong number of values");
        }
        if (!seen.insert({item.group, item.name}).second) {
            throw InputError("duplicate item '" + item.name + "' in group '" + item.group + "'");
        }
        auto g = std::find(groups_.begin(), groups_.end(), item.group);
        std::size_t group = static_cast<std::size_t>(g - groups_.begin());
        if (g == groups_.end()) {
            groups_.push_back(item.group);
            members_.emplace_back();
        }
        members_[group].push_back(i);
        item_group_.push_back(group);
        ++name_uses_[item.name];
    }
}

std::optional<std::size_t> ChoiceCatalog::attribute_index(std::string_view name) const {
    for (std::size_t a = 0; a < attributes_.size(); ++a) {
        if (attributes_[a].name == name) return a;
    }
    return std::nullopt;
}

double ChoiceCatalog::value(std::size_t item, std::size_t attribute) const {
    return static_cast<double>(items_.at(item).values.at(attribute)) /
           static_cast<double>(attributes_.at(attribute).scale);
}

std::string ChoiceCatalog::label(std::size_t item) const {
    const auto& it = items_.at(item);
    return name_uses_.at(it.name) > 1 ? it.group + "/" + it.name : it.name;
}

ChoiceCatalog parse_catalog(std::string_view csv, const CatalogOptions& options) {
    auto rows = split_csv(csv);
    if (rows.empty()) throw InputError("catalog is empty");

    const auto& header = rows.front();
    std::optional<std::size_t> name_col;
    std::optional<std::size_t> group_col;
    std::vector<std::size_t> attribute_cols;
    std::vector<Attribute> attributes;
    for (std::size_t c = 0; c < header.fields.size(); ++c) {
        auto column = trim(header.fields[c]);
        auto key = lower(column);
        if (key == "name" && !name_col) {
            name_col = c;
        } else if ((key == "item_type" || key == "group") && !group_col) {
            group_col = c;
        } else {
            if (column.empty()) {
                throw InputError("row 1: column " + std::to_string(c + 1) + " has no name");
            }
            attribute_cols.push_back(c);
            attributes.push_back({column, options.scale_for(column), false});
        }
    }
    if (!name_col) throw InputError("row 1: missing column 'name'");
    if (!group_col) throw InputError("row 1: missing column 'item_type'");
    if (attributes.empty()) throw InputError("row 1: no numeric attribute columns");
    if (rows.size() == 1) throw InputError("catalog is empty: header row only");

    std::vector<CatalogItem> items;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string where = "row " + std::to_string(row.line);
        if (row.fields.size() != header.fields.size()) {
            throw InputError(where + ": expected " + std::to_string(header.fields.size()) +
                             " fields, found " + std::to_string(row.fields.size()));
        }
        CatalogItem item;
        item.name = trim(row.fields[*name_col]);
        item.group = trim(row.fields[*group_col]);
        if (item.name.empty()) throw InputError(where + ", column 'name': empty value");
        if (item.group.empty()) throw InputError(where + ", column 'item_type': empty value");
        for (std::size_t a = 0; a < attributes.size(); ++a) {
            const auto& cell = row.fields[attribute_cols[a]];
            try {
                item.values.push_back(parse_minor_units(cell, attributes[a].scale));
            } catch (const InputError& e) {
                throw InputError(where + ", column '" + attributes[a].name + "': " + e.what());
            }
            if (has_currency_marker(cell)) attributes[a].currency = true;
        }
        if (!seen.insert({item.group, item.name}).second) {
            throw InputError(where + ": duplicate item '" + item.name + "' in group '" +
                             item.group + "'");
        }
        items.push_back(std::move(item));
    }
    return ChoiceCatalog(std::move(attributes), std::move(items));
}

std::string write_catalog_csv(const ChoiceCatalog& catalog) {
    std::string out = "name,item_type";
    for (const auto& a : catalog.attributes()) out += "," + quote_csv(a.name);
    out += "\n";
    for (const auto& item : catalog.items()) {
        out += quote_csv(item.name) + "," + quote_csv(item.group);
        for (std::size_t a = 0; a < catalog.attributes().size(); ++a) {
            const auto& attr = catalog.attributes()[a];
            auto text = format_minor_units(item.values[a], attr.scale);
            if (attr.currency) {
                text = item.values[a] < 0 ? "-$" + text.substr(1) : "$" + text;
            }
            out += "," + text;
        }
        out += "\n";
    }
    return out;
}

nlohmann::json catalog_to_json(const ChoiceCatalog& catalog) {
    using nlohmann::json;
    json attributes = json::array();
    for (const auto& a : catalog.attributes()) {
        attributes.push_back({{"name", a.name}, {"scale", a.scale}, {"currency", a.currency}});
    }
    json items = json::array();
    for (const auto& item : catalog.items()) {
        json values = json::array();
        for (auto v : item.values) values.push_back(v);
        items.push_back({{"name", item.name}, {"group", item.group}, {"minor_units", values}});
    }
    return json{{"attributes", std::move(attributes)}, {"items", std::move(items)}};
}

ChoiceCatalog catalog_from_json(const nlohmann::json& doc) {
    try {
        std::vector<Attribute> attributes;
        for (const auto& a : doc.at("attributes")) {
            attributes.push_back({a.at("name").get<std::string>(),
                                  a.at("scale").get<std::int64_t>(),
                                  a.value("currency", false)});
        }
        std::vector<CatalogItem> items;
        for (const auto& it : doc.at("items")) {
            items.push_back({it.at("name").get<std::string>(), it.at("group").get<std::string>(),
                             it.at("minor_units").get<std::vector<std::int64_t>>()});
        }
        return ChoiceCatalog(std::move(attributes), std::move(items));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed catalog document: ") + e.what());
    }
}

}  // namespace cqmkit
