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

#include "cqmkit/choice_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "cqmkit/decimal.hpp"
#include "cqmkit/exceptions.hpp"

namespace cqmkit {

namespace {

constexpr const char* kNone = "—";

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::string capitalize(std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

std::string pad(const std::string& s, std::size_t width, bool right_align) {
    std::size_t w = display_width(s);
    std::string fill(width > w ? width - w : 0, ' ');
    return right_align ? fill + s : s + fill;
}

}  // namespace

Bound parse_bound(std::string_view text) {
    for (std::string_view op : {"<=", ">="}) {
        auto pos = text.find(op);
        if (pos == std::string_view::npos) continue;
        Bound b;
        b.attribute = trim(text.substr(0, pos));
        b.sense = parse_sense(op);
        auto limit = trim(text.substr(pos + 2));
        auto [ptr, ec] = std::from_chars(limit.data(), limit.data() + limit.size(), b.limit);
        if (b.attribute.empty() || limit.empty() || ec != std::errc() ||
            ptr != limit.data() + limit.size() || !std::isfinite(b.limit)) {
            throw InputError("cannot parse bound '" + std::string(text) +
                             "'; expected attr<=limit or attr>=limit");
        }
        return b;
    }
    throw InputError("cannot parse bound '" + std::string(text) +
                     "'; expected attr<=limit or attr>=limit");
}

void ChoiceSpec::validate(const ChoiceCatalog& catalog) const {
    if (!catalog.attribute_index(objective_attribute)) {
        throw InputError("unknown objective attribute '" + objective_attribute + "'");
    }
    for (const auto& b : bounds) {
        if (!catalog.attribute_index(b.attribute)) {
            throw InputError("unknown bound attribute '" + b.attribute + "'");
        }
        if (b.sense == Sense::EQ) {
            throw InputError("bound on '" + b.attribute + "' must be <= or >=");
        }
        if (!std::isfinite(b.limit)) {
            throw InputError("bound on '" + b.attribute + "' has a non-finite limit");
        }
    }
}

nlohmann::json spec_to_json(const ChoiceSpec& spec) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : spec.bounds) {
        bounds.push_back({{"attribute", b.attribute},
                          {"sense", std::string(to_string(b.sense))},
                          {"limit", b.limit}});
    }
    return {{"objective", spec.objective_attribute},
            {"direction", spec.direction == Direction::minimize ? "minimize" : "maximize"},
            {"bounds", std::move(bounds)}};
}

ChoiceSpec spec_from_json(const nlohmann::json& doc) {
    try {
        ChoiceSpec spec;
        spec.objective_attribute = doc.at("objective").get<std::string>();
        auto direction = doc.value("direction", std::string("minimize"));
        if (direction == "maximize") {
            spec.direction = Direction::maximize;
        } else if (direction != "minimize") {
            throw InputError("unknown direction '" + direction + "'");
        }
        for (const auto& b : doc.value("bounds", nlohmann::json::array())) {
            spec.bounds.push_back({b.at("attribute").get<std::string>(),
                                   parse_sense(b.at("sense").get<std::string>()),
                                   b.at("limit").get<double>()});
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed choice spec: ") + e.what());
    }
}

CqmModel build_model(const ChoiceCatalog& catalog, const ChoiceSpec& spec) {
    spec.validate(catalog);
    CqmBuilder builder;
    for (std::size_t i = 0; i < catalog.size(); ++i) builder.add_variable(catalog.label(i));

    const std::size_t objective_attr = *catalog.attribute_index(spec.objective_attribute);
    const double sign = spec.direction == Direction::minimize ? 1.0 : -1.0;
    QuadraticExpression objective;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        objective.add_linear(i, sign * catalog.value(i, objective_attr));
    }
    builder.set_objective(objective);

    for (std::size_t g = 0; g < catalog.groups().size(); ++g) {
        Constraint c;
        c.name = "one_hot:" + catalog.groups()[g];
        c.sense = Sense::EQ;
        c.kind = ConstraintKind::one_hot;
        for (auto i : catalog.group_members(g)) c.expr.add_linear(i, 1.0);
        c.expr.set_offset(-1.0);
        builder.add_constraint(std::move(c));
    }

    std::set<std::string> names;
    for (const auto& b : spec.bounds) {
        const std::size_t attr = *catalog.attribute_index(b.attribute);
        Constraint c;
        c.name = "bound:" + b.attribute;
        for (int k = 2; names.contains(c.name); ++k) {
            c.name = "bound:" + b.attribute + "#" + std::to_string(k);
        }
        names.insert(c.name);
        c.sense = b.sense;
        c.kind = ConstraintKind::resource_bound;
        c.scale = catalog.attributes()[attr].scale;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            c.expr.add_linear(i, catalog.value(i, attr));
        }
        c.expr.set_offset(-b.limit);
        builder.add_constraint(std::move(c));
    }
    return std::move(builder).build();
}

std::string AttributeTotal::display() const { return format_minor_units(minor_units, scale); }

const AttributeTotal* MealReport::total(std::string_view attribute) const {
    for (const auto& t : totals) {
        if (t.attribute == attribute) return &t;
    }
    return nullptr;
}

MealReport describe_solution(const ChoiceCatalog& catalog, const CqmModel& model,
                             const Sample& sample, Direction direction) {
    if (sample.assignment.size() != model.num_variables() ||
        model.num_variables() != catalog.size()) {
        throw DimensionMismatch("sample has " + std::to_string(sample.assignment.size()) +
                                " bits, model " + std::to_string(model.num_variables()) +
                                " variables, catalog " + std::to_string(catalog.size()) +
                                " items");
    }
    MealReport report;
    report.objective = direction == Direction::minimize ? sample.energy : -sample.energy;
    report.feasible = sample.feasible;
    report.violations = sample.violations;
    report.num_occurrences = sample.num_occurrences;

    for (std::size_t g = 0; g < catalog.groups().size(); ++g) {
        GroupChoice choice;
        choice.group = catalog.groups()[g];
        std::vector<std::size_t> chosen;
        for (auto i : catalog.group_members(g)) {
            if (sample.assignment[i]) chosen.push_back(i);
        }
        if (chosen.size() == 1) {
            choice.item = chosen.front();
            choice.display = catalog.items()[chosen.front()].name;
        } else {
            choice.display = kNone;
            if (chosen.empty()) {
                choice.note = "no " + choice.group + " selected";
            } else {
                choice.note = std::to_string(chosen.size()) + " " + choice.group + " items selected:";
                for (auto i : chosen) choice.note += " " + catalog.items()[i].name + ";";
                choice.note.pop_back();
            }
        }
        report.choices.push_back(std::move(choice));
    }

    for (std::size_t a = 0; a < catalog.attributes().size(); ++a) {
        const auto& attr = catalog.attributes()[a];
        AttributeTotal total{attr.name, 0, attr.scale, attr.currency};
        for (auto i : sample.assignment.ones()) total.minor_units += catalog.items()[i].values[a];
        report.totals.push_back(total);
    }
    return report;
}

nlohmann::json report_to_json(const MealReport& report) {
    using nlohmann::json;
    json choices = json::array();
    for (const auto& c : report.choices) {
        json entry{{"group", c.group}, {"item", c.item ? json(c.display) : json(nullptr)}};
        if (!c.note.empty()) entry["note"] = c.note;
        choices.push_back(std::move(entry));
    }
    json totals = json::object();
    for (const auto& t : report.totals) {
        totals[t.attribute] = {{"value", t.value()},
                               {"display", t.display()},
                               {"minor_units", t.minor_units},
                               {"scale", t.scale}};
    }
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"constraint", v.constraint}, {"violation", v.magnitude}});
    }
    return {{"choices", std::move(choices)},
            {"totals", std::move(totals)},
            {"objective", report.objective},
            {"feasible", report.feasible},
            {"num_occurrences", report.num_occurrences},
            {"violations", std::move(violations)}};
}

std::string render_meal_table(const ChoiceCatalog& catalog,
                              const std::vector<MealReport>& reports) {
    std::vector<std::string> header;
    for (const auto& g : catalog.groups()) header.push_back(capitalize(g));
    for (const auto& a : catalog.attributes()) header.push_back(capitalize(a.name));
    header.push_back("Count");
    header.push_back("Feasible");
    const std::size_t num_groups = catalog.groups().size();

    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
        std::vector<std::string> row;
        for (const auto& c : r.choices) row.push_back(c.display);
        for (const auto& t : r.totals) row.push_back((t.currency ? "$" : "") + t.display());
        row.push_back(std::to_string(r.num_occurrences));
        row.push_back(r.feasible ? "yes" : "no");
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = display_width(header[c]);
        for (const auto& row : rows) widths[c] = std::max(widths[c], display_width(row[c]));
    }

    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += pad(row[c], widths[c], c >= num_groups && c + 1 < row.size());
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };

    std::string out = emit(header);
    std::size_t rule = 0;
    for (auto w : widths) rule += w;
    rule += 2 * (widths.size() - 1);
    out += std::string(rule, '-') + "\n";
    for (const auto& row : rows) out += emit(row);
    return out;
}

std::size_t display_width(std::string_view text) {
    std::size_t width = 0;
    for (unsigned char c : text) {
        if ((c & 0xC0) != 0x80) ++width;
    }
    return width;
}

}  // namespace cqmkit
