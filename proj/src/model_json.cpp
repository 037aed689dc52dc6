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

#include "cqmkit/model_json.hpp"

#include <string>

#include "cqmkit/exceptions.hpp"

namespace cqmkit {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError(std::string("model document is missing '") + key + "'");
    }
    return doc.at(key);
}

double number(const json& value, const std::string& where) {
    if (!value.is_number()) {
        throw InputError(where + " must be a number");
    }
    return value.get<double>();
}

Index index_value(const json& value, const std::string& where) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        throw InputError(where + " must be a non-negative integer");
    }
    return value.get<Index>();
}

Index parse_index_key(const std::string& key) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(key, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != key.size() || key.front() == '-' || key.front() == '+') {
        throw InputError("linear key '" + key + "' is not a variable index");
    }
    return static_cast<Index>(v);
}

}  // namespace

json expression_to_json(const QuadraticExpression& expr) {
    json linear = json::object();
    for (const auto& [v, bias] : expr.linear()) linear[std::to_string(v)] = bias;
    json quadratic = json::array();
    for (const auto& [uv, bias] : expr.quadratic()) {
        quadratic.push_back(json::array({uv.first, uv.second, bias}));
    }
    return json{{"linear", std::move(linear)},
                {"quadratic", std::move(quadratic)},
                {"offset", expr.offset()}};
}

QuadraticExpression expression_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw InputError("expression must be a JSON object");
    }
    QuadraticExpression expr;
    if (doc.contains("linear")) {
        const auto& linear = doc.at("linear");
        if (!linear.is_object()) throw InputError("'linear' must be an object");
        for (const auto& [key, value] : linear.items()) {
            expr.add_linear(parse_index_key(key), number(value, "linear coefficient"));
        }
    }
    if (doc.contains("quadratic")) {
        const auto& quadratic = doc.at("quadratic");
        if (!quadratic.is_array()) throw InputError("'quadratic' must be an array");
        for (const auto& term : quadratic) {
            if (!term.is_array() || term.size() != 3) {
                throw InputError("quadratic terms must be [i, j, coeff] triples");
            }
            expr.add_quadratic(index_value(term[0], "quadratic index"),
                               index_value(term[1], "quadratic index"),
                               number(term[2], "quadratic coefficient"));
        }
    }
    if (doc.contains("offset")) {
        expr.set_offset(number(doc.at("offset"), "offset"));
    }
    return expr;
}

json model_to_json(const CqmModel& model) {
    json variables = json::array();
    for (const auto& v : model.variables()) {
        variables.push_back({{"index", v.index}, {"label", v.label}});
    }
    json constraints = json::array();
    for (const auto& c : model.constraints()) {
        constraints.push_back({{"name", c.name},
                               {"sense", std::string(to_string(c.sense))},
                               {"kind", std::string(to_string(c.kind))},
                               {"scale", c.scale},
                               {"expr", expression_to_json(c.expr)}});
    }
    return json{{"variables", std::move(variables)},
                {"objective", expression_to_json(model.objective())},
                {"constraints", std::move(constraints)},
                {"feasibility_tolerance", model.tolerance()}};
}

CqmModel model_from_json(const json& doc) {
    CqmBuilder builder;

    const auto& variables = require(doc, "variables");
    if (!variables.is_array()) throw InputError("'variables' must be an array");
    for (std::size_t i = 0; i < variables.size(); ++i) {
        const auto& v = variables[i];
        Index index = index_value(require(v, "index"), "variable index");
        if (index != i) {
            throw InputError("variable indices must be contiguous from 0; found " +
                             std::to_string(index) + " at position " + std::to_string(i));
        }
        const auto& label = require(v, "label");
        if (!label.is_string()) throw InputError("variable label must be a string");
        builder.add_variable(label.get<std::string>());
    }

    builder.set_objective(expression_from_json(require(doc, "objective")));

    if (doc.contains("constraints")) {
        const auto& constraints = doc.at("constraints");
        if (!constraints.is_array()) throw InputError("'constraints' must be an array");
        for (const auto& c : constraints) {
            Constraint con;
            const auto& name = require(c, "name");
            if (!name.is_string()) throw InputError("constraint name must be a string");
            con.name = name.get<std::string>();
            const auto& sense = require(c, "sense");
            if (!sense.is_string()) throw InputError("constraint sense must be a string");
            con.sense = parse_sense(sense.get<std::string>());
            if (c.contains("kind")) {
                if (!c.at("kind").is_string()) throw InputError("constraint kind must be a string");
                con.kind = parse_kind(c.at("kind").get<std::string>());
            }
            if (c.contains("scale")) {
                const auto& scale = c.at("scale");
                if (!scale.is_number_integer() || scale.get<long long>() < 1) {
                    throw InputError("constraint scale must be a positive integer");
                }
                con.scale = scale.get<std::int64_t>();
            }
            con.expr = expression_from_json(require(c, "expr"));
            builder.add_constraint(std::move(con));
        }
    }

    if (doc.contains("feasibility_tolerance")) {
        builder.set_tolerance(number(doc.at("feasibility_tolerance"), "feasibility_tolerance"));
    }
    return std::move(builder).build();
}

}  // namespace cqmkit
