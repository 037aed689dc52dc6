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

#include "cqmkit/qubo.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "cqmkit/exceptions.hpp"
#include "cqmkit/model_json.hpp"

namespace cqmkit {

namespace {

constexpr double kIntegralTolerance = 1e-6;
// Products of scaled coefficients are exact in a double below this bound.
constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

std::int64_t scaled_integer(double coefficient, std::int64_t scale, const std::string& constraint,
                            const std::string& term) {
    double scaled = coefficient * static_cast<double>(scale);
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > kIntegralTolerance * std::max(1.0, std::abs(scaled)) ||
        std::abs(rounded) > kMaxExactInteger) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "constraint '" << constraint << "': coefficient " << coefficient << " of " << term
            << " is not integral at scale " << scale;
        throw InvalidModel(msg.str());
    }
    return static_cast<std::int64_t>(rounded);
}

// Accumulates P * (sum_k c_k y_k + c0)^2 into `form` using x*x == x.
void add_squared(QuadraticExpression& form, const std::vector<std::pair<Index, double>>& terms,
                 double constant, double weight) {
    for (std::size_t a = 0; a < terms.size(); ++a) {
        const auto& [u, cu] = terms[a];
        form.add_linear(u, weight * (cu * cu + 2.0 * constant * cu));
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
            const auto& [v, cv] = terms[b];
            form.add_quadratic(std::min(u, v), std::max(u, v), weight * 2.0 * cu * cv);
        }
    }
    form.add_offset(weight * constant * constant);
}

}  // namespace

void PenaltyPolicy::validate() const {
    if (mode == Mode::fixed) {
        if (!(fixed_weight > 0.0) || !std::isfinite(fixed_weight)) {
            throw InvalidModel("fixed penalty weight must be finite and positive");
        }
    } else if (!(auto_multiplier >= 1.0) || !std::isfinite(auto_multiplier)) {
        throw InvalidModel("auto penalty multiplier must be finite and >= 1");
    }
}

SlackEncoding slack_bits(const Constraint& constraint, std::int64_t scale) {
    if (constraint.sense != Sense::LE) {
        throw InvalidModel("slack encoding needs an LE constraint; '" + constraint.name +
                           "' is " + std::string(to_string(constraint.sense)));
    }
    if (scale < 1) {
        throw InvalidModel("slack scale must be a positive integer");
    }

    SlackEncoding enc;
    enc.scaled_min = scaled_integer(constraint.expr.offset(), scale, constraint.name, "the offset");
    enc.scaled_max = enc.scaled_min;
    for (const auto& [v, bias] : constraint.expr.linear()) {
        auto k = scaled_integer(bias, scale, constraint.name, "x" + std::to_string(v));
        (k < 0 ? enc.scaled_min : enc.scaled_max) += k;
    }
    for (const auto& [uv, bias] : constraint.expr.quadratic()) {
        auto k = scaled_integer(bias, scale, constraint.name,
                                "x" + std::to_string(uv.first) + "*x" + std::to_string(uv.second));
        (k < 0 ? enc.scaled_min : enc.scaled_max) += k;
    }

    enc.range = std::max<std::int64_t>(-enc.scaled_min, 0);
    if (enc.range > 0) {
        auto k = static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(enc.range)));
        for (std::size_t b = 0; b + 1 < k; ++b) enc.bit_weights.push_back(std::int64_t{1} << b);
        enc.bit_weights.push_back(enc.range - ((std::int64_t{1} << (k - 1)) - 1));
    }
    return enc;
}

double objective_spread(const QuadraticExpression& objective) {
    double spread = 0.0;
    for (const auto& [_, bias] : objective.linear()) spread += std::abs(bias);
    for (const auto& [_, bias] : objective.quadratic()) spread += std::abs(bias);
    return spread;
}

std::map<std::string, double> auto_penalty(const CqmModel& model, double multiplier) {
    if (!(multiplier >= 1.0) || !std::isfinite(multiplier)) {
        throw InvalidModel("auto penalty multiplier must be finite and >= 1");
    }
    double spread = objective_spread(model.objective());
    double weight = spread > 0.0 ? multiplier * spread : 1.0;
    std::map<std::string, double> weights;
    for (const auto& c : model.constraints()) weights[c.name] = weight;
    return weights;
}

QuboModel to_qubo(const CqmModel& model, const PenaltyPolicy& policy) {
    policy.validate();

    QuboModel qubo;
    qubo.num_original = model.num_variables();
    qubo.num_vars = model.num_variables();
    qubo.form = model.objective();
    if (!qubo.form.is_finite()) {
        throw InvalidModel("objective has a non-finite coefficient");
    }

    if (policy.mode == PenaltyPolicy::Mode::automatic) {
        qubo.penalty_weights = auto_penalty(model, policy.auto_multiplier);
    } else {
        for (const auto& c : model.constraints()) qubo.penalty_weights[c.name] = policy.fixed_weight;
    }

    for (const auto& original : model.constraints()) {
        if (!original.expr.is_finite()) {
            throw InvalidModel("constraint '" + original.name + "' has a non-finite coefficient");
        }
        if (!original.expr.is_linear()) {
            throw InvalidModel("constraint '" + original.name +
                               "' has quadratic terms; its squared penalty would be quartic");
        }
        Constraint con = original;
        if (con.sense == Sense::GE) {
            con.expr = con.expr.scaled(-1.0);
            con.sense = Sense::LE;
        }
        const double weight = qubo.penalty_weights.at(con.name);

        if (con.sense == Sense::EQ) {
            std::vector<std::pair<Index, double>> terms(con.expr.linear().begin(),
                                                        con.expr.linear().end());
            add_squared(qubo.form, terms, con.expr.offset(), weight);
            continue;
        }

        SlackEncoding enc = slack_bits(con, con.scale);
        if (enc.scaled_max <= 0) {
            qubo.warnings.push_back({con.name, "redundant: satisfied by every assignment"});
            continue;
        }
        if (enc.scaled_min > 0) {
            qubo.warnings.push_back({con.name, "unsatisfiable: violated by every assignment"});
        }

        std::vector<std::pair<Index, double>> terms;
        for (const auto& [v, bias] : con.expr.linear()) {
            terms.emplace_back(v, static_cast<double>(
                                      scaled_integer(bias, con.scale, con.name, "x" + std::to_string(v))));
        }
        for (std::size_t b = 0; b < enc.num_bits(); ++b) {
            Index s = qubo.num_vars++;
            qubo.provenance.emplace(s, SlackBit{con.name, b, enc.bit_weights[b]});
            terms.emplace_back(s, static_cast<double>(enc.bit_weights[b]));
        }
        double constant = static_cast<double>(
            scaled_integer(con.expr.offset(), con.scale, con.name, "the offset"));
        double scale = static_cast<double>(con.scale);
        add_squared(qubo.form, terms, constant, weight / (scale * scale));
    }

    qubo.form = normalize(qubo.form);
    return qubo;
}

double qubo_energy(const QuboModel& qubo, const Assignment& x) {
    if (x.size() != qubo.num_vars) {
        throw DimensionMismatch("QUBO assignment has " + std::to_string(x.size()) +
                                " bits, expected " + std::to_string(qubo.num_vars));
    }
    return evaluate(qubo.form, x);
}

DecodedSolution decode(const QuboModel& qubo, const Assignment& solution) {
    if (solution.size() != qubo.num_vars) {
        throw DimensionMismatch("QUBO solution has " + std::to_string(solution.size()) +
                                " bits, expected " + std::to_string(qubo.num_vars));
    }
    DecodedSolution out;
    out.assignment = solution.prefix(qubo.num_original);
    for (const auto& [index, bit] : qubo.provenance) {
        auto& value = out.slack_values[bit.constraint];
        if (solution[index]) value += bit.weight;
    }
    return out;
}

bool provenance_matches(const QuboModel& qubo, const CqmModel& model) {
    if (qubo.num_original != model.num_variables() || qubo.num_vars < qubo.num_original) {
        return false;
    }
    if (qubo.provenance.size() != qubo.num_slack()) return false;
    for (Index i = qubo.num_original; i < qubo.num_vars; ++i) {
        auto it = qubo.provenance.find(i);
        if (it == qubo.provenance.end()) return false;
        const auto* con = model.find_constraint(it->second.constraint);
        if (con == nullptr || con->sense == Sense::EQ) return false;
    }
    if (qubo.penalty_weights.size() != model.num_constraints()) return false;
    for (const auto& c : model.constraints()) {
        if (!qubo.penalty_weights.contains(c.name)) return false;
    }
    return qubo.form.span_size() <= qubo.num_vars;
}

nlohmann::json qubo_to_json(const QuboModel& qubo) {
    using nlohmann::json;
    json doc = expression_to_json(qubo.form);
    doc["num_vars"] = qubo.num_vars;
    doc["num_original"] = qubo.num_original;
    json provenance = json::array();
    for (const auto& [index, bit] : qubo.provenance) {
        provenance.push_back({{"index", index},
                              {"constraint", bit.constraint},
                              {"bit", bit.bit},
                              {"weight", bit.weight}});
    }
    doc["provenance"] = std::move(provenance);
    json weights = json::object();
    for (const auto& [name, w] : qubo.penalty_weights) weights[name] = w;
    doc["penalty_weights"] = std::move(weights);
    json warnings = json::array();
    for (const auto& w : qubo.warnings) {
        warnings.push_back({{"constraint", w.constraint}, {"message", w.message}});
    }
    doc["warnings"] = std::move(warnings);
    return doc;
}

QuboModel qubo_from_json(const nlohmann::json& doc) {
    try {
        QuboModel qubo;
        qubo.form = expression_from_json(doc);
        qubo.num_vars = doc.at("num_vars").get<std::size_t>();
        qubo.num_original = doc.at("num_original").get<std::size_t>();
        for (const auto& p : doc.at("provenance")) {
            qubo.provenance.emplace(p.at("index").get<Index>(),
                                    SlackBit{p.at("constraint").get<std::string>(),
                                             p.at("bit").get<std::size_t>(),
                                             p.at("weight").get<std::int64_t>()});
        }
        for (const auto& [name, w] : doc.at("penalty_weights").items()) {
            qubo.penalty_weights[name] = w.get<double>();
        }
        if (doc.contains("warnings")) {
            for (const auto& w : doc.at("warnings")) {
                qubo.warnings.push_back(
                    {w.at("constraint").get<std::string>(), w.at("message").get<std::string>()});
            }
        }
        if (qubo.num_original > qubo.num_vars || qubo.form.span_size() > qubo.num_vars) {
            throw InputError("QUBO document references variables beyond num_vars");
        }
        return qubo;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed QUBO document: ") + e.what());
    }
}

std::string qubo_to_coo(const QuboModel& qubo) {
    std::map<std::pair<Index, Index>, double> entries;
    for (const auto& [v, bias] : qubo.form.linear()) entries[{v, v}] = bias;
    for (const auto& [uv, bias] : qubo.form.quadratic()) entries[uv] = bias;

    std::string out;
    char line[96];
    std::snprintf(line, sizeof(line), "# num_vars %zu\n", qubo.num_vars);
    out += line;
    std::snprintf(line, sizeof(line), "# offset %.17g\n", qubo.form.offset());
    out += line;
    for (const auto& [ij, value] : entries) {
        std::snprintf(line, sizeof(line), "%zu %zu %.17g\n", ij.first, ij.second, value);
        out += line;
    }
    return out;
}

}  // namespace cqmkit
