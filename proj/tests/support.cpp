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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace cqmkit::testing {

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string menu_csv_path() { return std::string(CQMKIT_DATA_DIR) + "/menu.csv"; }

std::string menu_csv() { return read_file(menu_csv_path()); }

ChoiceCatalog menu_catalog() { return parse_catalog(menu_csv()); }

CqmModel menu_model(double calorie_limit) {
    ChoiceSpec spec;
    spec.bounds.push_back({"calories", Sense::LE, calorie_limit});
    return build_model(menu_catalog(), spec);
}

const std::vector<MenuMeal>& published_meals() {
    static const std::vector<MenuMeal> meals{
        {{"Sweet Potato", "Orange-Honeycomb", "A chicken cutlet", "Caribbean Calypso",
          "Sautéed Squash & Onions"},
         2175, 6204},
        {{"Sweet Potato", "Peach-Apricot", "A chicken cutlet", "Caramel & Salted Cashew",
          "Collard Greens (Spicy)"},
         2175, 6124},
        {{"Sweet Potato", "Baby-Blueberry", "A chicken cutlet", "Caribbean Calypso",
          "Sautéed Squash & Onions"},
         2175, 6704},
        {{"Sweet Potato", "Peach-Apricot", "A panko-crusted chicken cutlet",
          "Caramel & Salted Cashew", "Collard Greens (Spicy)"},
         2175, 6924},
        {{"Sweet Potato", "Chocolate-Hazelnut", "A chicken cutlet", "Caramel & Salted Cashew",
          "Fresh-Cut Fruit"},
         2175, 6314},
    };
    return meals;
}

Assignment meal_assignment(const ChoiceCatalog& catalog, const std::vector<std::string>& items) {
    if (items.size() != catalog.groups().size()) throw std::invalid_argument("one item per group");
    std::vector<Index> ones;
    for (std::size_t g = 0; g < items.size(); ++g) {
        bool found = false;
        for (auto i : catalog.group_members(g)) {
            if (catalog.items()[i].name == items[g]) {
                ones.push_back(i);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("no item '" + items[g] + "'");
    }
    return Assignment::with_ones(catalog.size(), ones);
}

double oracle_value(const QuadraticExpression& expr, std::uint64_t mask) {
    auto bit = [mask](Index v) { return ((mask >> v) & 1U) != 0; };
    double total = expr.offset();
    for (const auto& [v, a] : expr.linear()) {
        if (bit(v)) total += a;
    }
    for (const auto& [pair, b] : expr.quadratic()) {
        if (bit(pair.first) && bit(pair.second)) total += b;
    }
    return total;
}

bool oracle_satisfied(const Constraint& constraint, std::uint64_t mask, double eps) {
    double lhs = oracle_value(constraint.expr, mask);
    switch (constraint.sense) {
        case Sense::EQ: return std::abs(lhs) <= eps;
        case Sense::LE: return lhs <= eps;
        case Sense::GE: return lhs >= -eps;
    }
    return false;
}

CqmOracle brute_force_cqm(const CqmModel& model) {
    const std::size_t n = model.num_variables();
    if (n > 24) throw std::invalid_argument("oracle limited to 24 variables");
    CqmOracle out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = std::all_of(model.constraints().begin(), model.constraints().end(),
                              [&](const Constraint& c) { return oracle_satisfied(c, mask); });
        if (!ok) continue;
        ++out.feasible_count;
        double value = oracle_value(model.objective(), mask);
        if (!out.optimum || value < *out.optimum - 1e-9) {
            out.optimum = value;
            out.optimal.assign(1, mask);
        } else if (std::abs(value - *out.optimum) <= 1e-9) {
            out.optimal.push_back(mask);
        }
    }
    return out;
}

QuboOracle brute_force_qubo(const QuboModel& qubo) {
    if (qubo.num_vars > 24) throw std::invalid_argument("oracle limited to 24 variables");
    QuboOracle out;
    out.minimum = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << qubo.num_vars); ++mask) {
        double value = oracle_value(qubo.form, mask);
        if (value < out.minimum) {
            out.minimum = value;
            out.argmin = mask;
        }
    }
    return out;
}

double oracle_min_over_slack(const QuboModel& qubo, std::uint64_t original_mask) {
    const std::size_t slack = qubo.num_vars - qubo.num_original;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << slack); ++s) {
        best = std::min(best, oracle_value(qubo.form, original_mask | (s << qubo.num_original)));
    }
    return best;
}

Assignment mask_to_assignment(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    return Assignment(std::move(bits));
}

std::uint64_t assignment_to_mask(const Assignment& x) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

CqmModel random_cqm(std::mt19937_64& rng, const RandomShape& shape) {
    auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    const std::size_t n = static_cast<std::size_t>(uniform(2, static_cast<int>(shape.max_variables)));
    CqmBuilder builder;
    for (std::size_t i = 0; i < n; ++i) builder.add_variable("x" + std::to_string(i));

    QuadraticExpression objective;
    for (std::size_t i = 0; i < n; ++i) objective.add_linear(i, uniform(-20, 20) / 4.0);
    if (shape.quadratic_objective) {
        for (int k = uniform(0, static_cast<int>(n)); k > 0; --k) {
            Index u = static_cast<Index>(uniform(0, static_cast<int>(n) - 1));
            Index v = static_cast<Index>(uniform(0, static_cast<int>(n) - 1));
            if (u != v) objective.add_quadratic(u, v, uniform(-12, 12) / 4.0);
        }
    }
    objective.add_offset(uniform(-5, 5));
    builder.set_objective(objective);

    // Disjoint one-hot groups over a shuffled prefix of the variables.
    std::vector<Index> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t next = 0;
    const int groups = uniform(0, static_cast<int>(shape.max_one_hot_groups));
    for (int g = 0; g < groups && next + 1 < n; ++g) {
        std::size_t size = static_cast<std::size_t>(uniform(2, 4));
        size = std::min(size, n - next);
        QuadraticExpression expr;
        for (std::size_t k = 0; k < size; ++k) expr.add_linear(order[next++], 1.0);
        expr.add_offset(-1.0);
        builder.add_constraint({"one_hot:" + std::to_string(g), expr, Sense::EQ,
                                ConstraintKind::one_hot, 1});
    }

    const int inequalities = uniform(0, static_cast<int>(shape.max_inequalities));
    for (int c = 0; c < inequalities; ++c) {
        QuadraticExpression expr;
        for (std::size_t i = 0; i < n; ++i) {
            if (uniform(0, 2) > 0) expr.add_linear(i, uniform(-3, 9));
        }
        expr.add_offset(-uniform(0, 12));
        Sense sense = uniform(0, 3) == 0 ? Sense::GE : Sense::LE;
        if (sense == Sense::GE) expr.add_offset(uniform(-6, 0));
        builder.add_constraint({"bound:" + std::to_string(c), expr, sense,
                                ConstraintKind::resource_bound, 1});
    }
    return std::move(builder).build();
}

}  // namespace cqmkit::testing
