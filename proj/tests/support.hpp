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
#include <random>
#include <string>
#include <vector>

#include "cqmkit/catalog.hpp"
#include "cqmkit/choice_model.hpp"
#include "cqmkit/model.hpp"
#include "cqmkit/qubo.hpp"

namespace cqmkit::testing {

std::string read_file(const std::string& path);
std::string menu_csv_path();
std::string menu_csv();
ChoiceCatalog menu_catalog();

/// Minimise price under a calorie cap.
CqmModel menu_model(double calorie_limit);

struct MenuMeal {
    std::vector<std::string> items;  // waffle, smear, chicken, drizzle, side
    std::int64_t price_cents;
    std::int64_t calorie_tenths;
};

/// The five published optimal meals.
const std::vector<MenuMeal>& published_meals();

/// Assignment selecting the named items, resolved by item name within each group.
Assignment meal_assignment(const ChoiceCatalog& catalog, const std::vector<std::string>& items);

// Oracles below work from the raw coefficient maps and bit masks; they share no
// code with the library's evaluation, feasibility or enumeration paths.

double oracle_value(const QuadraticExpression& expr, std::uint64_t mask);

bool oracle_satisfied(const Constraint& constraint, std::uint64_t mask, double eps = 1e-9);

struct CqmOracle {
    std::optional<double> optimum;      // best feasible objective
    std::vector<std::uint64_t> optimal;  // every feasible mask attaining it
    std::uint64_t feasible_count = 0;
};

/// Exhaustive scan over all 2^n assignments (n <= 24).
CqmOracle brute_force_cqm(const CqmModel& model);

struct QuboOracle {
    double minimum = 0.0;
    std::uint64_t argmin = 0;  // lowest mask attaining the minimum
};

/// Exhaustive scan over original and slack bits (num_vars <= 24).
QuboOracle brute_force_qubo(const QuboModel& qubo);

/// min over slack settings of the QUBO energy with the original bits fixed.
double oracle_min_over_slack(const QuboModel& qubo, std::uint64_t original_mask);

Assignment mask_to_assignment(std::uint64_t mask, std::size_t n);
std::uint64_t assignment_to_mask(const Assignment& x);

struct RandomShape {
    std::size_t max_variables = 10;
    std::size_t max_one_hot_groups = 2;
    std::size_t max_inequalities = 1;
    bool quadratic_objective = true;
};

/// Small random CQM with integer inequality coefficients (scale 1).
CqmModel random_cqm(std::mt19937_64& rng, const RandomShape& shape = {});

}  // namespace cqmkit::testing
