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

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "cqmkit/exact_solver.hpp"
#include "cqmkit/exceptions.hpp"
#include "support.hpp"

namespace cqmkit {

using testing::assignment_to_mask;
using testing::brute_force_cqm;
using testing::mask_to_assignment;
using testing::oracle_satisfied;
using testing::oracle_value;

SCENARIO("exact solving of the menu") {
    auto catalog = testing::menu_catalog();

    GIVEN("a 700 kcal cap") {
        auto model = testing::menu_model(700.0);
        const auto start = std::chrono::steady_clock::now();
        auto outcome = enumerate_exact(model, 10);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        THEN("the cartesian walk visits every one-hot combination once") {
            CHECK(outcome.mode == EnumerationMode::cartesian);
            CHECK(outcome.visited == 4 * 8 * 7 * 7 * 7);
            CHECK(elapsed < std::chrono::seconds(1));
        }
        THEN("the cheapest meal costs 21.75 and all published meals are among the ties") {
            const auto& set = outcome.samples;
            REQUIRE(set.has_feasible());
            CHECK(set.samples.front().energy == Catch::Approx(21.75).margin(1e-9));
            auto optimal = set.optimal_samples();
            std::set<Assignment> tied;
            for (const auto* s : optimal) tied.insert(s->assignment);
            for (const auto& meal : testing::published_meals()) {
                CHECK(tied.count(testing::meal_assignment(catalog, meal.items)) == 1);
            }
        }
        THEN("the tie set is exactly what an independent scan finds") {
            std::size_t ties = 0;
            double best = std::numeric_limits<double>::infinity();
            for_each_one_hot_candidate(one_hot_structure(model), [&](std::span<const Index> active) {
                auto mask = assignment_to_mask(Assignment::with_ones(33, active));
                if (!oracle_satisfied(*model.find_constraint("bound:calories"), mask)) return;
                double price = oracle_value(model.objective(), mask);
                if (price < best - 1e-9) {
                    best = price;
                    ties = 1;
                } else if (price <= best + 1e-9) {
                    ++ties;
                }
            });
            CHECK(best == Catch::Approx(21.75));
            CHECK(outcome.samples.optimal_samples().size() == ties);
        }
    }

    GIVEN("a 500 kcal cap") {
        auto set = solve_exact(testing::menu_model(500.0), 10);
        THEN("nothing is feasible and the least-violating meal has 542.9 kcal") {
            CHECK_FALSE(set.has_feasible());
            const auto* least = set.least_violating();
            REQUIRE(least != nullptr);
            REQUIRE(least->violations.size() == 1);
            CHECK(least->violations[0].constraint == "bound:calories");
            CHECK(least->violations[0].magnitude == Catch::Approx(42.9).margin(1e-9));
            const auto cal = *catalog.attribute_index("calories");
            std::int64_t tenths = 0;
            for (auto i : least->assignment.ones()) tenths += catalog.items()[i].values[cal];
            CHECK(tenths == 5429);
            CHECK(set.size() == 10);
        }
    }
}

SCENARIO("exact solving of tiny models") {
    GIVEN("objective x1 and no constraints") {
        CqmBuilder builder;
        builder.add_variable("x1");
        QuadraticExpression objective;
        objective.add_linear(0, 1.0);
        builder.set_objective(objective);
        auto set = solve_exact(std::move(builder).build(), 1);
        THEN("the optimum is all zeros at energy 0") {
            REQUIRE(set.size() >= 1);
            CHECK(set.samples.front().assignment == Assignment(1));
            CHECK(set.samples.front().energy == 0.0);
            CHECK(set.backend_name == "exact");
        }
    }
    GIVEN("a model too large for either mode") {
        CqmBuilder builder;
        for (int i = 0; i < 40; ++i) builder.add_variable("v" + std::to_string(i));
        auto model = std::move(builder).build();
        THEN("a size-limit error names both modes") {
            CHECK_THROWS_AS(solve_exact(model, 1), SizeLimitError);
            CHECK_THROWS_WITH(solve_exact(model, 1),
                              Catch::Matchers::ContainsSubstring("full") &&
                                  Catch::Matchers::ContainsSubstring("cartesian"));
        }
    }
    THEN("top_k must be positive") {
        CHECK_THROWS_AS(solve_exact(testing::menu_model(700.0), 0), InputError);
    }
}

TEST_CASE("one-hot structure detection") {
    auto model = testing::menu_model(700.0);
    auto structure = one_hot_structure(model);
    REQUIRE(structure.groups.size() == 5);
    std::vector<std::size_t> sizes;
    for (const auto& g : structure.groups) sizes.push_back(g.size());
    CHECK(sizes == std::vector<std::size_t>{4, 8, 7, 7, 7});
    CHECK(structure.free_variables.empty());
    CHECK(structure.cartesian_size() == 10976);

    std::uint64_t visited = 0;
    std::set<std::vector<Index>> distinct;
    for_each_one_hot_candidate(structure, [&](std::span<const Index> active) {
        ++visited;
        distinct.emplace(active.begin(), active.end());
    });
    CHECK(visited == 10976);
    CHECK(distinct.size() == 10976);
}

TEST_CASE("the exact solver matches a brute-force oracle", "[property]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        auto model = testing::random_cqm(rng, {trial % 3 == 0 ? 16u : 10u, 3, 2, true});
        const std::size_t n = model.num_variables();
        auto oracle = brute_force_cqm(model);
        auto outcome = enumerate_exact(model, 5);
        const auto& set = outcome.samples;

        REQUIRE(set.has_feasible() == oracle.optimum.has_value());
        for (const auto& s : set.samples) {
            REQUIRE(s.energy == evaluate(model.objective(), s.assignment));
            if (s.feasible) REQUIRE(s.energy >= *oracle.optimum - 1e-9);
        }
        if (oracle.optimum) {
            REQUIRE(set.samples.front().energy == Catch::Approx(*oracle.optimum).margin(1e-9));
            std::set<std::uint64_t> expected(oracle.optimal.begin(), oracle.optimal.end());
            std::set<std::uint64_t> got;
            for (const auto* s : set.optimal_samples()) got.insert(assignment_to_mask(s->assignment));
            REQUIRE(got == expected);
            REQUIRE(outcome.feasible_count == oracle.feasible_count);
        } else {
            double least = std::numeric_limits<double>::infinity();
            // Cartesian mode only ranks assignments that honour every one-hot group.
            const auto groups = one_hot_structure(model).group_constraints;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                bool candidate = outcome.mode == EnumerationMode::full ||
                                 std::all_of(groups.begin(), groups.end(), [&](std::size_t c) {
                                     return oracle_satisfied(model.constraints()[c], mask);
                                 });
                if (!candidate) continue;
                least = std::min(least, is_feasible(model, mask_to_assignment(mask, n)).total_violation());
            }
            REQUIRE(set.least_violating() != nullptr);
            REQUIRE(set.least_violating()->total_violation() == Catch::Approx(least).margin(1e-9));
        }
    }
}

TEST_CASE("cartesian and full enumeration agree") {
    std::mt19937_64 rng(17);
    ExactLimits no_cartesian;
    no_cartesian.max_cartesian = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto model = testing::random_cqm(rng, {12, 3, 1, true});
        if (one_hot_structure(model).groups.empty()) continue;
        auto a = enumerate_exact(model, 3);
        auto b = enumerate_exact(model, 3, no_cartesian);
        REQUIRE(a.mode == EnumerationMode::cartesian);
        REQUIRE(b.mode == EnumerationMode::full);
        REQUIRE(b.visited == (std::uint64_t{1} << model.num_variables()));
        REQUIRE(a.samples.has_feasible() == b.samples.has_feasible());
        if (a.samples.has_feasible()) {
            REQUIRE(a.samples.optimal_samples().size() == b.samples.optimal_samples().size());
            REQUIRE(a.samples.samples.front().assignment == b.samples.samples.front().assignment);
        }
    }
}

}  // namespace cqmkit
