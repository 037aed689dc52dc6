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

#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "cqmkit/choice_model.hpp"
#include "cqmkit/exceptions.hpp"
#include "cqmkit/sample_set.hpp"
#include "support.hpp"

namespace cqmkit {

using Catch::Matchers::ContainsSubstring;

SCENARIO("building the menu model") {
    auto catalog = testing::menu_catalog();
    auto model = testing::menu_model(700.0);

    THEN("there is one variable per item and one constraint per group and bound") {
        CHECK(model.num_variables() == 33);
        CHECK(model.num_constraints() == 6);
        CHECK(model.label(0) == "The Classic");
        CHECK(model.find_variable("drizzle/Maple Syrup").has_value());
    }
    THEN("the objective is the price column") {
        CHECK(model.objective().linear(0) == 8.0);
        CHECK(model.objective().linear(1) == 8.0);
        CHECK(model.objective().linear(2) == 9.0);
        CHECK(model.objective().offset() == 0.0);
    }
    THEN("the waffle one-hot sums the first four items minus one") {
        const auto* con = model.find_constraint("one_hot:waffle");
        REQUIRE(con != nullptr);
        CHECK(con->sense == Sense::EQ);
        CHECK(con->kind == ConstraintKind::one_hot);
        CHECK(con->expr.linear().size() == 4);
        for (Index v = 0; v < 4; ++v) CHECK(con->expr.linear(v) == 1.0);
        CHECK(con->expr.offset() == -1.0);
    }
    THEN("the calorie bound carries the calorie column, the limit and scale 10") {
        const auto* con = model.find_constraint("bound:calories");
        REQUIRE(con != nullptr);
        CHECK(con->sense == Sense::LE);
        CHECK(con->kind == ConstraintKind::resource_bound);
        CHECK(con->scale == 10);
        CHECK(con->expr.linear(0) == 358.0);
        CHECK(con->expr.linear(1) == 284.4);
        CHECK(con->expr.linear(2) == 244.9);
        CHECK(con->expr.offset() == -700.0);
    }
}

SCENARIO("other specs") {
    auto catalog = testing::menu_catalog();

    WHEN("maximizing calories under a price floor") {
        ChoiceSpec spec;
        spec.objective_attribute = "calories";
        spec.direction = Direction::maximize;
        spec.bounds.push_back(parse_bound("price >= 20"));
        auto model = build_model(catalog, spec);
        THEN("the objective is negated and the GE bound becomes LE") {
            CHECK(model.objective().linear(0) == -358.0);
            const auto* con = model.find_constraint("bound:price");
            REQUIRE(con != nullptr);
            CHECK(con->sense == Sense::LE);
            CHECK(con->expr.linear(0) == -8.0);
            CHECK(con->expr.offset() == 20.0);
            CHECK(con->scale == 100);
        }
    }
    WHEN("the same attribute is bounded twice") {
        ChoiceSpec spec;
        spec.bounds = {parse_bound("calories<=900"), parse_bound("calories>=400")};
        auto model = build_model(catalog, spec);
        THEN("constraint names stay unique") {
            CHECK(model.find_constraint("bound:calories") != nullptr);
            CHECK(model.find_constraint("bound:calories#2") != nullptr);
        }
    }
    WHEN("an attribute is unknown") {
        ChoiceSpec spec;
        spec.bounds = {parse_bound("protein<=10")};
        THEN("building fails") { CHECK_THROWS_WITH(build_model(catalog, spec), ContainsSubstring("protein")); }
        spec.bounds.clear();
        spec.objective_attribute = "protein";
        THEN("so does an unknown objective") { CHECK_THROWS_AS(build_model(catalog, spec), InputError); }
    }
}

TEST_CASE("bound parsing") {
    CHECK(parse_bound("calories<=700") == Bound{"calories", Sense::LE, 700.0});
    CHECK(parse_bound(" protein >= 20.5 ") == Bound{"protein", Sense::GE, 20.5});
    CHECK_THROWS_AS(parse_bound("calories<700"), InputError);
    CHECK_THROWS_AS(parse_bound("<=700"), InputError);
    CHECK_THROWS_AS(parse_bound("calories<=lots"), InputError);
    CHECK_THROWS_AS(parse_bound("calories==700"), InputError);
}

TEST_CASE("spec documents round-trip") {
    ChoiceSpec spec;
    spec.objective_attribute = "calories";
    spec.direction = Direction::maximize;
    spec.bounds = {parse_bound("price<=25")};
    CHECK(spec_from_json(nlohmann::json::parse(spec_to_json(spec).dump())) == spec);
}

SCENARIO("describing solutions") {
    auto catalog = testing::menu_catalog();
    auto model = testing::menu_model(700.0);

    GIVEN("each published meal") {
        THEN("the report names its items and matches the published totals exactly") {
            for (const auto& meal : testing::published_meals()) {
                auto x = testing::meal_assignment(catalog, meal.items);
                auto report = describe_solution(catalog, model, make_sample(model, x));
                REQUIRE(report.choices.size() == 5);
                for (std::size_t g = 0; g < 5; ++g) {
                    CHECK(report.choices[g].display == meal.items[g]);
                    CHECK(report.choices[g].item.has_value());
                    CHECK(report.choices[g].note.empty());
                }
                CHECK(report.total("price")->minor_units == meal.price_cents);
                CHECK(report.total("calories")->minor_units == meal.calorie_tenths);
                CHECK(report.total("price")->display() == "21.75");
                CHECK(report.feasible);
                CHECK(report.objective == Catch::Approx(21.75));
            }
        }
    }
    GIVEN("the all-zeros assignment") {
        auto report = describe_solution(catalog, model, make_sample(model, Assignment(33)));
        THEN("every group shows a dash and all five one-hots are flagged") {
            for (const auto& choice : report.choices) {
                CHECK(choice.display == "—");
                CHECK_FALSE(choice.item.has_value());
                CHECK_FALSE(choice.note.empty());
            }
            CHECK(report.total("price")->minor_units == 0);
            CHECK(report.total("calories")->minor_units == 0);
            CHECK(report.violations.size() == 5);
            CHECK_FALSE(report.feasible);
        }
    }
    GIVEN("a sample for a different model size") {
        THEN("it is a dimension error") {
            Sample bad;
            bad.assignment = Assignment(3);
            CHECK_THROWS_AS(describe_solution(catalog, model, bad), DimensionMismatch);
        }
    }
    GIVEN("a maximization model") {
        ChoiceSpec spec;
        spec.objective_attribute = "calories";
        spec.direction = Direction::maximize;
        auto max_model = build_model(catalog, spec);
        auto x = testing::meal_assignment(catalog, testing::published_meals()[0].items);
        auto report = describe_solution(catalog, max_model, make_sample(max_model, x), Direction::maximize);
        THEN("the reported objective is un-negated") { CHECK(report.objective == Catch::Approx(620.4)); }
    }
}

TEST_CASE("attribute totals agree with the model expressions", "[property]") {
    auto catalog = testing::menu_catalog();
    auto model = testing::menu_model(700.0);
    const auto* calories = model.find_constraint("bound:calories");
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        auto x = testing::mask_to_assignment(rng() & ((std::uint64_t{1} << 33) - 1), 33);
        auto report = describe_solution(catalog, model, make_sample(model, x));
        REQUIRE(report.total("price")->value() ==
                Catch::Approx(evaluate(model.objective(), x)).margin(1e-9));
        REQUIRE(report.total("calories")->value() ==
                Catch::Approx(evaluate(calories->expr, x) + 700.0).margin(1e-9));
    }
}

TEST_CASE("meal tables") {
    auto catalog = testing::menu_catalog();
    auto model = testing::menu_model(700.0);
    auto x = testing::meal_assignment(catalog, testing::published_meals()[0].items);
    auto table = render_meal_table(catalog, {describe_solution(catalog, model, make_sample(model, x))});
    CHECK_THAT(table, ContainsSubstring("Waffle"));
    CHECK_THAT(table, ContainsSubstring("Sautéed Squash & Onions"));
    CHECK_THAT(table, ContainsSubstring("$21.75"));
    CHECK_THAT(table, ContainsSubstring("620.4"));
    CHECK(display_width("Sautéed") == 7);
    CHECK(display_width("—") == 1);
}

}  // namespace cqmkit
