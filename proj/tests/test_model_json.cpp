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
#include "cqmkit/exceptions.hpp"
#include "cqmkit/model_json.hpp"
#include "support.hpp"

namespace cqmkit {

TEST_CASE("model documents round-trip") {
    SECTION("the menu model") {
        auto model = testing::menu_model(700.0);
        auto doc = model_to_json(model);
        CHECK(doc["variables"].size() == 33);
        CHECK(doc["constraints"].size() == 6);
        CHECK(model_from_json(doc) == model);
        CHECK(model_from_json(nlohmann::json::parse(doc.dump())) == model);
    }
    SECTION("random models") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            auto model = testing::random_cqm(rng);
            REQUIRE(model_from_json(nlohmann::json::parse(model_to_json(model).dump())) == model);
        }
    }
    SECTION("unknown top-level keys are ignored") {
        auto doc = model_to_json(testing::menu_model(700.0));
        doc["catalog"] = {{"anything", 1}};
        CHECK_NOTHROW(model_from_json(doc));
    }
}

TEST_CASE("malformed model documents are input errors") {
    auto doc = model_to_json(testing::menu_model(700.0));
    SECTION("missing variables") {
        doc.erase("variables");
        CHECK_THROWS_AS(model_from_json(doc), Error);
    }
    SECTION("unknown sense") {
        doc["constraints"][0]["sense"] = "<";
        CHECK_THROWS_AS(model_from_json(doc), Error);
    }
    SECTION("variable out of range") {
        doc["objective"]["linear"]["99"] = 1.0;
        CHECK_THROWS_AS(model_from_json(doc), Error);
    }
}

TEST_CASE("expression documents") {
    QuadraticExpression expr;
    expr.add_linear(0, 1.5).add_quadratic(0, 2, -2.0).add_offset(3.0);
    auto doc = expression_to_json(expr);
    CHECK(doc["offset"] == 3.0);
    CHECK(doc["linear"]["0"] == 1.5);
    CHECK(doc["quadratic"] == nlohmann::json::array({nlohmann::json::array({0, 2, -2.0})}));
    CHECK(expression_from_json(doc) == expr);
}

}  // namespace cqmkit
