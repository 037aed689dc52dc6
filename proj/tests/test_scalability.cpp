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

#include <chrono>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "cqmkit/exact_solver.hpp"
#include "support.hpp"

namespace cqmkit {

namespace {

struct Generated {
    std::string csv;
    std::vector<std::vector<std::pair<int, int>>> groups;  // (cents, grams) per item
};

Generated generate(std::mt19937_64& rng, const std::vector<int>& sizes) {
    std::uniform_int_distribution<int> cents(50, 1500);
    std::uniform_int_distribution<int> grams(10, 120);
    Generated g;
    std::ostringstream csv;
    csv << "name,item_type,price,weight\n";
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        g.groups.emplace_back();
        for (int i = 0; i < sizes[k]; ++i) {
            int c = cents(rng);
            int w = grams(rng);
            g.groups.back().emplace_back(c, w);
            csv << "item" << k << "_" << i << ",slot" << k << "," << c / 100 << "." << (c % 100) / 10
                << c % 10 << "," << w << "\n";
        }
    }
    g.csv = csv.str();
    return g;
}

// Multiple-choice knapsack by dynamic programming over total weight.
std::optional<int> knapsack_min_cents(const Generated& g, int capacity) {
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> best(capacity + 1, kInf);
    best[0] = 0;
    for (const auto& group : g.groups) {
        std::vector<int> next(capacity + 1, kInf);
        for (int w = 0; w <= capacity; ++w) {
            if (best[w] >= kInf) continue;
            for (const auto& [c, iw] : group) {
                if (w + iw <= capacity) next[w + iw] = std::min(next[w + iw], best[w] + c);
            }
        }
        best = std::move(next);
    }
    int result = *std::min_element(best.begin(), best.end());
    if (result >= kInf) return std::nullopt;
    return result;
}

}  // namespace

TEST_CASE("exact solving scales to a million combinations", "[scalability]") {
    std::mt19937_64 rng(2026);
    const std::vector<std::vector<int>> shapes{
        {10, 10, 10},
        {10, 10, 10, 10, 10},
        {10, 10, 10, 10, 10, 10},
        {25, 20, 20, 10, 10},
        {4, 8, 7, 7, 7, 4, 2},
    };
    for (const auto& sizes : shapes) {
        auto g = generate(rng, sizes);
        auto catalog = parse_catalog(g.csv);
        const int capacity = 45 * static_cast<int>(sizes.size());
        ChoiceSpec spec;
        spec.bounds.push_back({"weight", Sense::LE, static_cast<double>(capacity)});
        auto model = build_model(catalog, spec);

        std::uint64_t combinations = 1;
        for (int s : sizes) combinations *= static_cast<std::uint64_t>(s);
        REQUIRE(combinations <= 1'000'000);

        const auto start = std::chrono::steady_clock::now();
        auto outcome = enumerate_exact(model, 5);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        CAPTURE(combinations, seconds);
        CHECK(outcome.mode == EnumerationMode::cartesian);
        CHECK(outcome.visited == combinations);
        CHECK(seconds < 60.0);

        auto oracle = knapsack_min_cents(g, capacity);
        REQUIRE(outcome.samples.has_feasible() == oracle.has_value());
        if (oracle) {
            CHECK(std::llround(outcome.samples.samples.front().energy * 100.0) == *oracle);
        }
    }
}

}  // namespace cqmkit
