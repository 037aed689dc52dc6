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

#include "cqmkit/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "cqmkit/exceptions.hpp"

namespace cqmkit {

namespace {

// Dense copy of an expression for fast evaluation on an active set.
struct CompiledExpression {
    std::vector<double> linear;
    std::vector<std::vector<std::pair<Index, double>>> neighbours;
    double offset = 0.0;

    CompiledExpression(const QuadraticExpression& expr, std::size_t n)
        : linear(n, 0.0), neighbours(n), offset(expr.offset()) {
        for (const auto& [v, bias] : expr.linear()) linear[v] += bias;
        for (const auto& [uv, bias] : expr.quadratic()) {
            auto [u, v] = uv;
            if (u == v) {
                linear[u] += bias;
            } else {
                neighbours[u].emplace_back(v, bias);
                neighbours[v].emplace_back(u, bias);
            }
        }
    }

    double value(std::span<const Index> active, const std::vector<std::uint8_t>& on) const {
        double total = offset;
        for (Index a : active) {
            total += linear[a];
            for (const auto& [b, bias] : neighbours[a]) {
                if (b > a && on[b]) total += bias;
            }
        }
        return total;
    }

    // Change in value when `v` flips, given the current state (before the flip).
    double flip_delta(Index v, const std::vector<std::uint8_t>& on) const {
        double d = linear[v];
        for (const auto& [b, bias] : neighbours[v]) {
            if (on[b]) d += bias;
        }
        return on[v] ? -d : d;
    }
};

double violation_of(Sense sense, double lhs, double eps) {
    switch (sense) {
        case Sense::EQ:
            return std::max(std::abs(lhs) - eps, 0.0);
        case Sense::LE:
            return std::max(lhs - eps, 0.0);
        case Sense::GE:
            return std::max(-lhs - eps, 0.0);
    }
    return 0.0;
}

// Keeps the optimal ties, the k best feasible and (until something feasible
// turns up) the k least-violating candidates.
class Collector {
 public:
    Collector(std::size_t n, std::size_t top_k, std::size_t max_ties)
        : n_(n), top_k_(top_k), max_ties_(max_ties) {}

    void offer(double energy, double violation, const std::vector<std::uint8_t>& on) {
        if (violation == 0.0) {
            offer_feasible(energy, on);
        } else if (feasible_count_ == 0) {
            offer_infeasible(violation, energy, on);
        }
    }

    std::uint64_t feasible_count() const { return feasible_count_; }

    std::vector<Assignment> take() {
        std::set<Assignment> out;
        if (feasible_count_ > 0) {
            out.insert(ties_.begin(), ties_.end());
            while (!feasible_.empty()) {
                out.insert(std::get<1>(feasible_.top()));
                feasible_.pop();
            }
        } else {
            while (!infeasible_.empty()) {
                out.insert(std::get<2>(infeasible_.top()));
                infeasible_.pop();
            }
        }
        return {out.begin(), out.end()};
    }

 private:
    using FeasibleKey = std::tuple<double, Assignment>;
    using InfeasibleKey = std::tuple<double, double, Assignment>;

    static bool close(double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    }

    Assignment snapshot(const std::vector<std::uint8_t>& on) const {
        return Assignment(std::vector<std::uint8_t>(on.begin(), on.begin() + n_));
    }

    void offer_feasible(double energy, const std::vector<std::uint8_t>& on) {
        if (feasible_count_++ == 0) {
            std::priority_queue<InfeasibleKey>().swap(infeasible_);
            best_ = energy;
        }
        if (close(energy, best_)) {
            if (ties_.size() < max_ties_) ties_.push_back(snapshot(on));
        } else if (energy < best_) {
            best_ = energy;
            ties_.clear();
            ties_.push_back(snapshot(on));
        }
        if (feasible_.size() < top_k_ || energy < std::get<0>(feasible_.top())) {
            feasible_.emplace(energy, snapshot(on));
            if (feasible_.size() > top_k_) feasible_.pop();
        }
    }

    void offer_infeasible(double violation, double energy, const std::vector<std::uint8_t>& on) {
        if (infeasible_.size() < top_k_ ||
            std::tie(violation, energy) <
                std::tie(std::get<0>(infeasible_.top()), std::get<1>(infeasible_.top()))) {
            infeasible_.emplace(violation, energy, snapshot(on));
            if (infeasible_.size() > top_k_) infeasible_.pop();
        }
    }

    std::size_t n_;
    std::size_t top_k_;
    std::size_t max_ties_;
    std::uint64_t feasible_count_ = 0;
    double best_ = 0.0;
    std::vector<Assignment> ties_;
    std::priority_queue<FeasibleKey> feasible_;
    std::priority_queue<InfeasibleKey> infeasible_;
};

}  // namespace

std::uint64_t OneHotStructure::cartesian_size() const {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t size = 1;
    for (const auto& g : groups) {
        if (size > kMax / g.size()) return kMax;
        size *= g.size();
    }
    for (std::size_t i = 0; i < free_variables.size(); ++i) {
        if (size > kMax / 2) return kMax;
        size *= 2;
    }
    return size;
}

OneHotStructure one_hot_structure(const CqmModel& model) {
    OneHotStructure s;
    std::vector<std::uint8_t> taken(model.num_variables(), 0);
    for (std::size_t c = 0; c < model.num_constraints(); ++c) {
        const auto& con = model.constraints()[c];
        if (con.sense != Sense::EQ || !con.expr.is_linear() || con.expr.offset() != -1.0 ||
            con.expr.linear().empty()) {
            continue;
        }
        bool ok = true;
        std::vector<Index> members;
        for (const auto& [v, bias] : con.expr.linear()) {
            if (bias != 1.0 || taken[v]) ok = false;
            members.push_back(v);
        }
        if (!ok) continue;
        for (Index v : members) taken[v] = 1;
        s.groups.push_back(std::move(members));
        s.group_constraints.push_back(c);
    }
    for (Index v = 0; v < model.num_variables(); ++v) {
        if (!taken[v]) s.free_variables.push_back(v);
    }
    return s;
}

void for_each_one_hot_candidate(const OneHotStructure& structure,
                                const std::function<void(std::span<const Index>)>& visit) {
    // Digits: one per group (radix = group size), then one per free variable
    // (radix 2, digit 1 = active).
    const std::size_t num_groups = structure.groups.size();
    const std::size_t num_digits = num_groups + structure.free_variables.size();
    std::vector<std::size_t> digit(num_digits, 0);
    auto radix = [&](std::size_t d) {
        return d < num_groups ? structure.groups[d].size() : std::size_t{2};
    };
    for (const auto& g : structure.groups) {
        if (g.empty()) return;
    }

    std::vector<Index> active;
    while (true) {
        active.clear();
        for (std::size_t d = 0; d < num_groups; ++d) active.push_back(structure.groups[d][digit[d]]);
        for (std::size_t f = 0; f < structure.free_variables.size(); ++f) {
            if (digit[num_groups + f]) active.push_back(structure.free_variables[f]);
        }
        std::sort(active.begin(), active.end());
        visit(active);

        std::size_t d = num_digits;
        while (d > 0) {
            --d;
            if (++digit[d] < radix(d)) break;
            digit[d] = 0;
            if (d == 0) return;
        }
        if (num_digits == 0) return;
    }
}

ExactOutcome enumerate_exact(const CqmModel& model, std::size_t top_k, const ExactLimits& limits) {
    if (top_k == 0) {
        throw InputError("top_k must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = model.num_variables();
    const double eps = model.tolerance();

    OneHotStructure structure = one_hot_structure(model);
    const std::uint64_t cartesian = structure.cartesian_size();
    const bool use_cartesian = !structure.groups.empty() && cartesian <= limits.max_cartesian;
    if (!use_cartesian && n > limits.max_full_variables) {
        throw SizeLimitError("search space too large: full mode allows at most " +
                             std::to_string(limits.max_full_variables) + " variables (model has " +
                             std::to_string(n) + "), cartesian mode allows at most " +
                             std::to_string(limits.max_cartesian) + " one-hot combinations (" +
                             (structure.groups.empty() ? std::string("no one-hot groups found")
                                                       : std::to_string(cartesian)) +
                             ")");
    }

    CompiledExpression objective(model.objective(), n);
    std::vector<CompiledExpression> constraints;
    std::vector<Sense> senses;
    std::vector<std::uint8_t> implied(model.num_constraints(), 0);
    if (use_cartesian) {
        for (auto c : structure.group_constraints) implied[c] = 1;
    }
    for (std::size_t c = 0; c < model.num_constraints(); ++c) {
        if (implied[c]) continue;
        constraints.emplace_back(model.constraints()[c].expr, n);
        senses.push_back(model.constraints()[c].sense);
    }

    Collector collector(n, top_k, limits.max_optimal_ties);
    ExactOutcome outcome;
    std::vector<std::uint8_t> on(n, 0);

    if (use_cartesian) {
        outcome.mode = EnumerationMode::cartesian;
        for_each_one_hot_candidate(structure, [&](std::span<const Index> active) {
            for (Index a : active) on[a] = 1;
            double violation = 0.0;
            for (std::size_t c = 0; c < constraints.size(); ++c) {
                violation += violation_of(senses[c], constraints[c].value(active, on), eps);
            }
            collector.offer(objective.value(active, on), violation, on);
            for (Index a : active) on[a] = 0;
            ++outcome.visited;
        });
    } else {
        outcome.mode = EnumerationMode::full;
        // Gray-code walk with incremental values, resynchronised periodically
        // to bound floating-point drift.
        constexpr std::uint64_t kResync = std::uint64_t{1} << 12;
        double energy = objective.offset;
        std::vector<double> lhs(constraints.size());
        for (std::size_t c = 0; c < constraints.size(); ++c) lhs[c] = constraints[c].offset;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t step = 0;; ++step) {
            double violation = 0.0;
            for (std::size_t c = 0; c < constraints.size(); ++c) {
                violation += violation_of(senses[c], lhs[c], eps);
            }
            collector.offer(energy, violation, on);
            ++outcome.visited;
            if (step + 1 == total) break;

            Index v = static_cast<Index>(std::countr_zero(step + 1));
            energy += objective.flip_delta(v, on);
            for (std::size_t c = 0; c < constraints.size(); ++c) {
                lhs[c] += constraints[c].flip_delta(v, on);
            }
            on[v] ^= 1;

            if ((step + 1) % kResync == 0) {
                std::vector<Index> active;
                for (Index a = 0; a < n; ++a) {
                    if (on[a]) active.push_back(a);
                }
                energy = objective.value(active, on);
                for (std::size_t c = 0; c < constraints.size(); ++c) {
                    lhs[c] = constraints[c].value(active, on);
                }
            }
        }
    }

    outcome.feasible_count = collector.feasible_count();
    std::vector<RawSample> raw;
    for (auto& x : collector.take()) raw.emplace_back(std::move(x), 1);
    outcome.samples = aggregate(model, raw, "exact");
    outcome.samples.wall_time = std::chrono::steady_clock::now() - start;
    return outcome;
}

SampleSet solve_exact(const CqmModel& model, std::size_t top_k, const ExactLimits& limits) {
    return enumerate_exact(model, top_k, limits).samples;
}

}  // namespace cqmkit
