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

#include "cqmkit/annealing.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "cqmkit/exceptions.hpp"

namespace cqmkit {

namespace {

struct Coupling {
    Index other;
    double bias;
};

// Slack bits of one inequality together with the scaled integer
// coefficients of the original variables it involves.
struct SlackBlock {
    double factor = 0.0;  // P / scale^2
    std::int64_t range = 0;
    std::vector<Index> bits;
    std::vector<std::int64_t> weights;
    std::vector<std::pair<Index, std::int64_t>> members;
    std::int64_t constant = 0;
};

struct Membership {
    std::size_t block;
    std::int64_t coefficient;
};

struct Problem {
    std::size_t num_original = 0;
    std::vector<double> linear;
    std::vector<std::vector<Coupling>> couplings;
    std::vector<SlackBlock> blocks;
    std::vector<std::vector<Membership>> memberships;  // per original variable

    Problem(const QuboModel& qubo, const CqmModel& model)
        : num_original(qubo.num_original),
          linear(qubo.num_vars, 0.0),
          couplings(qubo.num_vars),
          memberships(qubo.num_original) {
        for (const auto& [v, bias] : qubo.form.linear()) linear[v] += bias;
        for (const auto& [uv, bias] : qubo.form.quadratic()) {
            couplings[uv.first].push_back({uv.second, bias});
            couplings[uv.second].push_back({uv.first, bias});
        }

        std::map<std::string, std::size_t> by_name;
        for (const auto& [index, bit] : qubo.provenance) {
            auto [it, inserted] = by_name.emplace(bit.constraint, blocks.size());
            if (inserted) {
                const Constraint& con = *model.find_constraint(bit.constraint);
                SlackBlock block;
                double scale = static_cast<double>(con.scale);
                block.factor = qubo.penalty_weights.at(con.name) / (scale * scale);
                block.constant = std::llround(con.expr.offset() * scale);
                for (const auto& [v, c] : con.expr.linear()) {
                    auto k = std::llround(c * scale);
                    block.members.emplace_back(v, k);
                    memberships[v].push_back({blocks.size(), k});
                }
                blocks.push_back(std::move(block));
            }
            auto& block = blocks[it->second];
            block.bits.push_back(index);
            block.weights.push_back(bit.weight);
            block.range += bit.weight;
        }
    }
};

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class Chain {
 public:
    Chain(const Problem& p, std::uint64_t seed) : p_(p), rng_(seed) {
        const std::size_t n = p.linear.size();
        x_.assign(n, 0);
        for (Index i = 0; i < p.num_original; ++i) x_[i] = static_cast<std::uint8_t>(rng_() >> 63);
        field_ = p.linear;
        for (Index i = 0; i < n; ++i) {
            if (!x_[i]) continue;
            for (const auto& c : p.couplings[i]) field_[c.other] += c.bias;
        }
        residual_.assign(p.blocks.size(), 0);
        slack_.assign(p.blocks.size(), 0);
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            const auto& block = p.blocks[b];
            residual_[b] = block.constant;
            for (const auto& [v, k] : block.members) {
                if (x_[v]) residual_[b] += k;
            }
            set_slack(b, best_slack(b, residual_[b]));
        }
    }

    void sweep(double beta) {
        for (Index i = 0; i < p_.num_original; ++i) {
            double delta = flip_delta(i);
            if (accept(delta, beta)) apply_flip(i);
        }
    }

    std::vector<std::uint8_t> take() { return std::move(x_); }

 private:
    bool accept(double delta, double beta) {
        if (delta <= 0.0) return true;
        double exponent = beta * delta;
        return exponent <= 40.0 && uniform01(rng_) < std::exp(-exponent);
    }

    std::int64_t best_slack(std::size_t b, std::int64_t residual) const {
        return std::clamp<std::int64_t>(-residual, 0, p_.blocks[b].range);
    }

    // Energy change of flipping original variable i with every affected
    // slack block moved to its optimum.
    double flip_delta(Index i) const {
        double delta = x_[i] ? -field_[i] : field_[i];
        const std::int64_t dir = x_[i] ? -1 : 1;
        for (const auto& m : p_.memberships[i]) {
            std::int64_t next = residual_[m.block] + dir * m.coefficient;
            auto fixed = static_cast<double>(next + slack_[m.block]);
            auto best = static_cast<double>(next + best_slack(m.block, next));
            delta += p_.blocks[m.block].factor * (best * best - fixed * fixed);
        }
        return delta;
    }

    void flip(Index v) {
        x_[v] ^= 1;
        const double sign = x_[v] ? 1.0 : -1.0;
        for (const auto& c : p_.couplings[v]) field_[c.other] += sign * c.bias;
    }

    void apply_flip(Index i) {
        const std::int64_t dir = x_[i] ? -1 : 1;
        flip(i);
        for (const auto& m : p_.memberships[i]) {
            residual_[m.block] += dir * m.coefficient;
            set_slack(m.block, best_slack(m.block, residual_[m.block]));
        }
    }

    void set_slack(std::size_t b, std::int64_t value) {
        const auto& block = p_.blocks[b];
        std::int64_t rest = value;
        const std::size_t k = block.bits.size();
        std::vector<std::uint8_t> want(k, 0);
        if (k > 0 && rest > (std::int64_t{1} << (k - 1)) - 1) {
            want[k - 1] = 1;
            rest -= block.weights[k - 1];
        }
        for (std::size_t j = 0; j + 1 < k; ++j) want[j] = (rest >> j) & 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (x_[block.bits[j]] != want[j]) flip(block.bits[j]);
        }
        slack_[b] = value;
    }

    const Problem& p_;
    std::mt19937_64 rng_;
    std::vector<std::uint8_t> x_;
    std::vector<double> field_;
    std::vector<std::int64_t> residual_;
    std::vector<std::int64_t> slack_;
};

std::vector<std::uint8_t> anneal_one(const Problem& p, const SolveParams& params,
                                     const std::vector<double>& betas, std::uint64_t read) {
    Chain chain(p, splitmix64(params.seed ^ read));
    for (double beta : betas) chain.sweep(beta);
    return chain.take();
}

}  // namespace

void SolveParams::validate() const {
    if (num_reads < 1) throw InputError("num_reads must be at least 1");
    if (sweeps < 1) throw InputError("sweeps must be at least 1");
    if (!(beta_start > 0.0) || !(beta_start < beta_end) || !std::isfinite(beta_end)) {
        throw InputError("schedule needs 0 < beta_start < beta_end");
    }
    if (!(time_limit.count() > 0.0)) throw InputError("time_limit must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double geometric_beta(const SolveParams& params, std::uint64_t sweep) {
    if (params.sweeps <= 1) return params.beta_start;
    double t = static_cast<double>(sweep) / static_cast<double>(params.sweeps - 1);
    return params.beta_start * std::pow(params.beta_end / params.beta_start, t);
}

SampleSet solve_sa(const QuboModel& qubo, const CqmModel& model, const SolveParams& params) {
    params.validate();
    if (!provenance_matches(qubo, model)) {
        throw BackendError("QUBO provenance does not match the model");
    }
    const auto start = std::chrono::steady_clock::now();

    const Problem problem(qubo, model);
    std::vector<double> betas(params.sweeps);
    for (std::uint64_t s = 0; s < params.sweeps; ++s) betas[s] = geometric_beta(params, s);

    std::vector<Assignment> finals(params.num_reads);
    unsigned workers = params.num_workers ? params.num_workers
                                          : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, params.num_reads));

    auto run_range = [&](std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t r = first; r < last; ++r) {
            auto bits = anneal_one(problem, params, betas, r);
            finals[r] = decode(qubo, Assignment(std::move(bits))).assignment;
        }
    };
    if (workers <= 1) {
        run_range(0, params.num_reads);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (params.num_reads + workers - 1) / workers;
        for (std::uint64_t first = 0; first < params.num_reads; first += chunk) {
            pool.emplace_back(run_range, first, std::min(first + chunk, params.num_reads));
        }
    }

    std::vector<RawSample> raw;
    raw.reserve(finals.size());
    for (auto& x : finals) raw.emplace_back(std::move(x), 1);
    SampleSet set = aggregate(model, raw, "sa");
    set.wall_time = std::chrono::steady_clock::now() - start;
    return set;
}

}  // namespace cqmkit
