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

#include "cqmkit/expression.hpp"

#include <algorithm>
#include <cmath>

#include "cqmkit/exceptions.hpp"

namespace cqmkit {

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) {
            throw InputError("assignment entry " + std::to_string(i) + " is not 0 or 1");
        }
    }
}

Assignment Assignment::with_ones(std::size_t num_variables, std::span<const Index> ones) {
    Assignment x(num_variables);
    for (Index v : ones) {
        if (v >= num_variables) {
            throw DimensionMismatch("index " + std::to_string(v) + " out of range for " +
                                    std::to_string(num_variables) + " variables");
        }
        x.bits_[v] = 1;
    }
    return x;
}

std::vector<Index> Assignment::ones() const {
    std::vector<Index> out;
    for (Index v = 0; v < bits_.size(); ++v) {
        if (bits_[v]) out.push_back(v);
    }
    return out;
}

Assignment Assignment::prefix(std::size_t n) const {
    if (n > bits_.size()) {
        throw DimensionMismatch("prefix longer than assignment");
    }
    return Assignment(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
}

std::string Assignment::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

QuadraticExpression& QuadraticExpression::add_linear(Index v, double bias) {
    linear_[v] += bias;
    return *this;
}

QuadraticExpression& QuadraticExpression::add_quadratic(Index u, Index v, double bias) {
    quadratic_[{u, v}] += bias;
    return *this;
}

double QuadraticExpression::linear(Index v) const {
    auto it = linear_.find(v);
    return it == linear_.end() ? 0.0 : it->second;
}

double QuadraticExpression::quadratic(Index u, Index v) const {
    double total = 0.0;
    if (auto it = quadratic_.find({u, v}); it != quadratic_.end()) total += it->second;
    if (u != v) {
        if (auto it = quadratic_.find({v, u}); it != quadratic_.end()) total += it->second;
    }
    return total;
}

std::size_t QuadraticExpression::span_size() const {
    std::size_t n = 0;
    for (const auto& [v, _] : linear_) n = std::max(n, v + 1);
    for (const auto& [uv, _] : quadratic_) n = std::max({n, uv.first + 1, uv.second + 1});
    return n;
}

bool QuadraticExpression::is_finite() const {
    if (!std::isfinite(offset_)) return false;
    for (const auto& [_, bias] : linear_) {
        if (!std::isfinite(bias)) return false;
    }
    for (const auto& [_, bias] : quadratic_) {
        if (!std::isfinite(bias)) return false;
    }
    return true;
}

QuadraticExpression QuadraticExpression::scaled(double factor) const {
    QuadraticExpression out = *this;
    for (auto& [_, bias] : out.linear_) bias *= factor;
    for (auto& [_, bias] : out.quadratic_) bias *= factor;
    out.offset_ *= factor;
    return out;
}

double evaluate(const QuadraticExpression& expr, const Assignment& x) {
    if (expr.span_size() > x.size()) {
        throw DimensionMismatch("expression references variable " +
                                std::to_string(expr.span_size() - 1) + " but assignment has " +
                                std::to_string(x.size()) + " variables");
    }
    double value = 0.0;
    for (const auto& [v, bias] : expr.linear()) {
        if (x[v]) value += bias;
    }
    for (const auto& [uv, bias] : expr.quadratic()) {
        if (x[uv.first] && x[uv.second]) value += bias;
    }
    return value + expr.offset();
}

QuadraticExpression normalize(const QuadraticExpression& expr) {
    QuadraticExpression::LinearMap linear = expr.linear();
    QuadraticExpression::QuadraticMap quadratic;
    for (const auto& [uv, bias] : expr.quadratic()) {
        auto [u, v] = uv;
        if (u == v) {
            linear[u] += bias;  // x*x == x
        } else {
            quadratic[{std::min(u, v), std::max(u, v)}] += bias;
        }
    }

    QuadraticExpression out;
    for (const auto& [v, bias] : linear) {
        if (bias != 0.0) out.add_linear(v, bias);
    }
    for (const auto& [uv, bias] : quadratic) {
        if (bias != 0.0) out.add_quadratic(uv.first, uv.second, bias);
    }
    out.set_offset(expr.offset());
    return out;
}

}  // namespace cqmkit
