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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cqmkit {

using Index = std::size_t;

/// Dense 0/1 vector over the variables of a model.
class Assignment {
 public:
    Assignment() = default;

    /// All-zeros assignment over `num_variables` variables.
    explicit Assignment(std::size_t num_variables) : bits_(num_variables, 0) {}

    /// Throws InputError if an entry is not exactly 0 or 1.
    explicit Assignment(std::vector<std::uint8_t> bits);

    /// `num_variables` zeros with ones at the given indices.
    static Assignment with_ones(std::size_t num_variables, std::span<const Index> ones);
    static Assignment with_ones(std::size_t num_variables, std::initializer_list<Index> ones) {
        return with_ones(num_variables, std::span<const Index>(ones.begin(), ones.size()));
    }

    std::size_t size() const { return bits_.size(); }
    bool operator[](Index v) const { return bits_[v] != 0; }
    void set(Index v, bool value) { bits_[v] = value ? 1 : 0; }
    void flip(Index v) { bits_[v] ^= 1; }

    std::span<const std::uint8_t> bits() const { return bits_; }

    /// Indices of the variables set to one, ascending.
    std::vector<Index> ones() const;

    /// Copy of the first `n` bits.
    Assignment prefix(std::size_t n) const;

    /// e.g. "0100".
    std::string to_string() const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
    std::vector<std::uint8_t> bits_;
};

/// Sparse quadratic form over binary variables:
///
///     sum_i a_i x_i + sum_{i<j} b_ij x_i x_j + c
///
/// Terms are stored as added. `normalize()` produces the canonical form:
/// pairs keyed (min, max), self-pairs folded into the linear part and zero
/// coefficients removed.
class QuadraticExpression {
 public:
    using LinearMap = std::map<Index, double>;
    using Pair = std::pair<Index, Index>;
    using QuadraticMap = std::map<Pair, double>;

    QuadraticExpression() = default;

    QuadraticExpression& add_linear(Index v, double bias);
    QuadraticExpression& add_quadratic(Index u, Index v, double bias);
    QuadraticExpression& add_offset(double bias) {
        offset_ += bias;
        return *this;
    }
    void set_offset(double offset) { offset_ = offset; }

    const LinearMap& linear() const { return linear_; }
    const QuadraticMap& quadratic() const { return quadratic_; }
    double offset() const { return offset_; }

    /// Linear coefficient of `v`, zero if absent.
    double linear(Index v) const;

    /// Coefficient of the (u, v) interaction summed over both key orders.
    double quadratic(Index u, Index v) const;

    bool is_linear() const { return quadratic_.empty(); }

    /// No stored terms (the offset may still be non-zero).
    bool has_terms() const { return !linear_.empty() || !quadratic_.empty(); }

    /// One past the largest referenced index; zero for a constant.
    std::size_t span_size() const;

    /// Returns false if any coefficient or the offset is NaN or infinite.
    bool is_finite() const;

    /// Every coefficient and the offset multiplied by `factor`.
    QuadraticExpression scaled(double factor) const;

    friend bool operator==(const QuadraticExpression&, const QuadraticExpression&) = default;

 private:
    LinearMap linear_;
    QuadraticMap quadratic_;
    double offset_ = 0.0;
};

/// Exact value of `expr` at `x`. Terms are summed in ascending key order so
/// the result is reproducible bit-for-bit.
///
/// Throws DimensionMismatch if `expr` references a variable outside `x`.
double evaluate(const QuadraticExpression& expr, const Assignment& x);

/// Canonical form of `expr`; evaluates identically on every assignment.
QuadraticExpression normalize(const QuadraticExpression& expr);

}  // namespace cqmkit
