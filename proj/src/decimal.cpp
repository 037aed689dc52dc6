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

#include "cqmkit/decimal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cqmkit/exceptions.hpp"

namespace cqmkit {

namespace {

// Number of decimal digits of a power-of-ten scale, or -1.
int decimal_digits(std::int64_t scale) {
    int digits = 0;
    while (scale > 1 && scale % 10 == 0) {
        scale /= 10;
        ++digits;
    }
    return scale == 1 ? digits : -1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string_view strip_currency(std::string_view s) {
    if (s.starts_with("\\$")) return s.substr(2);
    if (s.starts_with("$")) return s.substr(1);
    return s;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
    throw InputError("cannot parse '" + std::string(text) + "': " + why);
}

}  // namespace

bool has_currency_marker(std::string_view text) {
    text = trim(text);
    if (text.starts_with("-") || text.starts_with("+")) text.remove_prefix(1);
    return text.starts_with("$") || text.starts_with("\\$");
}

std::int64_t parse_minor_units(std::string_view text, std::int64_t scale) {
    if (scale < 1) throw InputError("scale must be a positive integer");
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    s = trim(strip_currency(s));
    if (!s.empty() && s.front() == '-' && !negative) {  // "$-3.00"
        negative = true;
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text, "empty value");

    const int digits = decimal_digits(scale);
    if (digits < 0) {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
            bad(text, "not a number");
        }
        double scaled = value * static_cast<double>(scale);
        double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) {
            bad(text, "not a multiple of 1/" + std::to_string(scale));
        }
        auto v = static_cast<std::int64_t>(rounded);
        return negative ? -v : v;
    }

    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text, "no digits");
    for (char c : whole) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "not a number");
    }
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "not a number");
    }
    // Digits past the scale's precision must be zero.
    for (std::size_t i = static_cast<std::size_t>(digits); i < frac.size(); ++i) {
        if (frac[i] != '0') {
            bad(text, "more precise than 1/" + std::to_string(scale));
        }
    }

    constexpr auto kMax = std::numeric_limits<std::int64_t>::max() / 10;
    std::int64_t value = 0;
    for (char c : whole) {
        if (value > kMax) bad(text, "out of range");
        value = value * 10 + (c - '0');
    }
    for (int i = 0; i < digits; ++i) {
        if (value > kMax) bad(text, "out of range");
        char c = static_cast<std::size_t>(i) < frac.size() ? frac[i] : '0';
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

std::string format_minor_units(std::int64_t value, std::int64_t scale) {
    const int digits = decimal_digits(scale);
    if (digits < 0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g",
                      static_cast<double>(value) / static_cast<double>(scale));
        return buf;
    }
    std::string sign = value < 0 ? "-" : "";
    auto magnitude = static_cast<std::uint64_t>(value < 0 ? -(value + 1) : value) +
                     (value < 0 ? 1u : 0u);
    auto unit = static_cast<std::uint64_t>(scale);
    std::string out = sign + std::to_string(magnitude / unit);
    if (digits > 0) {
        std::string frac = std::to_string(magnitude % unit);
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace cqmkit
