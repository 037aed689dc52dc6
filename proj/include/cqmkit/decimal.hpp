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
#include <string>
#include <string_view>

namespace cqmkit {

/// Parses a decimal such as "8.00", "$8.00", "\$8.00", "-3" or "284.4" into
/// integer minor units at `scale` (e.g. 100 for cents). Exact for power-of-ten
/// scales; other scales go through a double and must land on an integer.
///
/// Throws InputError on malformed text or a value finer than the scale.
std::int64_t parse_minor_units(std::string_view text, std::int64_t scale);

/// True if the text carries a currency marker ("$" or "\$").
bool has_currency_marker(std::string_view text);

/// Renders minor units with as many decimals as the scale has zeros:
/// (2175, 100) -> "21.75", (7000, 10) -> "700.0".
std::string format_minor_units(std::int64_t value, std::int64_t scale);

}  // namespace cqmkit
