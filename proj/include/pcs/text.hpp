// Copyright 2026 The PCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcs {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Strict parsers: the whole field must be consumed. Throw
/// std::invalid_argument otherwise.
double parse_double(std::string_view text);
std::int64_t parse_int64(std::string_view text);

/// Splits on commas. Fields never contain commas or quotes in the files
/// this library writes.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace pcs
