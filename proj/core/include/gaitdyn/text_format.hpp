// Copyright 2026 The gaitdyn Authors
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

// Locale-independent number I/O shared by the CSV, parameter and JSON
// writers.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaitdyn::text {

/// Shortest "%.9g"-equivalent representation; never depends on locale.
std::string format_number(double value);

/// Parses a complete finite decimal number. Surrounding blanks are allowed;
/// anything else (including nan/inf) yields std::nullopt.
std::optional<double> parse_number(std::string_view token);

std::string_view trim(std::string_view s);

/// Splits on `sep` without quoting rules.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits text into lines, tolerating a trailing '\r'.
std::vector<std::string_view> lines(std::string_view text);

}  // namespace gaitdyn::text
