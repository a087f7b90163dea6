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

// Command-line frontend. `run` is the whole program minus process setup, so
// tests can drive it in-process.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gaitdyn/spatial.hpp"

namespace gaitdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// The `spatial` subcommand's JSON document.
std::string metrics_json(const std::vector<spatial::SpatialMetrics>& metrics);

}  // namespace gaitdyn::cli
