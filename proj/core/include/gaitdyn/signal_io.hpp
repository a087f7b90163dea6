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

// CSV ingestion and serialization, numerical differentiation, gait-event
// detection and synthetic gait generation. Everything here works on
// in-memory text and values; file access lives in the command-line tool.
//
// CSV conventions: comma separated, '.' decimal point, mandatory header,
// no quoting, radians and seconds.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaitdyn/model.hpp"
#include "gaitdyn/spatial.hpp"

namespace gaitdyn::io {

enum class TrajectorySource { Measured, Synthetic };

struct TrajectoryRow {
  double t = 0.0;
  JointState state;
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
  TrajectorySource source = TrajectorySource::Measured;
};

/// Header must contain t, theta_t, theta_s; dtheta_t, dtheta_s, ddtheta_t,
/// ddtheta_s are optional and any that are missing are filled by
/// central_difference (second derivatives from the first). Columns that are
/// present are taken verbatim. Throws DomainError naming the line for
/// malformed rows, non-increasing time, and missing or unknown columns.
Trajectory parse_trajectory_csv(std::string_view text);

/// Writes all seven columns.
std::string write_trajectory_csv(const Trajectory& traj);

/// Two-column series with header `t,<column>` and strictly increasing time.
std::vector<TimedValue> parse_series_csv(std::string_view text, std::string_view column);

struct RatePair {
  spatial::RateSignal thigh;
  spatial::RateSignal shank;
};

/// Header `t,rate_thigh,rate_shank`. An empty data section is an error.
RatePair parse_rate_csv(std::string_view text);
std::string write_rate_csv(const spatial::RateSignal& thigh,
                           const spatial::RateSignal& shank);

/// Header `cycle,to_time,hs_time,cycle_end`.
spatial::GaitEvents parse_events_csv(std::string_view text);
std::string write_events_csv(const spatial::GaitEvents& events);

/// Second-order central differences at interior points, first-order
/// one-sided differences at both ends. Needs >= 3 samples with strictly
/// increasing time.
std::vector<TimedValue> central_difference(const std::vector<TimedValue>& series);

inline constexpr double kDefaultEventThreshold = 0.3;  // [rad/s]
inline constexpr double kDefaultEventMinGap = 0.4;     // [s]

/// Heuristic event detector on the thigh rate. A positive excursion that
/// exceeds `threshold` marks a swing; toe-off is where that excursion
/// started (interpolated zero crossing), heel strike is the next
/// positive-to-negative zero crossing, and cycle_end is the following
/// accepted toe-off. Toe-offs closer than `min_gap` to the previously
/// accepted one are skipped.
spatial::GaitEvents detect_events(const spatial::RateSignal& thigh,
                                  double threshold = kDefaultEventThreshold,
                                  double min_gap = kDefaultEventMinGap);

struct SynthGaitSpec {
  double cycle_duration = 1.0;  ///< [s]
  int n_cycles = 10;
  double hip_amplitude = 0.8;   ///< thigh excursion per phase [rad]
  double knee_amplitude = 1.2;  ///< shank excursion per phase [rad]
  double swing_fraction = 0.40;
  double sample_rate = 1000.0;  ///< [Hz]
  /// Mean thigh and shank angles the excursions are centred on [rad].
  spatial::PostureMean phase_offsets;
  /// Standard deviation of white noise added to the emitted rates; 0 keeps
  /// them exact.
  double rate_noise_std = 0.0;
  std::uint64_t seed = 0;
};

void validate_synth_spec(const SynthGaitSpec& spec);

/// Exact per-cycle rotations of the generator.
struct CycleRotations {
  double swing_thigh = 0.0;
  double swing_shank = 0.0;
  double stance_thigh = 0.0;
  double stance_shank = 0.0;
};

struct SynthGait {
  Trajectory trajectory;
  spatial::RateSignal thigh;
  spatial::RateSignal shank;
  spatial::GaitEvents events;
  std::vector<CycleRotations> truth;
};

/// Each cycle starts at toe-off. Within a phase of duration T a segment
/// moves by A with the cycloidal profile
///   theta(u) = theta0 +/- A (u - sin(2 pi u) / (2 pi)),  u = tau / T,
/// whose rate A/T (1 - cos(2 pi u)) is zero, with zero slope, at both phase
/// boundaries. Swing raises both segments by their amplitude; stance
/// returns them. The trajectory stores the thigh and shank angles in
/// theta_t / theta_s with exact derivatives; the rate signals are the exact
/// first derivatives (plus optional noise).
SynthGait synth_gait(const SynthGaitSpec& spec);

}  // namespace gaitdyn::io
