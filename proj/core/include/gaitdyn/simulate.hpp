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

// Fixed-step forward integration of the thigh-shank plant, optionally
// closed with the swing-phase flexion controller.

#include <functional>
#include <vector>

#include "gaitdyn/dynamics.hpp"
#include "gaitdyn/geometry.hpp"
#include "gaitdyn/signal_io.hpp"

namespace gaitdyn::sim {

/// Integrated coordinates (angles and rates) of the chain.
struct PlanarState {
  double theta_t = 0.0;
  double theta_s = 0.0;
  double dtheta_t = 0.0;
  double dtheta_s = 0.0;

  bool operator==(const PlanarState&) const = default;
};

/// Classical fourth-order Runge-Kutta step with generalized forces held
/// constant over the step. `dt` may be negative (backward integration) but
/// not zero. Throws DomainError if the result is not finite.
PlanarState rk4_step(const SegmentParams& p, const PlanarState& state,
                     const dynamics::DynVector& gamma, double dt);

struct SimConfig {
  double dt = 1e-4;
  double duration = 1.0;
  JointState initial;
  /// Hip torque as a function of time; empty means zero.
  std::function<double(double)> hip_torque_profile;
  bool controller_enabled = false;
  geometry::ControllerState controller;
  geometry::GeometricLeg leg;
  geometry::FsmTransitions transitions = geometry::FsmTransitions::defaults();
  /// Clearance predicate fed to the controller; empty means the default
  /// knee-flexion test (theta_k >= min_knee_flexion).
  std::function<bool(double, const JointState&)> ground_clearance_ok;
  double min_knee_flexion = 0.35;  ///< [rad]
};

struct TorqueSample {
  double t = 0.0;
  double hip = 0.0;
  double knee = 0.0;

  bool operator==(const TorqueSample&) const = default;
};

struct PhaseSample {
  double t = 0.0;
  geometry::FlexPhase phase = geometry::FlexPhase::PassiveFlex;
  double alpha_dot = 0.0;
  bool alpha_dot_singular = false;  ///< leg-angle rate undefined; torque forced to 0

  bool operator==(const PhaseSample&) const = default;
};

struct SimResult {
  io::Trajectory trajectory;
  std::vector<TimedValue> energy_series;
  std::vector<TorqueSample> applied_torques;
  std::vector<PhaseSample> phase_series;
};

void validate_config(const SimConfig& cfg);

/// Number of integration steps: ceil(duration / dt).
std::size_t step_count(const SimConfig& cfg);

/// Integrates the plant from cfg.initial. Torques are evaluated at the start
/// of every step and held over it (zero-order hold). With the controller
/// enabled the knee torque enters the knee coordinate directly; the knee
/// angle is theta_k = theta_t - theta_s and the leg-angle rate comes from
/// the chain rule on leg_angle(theta_k).
///
/// Row i of every series is recorded at t = i * dt; accelerations and
/// torques of a row are the ones applied over the following step.
SimResult simulate_swing(const SegmentParams& p, const SimConfig& cfg);

}  // namespace gaitdyn::sim
