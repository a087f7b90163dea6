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

// Sagittal-plane angle relations between thigh, shank, knee and leg, and
// the swing-phase knee flexion controller.

#include <functional>
#include <optional>
#include <string_view>

namespace gaitdyn::geometry {

struct GeometricLeg {
  double ls = 0.0;  ///< shank length [m]
  double l = 0.0;   ///< leg length [m]
};

enum class FlexPhase { PassiveFlex, ActiveFlexAssist, Hold };

std::string_view to_string(FlexPhase phase);

struct ControllerState {
  FlexPhase phase = FlexPhase::PassiveFlex;
  double k_flex = 0.0;  ///< flexion gain [N m s/rad]

  bool operator==(const ControllerState&) const = default;
};

/// theta_k = theta_th - theta_lg.
double knee_from_thigh_shank(double theta_th, double theta_lg);

/// Same value routed through the alternate-interior-angle construction
/// (theta_x = pi - theta_th, alpha = pi - theta_x - theta_lg).
double knee_from_thigh_shank_via_interior(double theta_th, double theta_lg);

/// theta_shank = acos(-sin(theta_k) / (ls * l)); the acos argument must lie
/// strictly inside (-1, 1), otherwise DomainError.
double shank_from_knee(double theta_k, const GeometricLeg& leg);

/// alpha = pi/2 - theta_k + asin(ls sin(theta_k) / l). DomainError when the
/// asin argument leaves [-1, 1].
double leg_angle(double theta_k, const GeometricLeg& leg);

/// d(alpha)/dt along theta_k(t). Returns std::nullopt where the asin
/// derivative is singular (|ls sin(theta_k) / l| >= 1).
std::optional<double> leg_angle_rate(double theta_k, double theta_k_dot,
                                     const GeometricLeg& leg);

/// Rate form of the onset-of-swing torque: 0 when alpha_dot > 0, otherwise
/// -k_flex * alpha_dot.
double flexion_torque_rate(double alpha_dot, double k_flex);

/// Knee-rate form: 0 when alpha_dot > 0, otherwise
/// 2 k_flex theta_k_dot / (ls l).
double flexion_torque_knee_rate(double theta_k_dot, double k_flex,
                                const GeometricLeg& leg, double alpha_dot);

struct FsmInputs {
  double alpha_dot = 0.0;
  double theta_k_dot = 0.0;
  bool ground_clearance_ok = true;
};

/// Transition predicates. Both default to the built-in rules:
///   PassiveFlex -> ActiveFlexAssist when alpha_dot <= 0 and clearance is at
///   risk; ActiveFlexAssist -> Hold once clearance is restored. Hold is
///   terminal until the caller resets the state for the next swing.
struct FsmTransitions {
  std::function<bool(const FsmInputs&)> enter_assist;
  std::function<bool(const FsmInputs&)> enter_hold;

  static FsmTransitions defaults();
};

struct FsmOutput {
  ControllerState state;
  double torque = 0.0;
};

/// One controller tick. PassiveFlex and Hold emit 0; ActiveFlexAssist emits
/// flexion_torque_knee_rate. The torque is evaluated in the phase reached
/// after the transition.
FsmOutput fsm_step(const ControllerState& cs, const FsmInputs& in,
                   const GeometricLeg& leg,
                   const FsmTransitions& transitions = FsmTransitions::defaults());

struct DerivativeCheck {
  double analytic = 0.0;
  double expected = 0.0;
};

/// d/dt acos(sin(theta_k)) evaluated by the chain rule next to the
/// simplified form -theta_k_dot. Valid for theta_k in (-pi/2, pi/2);
/// DomainError where sqrt(1 - sin^2) vanishes or cos(theta_k) <= 0.
DerivativeCheck arccos_sin_derivative_check(double theta_k, double theta_k_dot);

}  // namespace gaitdyn::geometry
