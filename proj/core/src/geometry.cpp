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

#include "gaitdyn/geometry.hpp"

#include <cmath>
#include <numbers>

#include "gaitdyn/error.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn::geometry {
namespace {

constexpr const char* kModule = "geometry";
constexpr double kPi = std::numbers::pi;

void require_leg(const GeometricLeg& leg) {
  if (!(leg.ls > 0.0) || !(leg.l > 0.0)) {
    throw DomainError(kModule, "leg lengths ls and l must be > 0");
  }
}

}  // namespace

std::string_view to_string(FlexPhase phase) {
  switch (phase) {
    case FlexPhase::PassiveFlex:
      return "passive_flex";
    case FlexPhase::ActiveFlexAssist:
      return "active_flex_assist";
    case FlexPhase::Hold:
      return "hold";
  }
  return "unknown";
}

double knee_from_thigh_shank(double theta_th, double theta_lg) {
  return theta_th - theta_lg;
}

double knee_from_thigh_shank_via_interior(double theta_th, double theta_lg) {
  const double theta_x = kPi - theta_th;
  return kPi - theta_x - theta_lg;
}

double shank_from_knee(double theta_k, const GeometricLeg& leg) {
  require_leg(leg);
  const double arg = -std::sin(theta_k) / (leg.ls * leg.l);
  if (!(std::abs(arg) < 1.0)) {
    throw DomainError(kModule, "constraint argument outside (-1,1): -sin(theta_k)/(ls*l) = " +
                                   text::format_number(arg));
  }
  return std::acos(arg);
}

double leg_angle(double theta_k, const GeometricLeg& leg) {
  require_leg(leg);
  const double arg = leg.ls * std::sin(theta_k) / leg.l;
  if (!(std::abs(arg) <= 1.0)) {
    throw DomainError(kModule, "asin argument ls*sin(theta_k)/l = " +
                                   text::format_number(arg) + " outside [-1,1]");
  }
  return kPi / 2.0 - theta_k + std::asin(arg);
}

std::optional<double> leg_angle_rate(double theta_k, double theta_k_dot,
                                     const GeometricLeg& leg) {
  require_leg(leg);
  const double ratio = leg.ls / leg.l;
  const double arg = ratio * std::sin(theta_k);
  const double radicand = 1.0 - arg * arg;
  if (!(radicand > 0.0)) return std::nullopt;
  return (-1.0 + ratio * std::cos(theta_k) / std::sqrt(radicand)) * theta_k_dot;
}

double flexion_torque_rate(double alpha_dot, double k_flex) {
  if (alpha_dot > 0.0) return 0.0;
  return -k_flex * alpha_dot;
}

double flexion_torque_knee_rate(double theta_k_dot, double k_flex,
                                const GeometricLeg& leg, double alpha_dot) {
  if (alpha_dot > 0.0) return 0.0;
  require_leg(leg);
  return 2.0 * k_flex * theta_k_dot / (leg.ls * leg.l);
}

FsmTransitions FsmTransitions::defaults() {
  FsmTransitions t;
  t.enter_assist = [](const FsmInputs& in) {
    return in.alpha_dot <= 0.0 && !in.ground_clearance_ok;
  };
  t.enter_hold = [](const FsmInputs& in) { return in.ground_clearance_ok; };
  return t;
}

FsmOutput fsm_step(const ControllerState& cs, const FsmInputs& in,
                   const GeometricLeg& leg, const FsmTransitions& transitions) {
  FsmOutput out{cs, 0.0};
  switch (cs.phase) {
    case FlexPhase::PassiveFlex:
      if (transitions.enter_assist && transitions.enter_assist(in)) {
        out.state.phase = FlexPhase::ActiveFlexAssist;
      }
      break;
    case FlexPhase::ActiveFlexAssist:
      if (transitions.enter_hold && transitions.enter_hold(in)) {
        out.state.phase = FlexPhase::Hold;
      }
      break;
    case FlexPhase::Hold:
      break;
  }
  if (out.state.phase == FlexPhase::ActiveFlexAssist) {
    out.torque =
        flexion_torque_knee_rate(in.theta_k_dot, cs.k_flex, leg, in.alpha_dot);
  }
  return out;
}

DerivativeCheck arccos_sin_derivative_check(double theta_k, double theta_k_dot) {
  const double c = std::cos(theta_k);
  // sqrt(1 - u^2) at u = sin(theta_k). 1 - u = 2 sin^2(h) and 1 + u = 2 cos^2(h)
  // with h = pi/4 - theta_k/2; forming 1 - u directly loses ~12 digits near
  // |theta_k| = pi/2.
  const double h = kPi / 4.0 - theta_k / 2.0;
  const double root = std::abs(2.0 * std::sin(h) * std::cos(h));
  if (!(root > 0.0) || !(c > 0.0)) {
    throw DomainError(kModule, "d/dt acos(sin theta_k) requires theta_k in (-pi/2, pi/2); got " +
                                   text::format_number(theta_k));
  }
  return {(-c / root) * theta_k_dot, -theta_k_dot};
}

}  // namespace gaitdyn::geometry
