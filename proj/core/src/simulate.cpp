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

#include "gaitdyn/simulate.hpp"

#include <cmath>

#include "gaitdyn/error.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn::sim {
namespace {

constexpr const char* kModule = "simulate";

struct Derivative {
  double dtheta_t, dtheta_s, ddtheta_t, ddtheta_s;
};

Derivative rhs(const SegmentParams& p, const PlanarState& x, const dynamics::DynVector& gamma) {
  const JointState st{x.theta_t, x.theta_s, x.dtheta_t, x.dtheta_s, 0.0, 0.0};
  const auto acc = dynamics::forward_dynamics(p, st, gamma);
  return {x.dtheta_t, x.dtheta_s, acc.ddtheta_t, acc.ddtheta_s};
}

PlanarState advance(const PlanarState& x, const Derivative& k, double h) {
  return {x.theta_t + h * k.dtheta_t, x.theta_s + h * k.dtheta_s,
          x.dtheta_t + h * k.ddtheta_t, x.dtheta_s + h * k.ddtheta_s};
}

bool finite(const PlanarState& x) {
  return std::isfinite(x.theta_t) && std::isfinite(x.theta_s) && std::isfinite(x.dtheta_t) &&
         std::isfinite(x.dtheta_s);
}

}  // namespace

PlanarState rk4_step(const SegmentParams& p, const PlanarState& x,
                     const dynamics::DynVector& gamma, double dt) {
  if (dt == 0.0 || !std::isfinite(dt)) throw DomainError(kModule, "dt must be finite and non-zero");
  const Derivative k1 = rhs(p, x, gamma);
  const Derivative k2 = rhs(p, advance(x, k1, 0.5 * dt), gamma);
  const Derivative k3 = rhs(p, advance(x, k2, 0.5 * dt), gamma);
  const Derivative k4 = rhs(p, advance(x, k3, dt), gamma);
  const double w = dt / 6.0;
  PlanarState next{
      x.theta_t + w * (k1.dtheta_t + 2.0 * k2.dtheta_t + 2.0 * k3.dtheta_t + k4.dtheta_t),
      x.theta_s + w * (k1.dtheta_s + 2.0 * k2.dtheta_s + 2.0 * k3.dtheta_s + k4.dtheta_s),
      x.dtheta_t + w * (k1.ddtheta_t + 2.0 * k2.ddtheta_t + 2.0 * k3.ddtheta_t + k4.ddtheta_t),
      x.dtheta_s + w * (k1.ddtheta_s + 2.0 * k2.ddtheta_s + 2.0 * k3.ddtheta_s + k4.ddtheta_s)};
  if (!finite(next)) throw DomainError(kModule, "non-finite state after RK4 step");
  return next;
}

void validate_config(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw DomainError(kModule, "dt must be > 0");
  if (!(cfg.duration >= cfg.dt)) throw DomainError(kModule, "duration must be >= dt");
  if (!(cfg.controller.k_flex >= 0.0)) throw DomainError(kModule, "k_flex must be >= 0");
  if (cfg.controller_enabled && (!(cfg.leg.ls > 0.0) || !(cfg.leg.l > 0.0))) {
    throw DomainError(kModule, "controller leg lengths must be > 0");
  }
}

std::size_t step_count(const SimConfig& cfg) {
  // Tolerate duration/dt landing a few ulps above an integer.
  return static_cast<std::size_t>(std::ceil(cfg.duration / cfg.dt - 1e-9));
}

SimResult simulate_swing(const SegmentParams& p, const SimConfig& cfg) {
  validate_config(cfg);
  const std::size_t steps = step_count(cfg);

  SimResult result;
  result.trajectory.source = io::TrajectorySource::Synthetic;
  result.trajectory.rows.reserve(steps + 1);
  result.energy_series.reserve(steps + 1);
  result.applied_torques.reserve(steps + 1);
  result.phase_series.reserve(steps + 1);

  PlanarState x{cfg.initial.theta_t, cfg.initial.theta_s, cfg.initial.dtheta_t,
                cfg.initial.dtheta_s};
  geometry::ControllerState controller = cfg.controller;

  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    JointState st{x.theta_t, x.theta_s, x.dtheta_t, x.dtheta_s, 0.0, 0.0};

    const double hip = cfg.hip_torque_profile ? cfg.hip_torque_profile(t) : 0.0;
    double knee = 0.0;
    PhaseSample phase{t, controller.phase, 0.0, false};
    if (cfg.controller_enabled) {
      const double theta_k = geometry::knee_from_thigh_shank(x.theta_t, x.theta_s);
      const double theta_k_dot = x.dtheta_t - x.dtheta_s;
      const auto alpha_dot = geometry::leg_angle_rate(theta_k, theta_k_dot, cfg.leg);
      const bool clear = cfg.ground_clearance_ok ? cfg.ground_clearance_ok(t, st)
                                                 : theta_k >= cfg.min_knee_flexion;
      const auto step = geometry::fsm_step(
          controller, {alpha_dot.value_or(0.0), theta_k_dot, clear}, cfg.leg, cfg.transitions);
      controller = step.state;
      // + 0.0 folds a -0 torque (zero gain, negative knee rate) into +0.
      knee = (alpha_dot ? step.torque : 0.0) + 0.0;
      phase = {t, controller.phase, alpha_dot.value_or(0.0), !alpha_dot.has_value()};
    }

    const dynamics::DynVector gamma{hip, knee};
    const auto acc = dynamics::forward_dynamics(p, st, gamma);
    st.ddtheta_t = acc.ddtheta_t;
    st.ddtheta_s = acc.ddtheta_s;

    result.trajectory.rows.push_back({t, st});
    result.energy_series.push_back({t, dynamics::total_energy(p, st)});
    result.applied_torques.push_back({t, hip, knee});
    result.phase_series.push_back(phase);

    if (i == steps) break;
    try {
      x = rk4_step(p, x, gamma, cfg.dt);
    } catch (const DomainError&) {
      throw DomainError(kModule, "instability: non-finite state at t = " +
                                     text::format_number(t + cfg.dt));
    }
  }
  return result;
}

}  // namespace gaitdyn::sim
