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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "gaitdyn/error.hpp"
#include "oracles.hpp"

namespace gaitdyn::sim {
namespace {

SegmentParams params() { return anthro1_params(); }

double state_gap(const PlanarState& a, const PlanarState& b) {
  return std::max({std::abs(a.theta_t - b.theta_t), std::abs(a.theta_s - b.theta_s),
                   std::abs(a.dtheta_t - b.dtheta_t), std::abs(a.dtheta_s - b.dtheta_s)});
}

TEST(Rk4, EquilibriumIsFixed) {
  const PlanarState zero{};
  EXPECT_EQ(rk4_step(params(), zero, {0.0, 0.0}, 1e-3), zero);
  EXPECT_THROW(rk4_step(params(), zero, {0.0, 0.0}, 0.0), DomainError);
}

TEST(Rk4, FourthOrderOneStep) {
  const PlanarState x0{0.4, -0.3, 1.5, -2.0};
  const dynamics::DynVector gamma{1.0, -0.5};
  auto integrate = [&](double dt, int steps) {
    PlanarState x = x0;
    for (int i = 0; i < steps; ++i) x = rk4_step(params(), x, gamma, dt);
    return x;
  };
  const double h = 1e-2;
  const auto reference = integrate(h / 64, 64);
  const double e1 = state_gap(integrate(h, 1), reference);
  const double e2 = state_gap(integrate(h / 2, 2), reference);
  // Local error is O(h^5); two half steps accumulate to about 2/32.
  EXPECT_GT(e1 / e2, 12.0);
  EXPECT_LT(e1 / e2, 20.0);
}

TEST(Rk4, ManufacturedAcceleration) {
  const JointState st{0.2, 0.5, 0.3, -0.4, 2.0, -3.0};
  const auto gamma = dynamics::inverse_dynamics(params(), st);
  const double dt = 1e-3;
  const auto next = rk4_step(params(), {st.theta_t, st.theta_s, st.dtheta_t, st.dtheta_s}, gamma, dt);
  EXPECT_NEAR((next.dtheta_t - st.dtheta_t) / dt, st.ddtheta_t, 1e-2);
  EXPECT_NEAR((next.dtheta_s - st.dtheta_s) / dt, st.ddtheta_s, 1e-2);
}

SimConfig passive(double duration) {
  SimConfig cfg;
  cfg.duration = duration;
  cfg.initial = {0.3, -0.2};
  return cfg;
}

TEST(SimulateSwing, LengthsAndSharedTimestamps) {
  const auto r = simulate_swing(params(), passive(0.05));
  ASSERT_EQ(r.trajectory.rows.size(), 501u);
  ASSERT_EQ(r.energy_series.size(), 501u);
  ASSERT_EQ(r.applied_torques.size(), 501u);
  ASSERT_EQ(r.phase_series.size(), 501u);
  for (std::size_t i = 0; i < r.trajectory.rows.size(); ++i) {
    EXPECT_EQ(r.energy_series[i].t, r.trajectory.rows[i].t);
    EXPECT_EQ(r.applied_torques[i].t, r.trajectory.rows[i].t);
    EXPECT_EQ(r.phase_series[i].t, r.trajectory.rows[i].t);
  }
}

TEST(SimulateSwing, EquilibriumStaysPut) {
  SimConfig cfg;
  cfg.duration = 0.1;
  const auto r = simulate_swing(params(), cfg);
  for (const auto& row : r.trajectory.rows) {
    EXPECT_EQ(row.state.theta_t, 0.0);
    EXPECT_EQ(row.state.theta_s, 0.0);
  }
  for (const auto& e : r.energy_series) EXPECT_EQ(e.value, r.energy_series.front().value);
}

TEST(SimulateSwing, PassiveEnergyConserved) {
  const auto r = simulate_swing(params(), passive(2.0));
  const double e0 = r.energy_series.front().value;
  double worst = 0.0;
  for (const auto& e : r.energy_series) worst = std::max(worst, std::abs(e.value - e0));
  EXPECT_LT(worst, 1e-6);
}

TEST(SimulateSwing, TimeReversible) {
  const PlanarState x0{0.3, -0.2, 0.0, 0.0};
  PlanarState x = x0;
  const double dt = 1e-4;
  for (int i = 0; i < 5000; ++i) x = rk4_step(params(), x, {0.0, 0.0}, dt);
  for (int i = 0; i < 5000; ++i) x = rk4_step(params(), x, {0.0, 0.0}, -dt);
  EXPECT_LT(state_gap(x, x0), 1e-6);
}

TEST(SimulateSwing, Deterministic) {
  auto cfg = passive(0.2);
  cfg.hip_torque_profile = [](double t) { return 2.0 * std::sin(10.0 * t); };
  const auto a = simulate_swing(params(), cfg);
  const auto b = simulate_swing(params(), cfg);
  ASSERT_EQ(a.trajectory.rows.size(), b.trajectory.rows.size());
  for (std::size_t i = 0; i < a.trajectory.rows.size(); ++i) {
    EXPECT_EQ(a.trajectory.rows[i].state.theta_t, b.trajectory.rows[i].state.theta_t);
    EXPECT_EQ(a.trajectory.rows[i].state.dtheta_s, b.trajectory.rows[i].state.dtheta_s);
  }
}

SimConfig controlled(double k_flex) {
  auto cfg = passive(1.0);
  cfg.initial = {0.5, 0.1, 0.0, 3.0};
  cfg.hip_torque_profile = [](double t) { return t < 0.2 ? 8.0 : 0.0; };
  cfg.controller_enabled = true;
  cfg.controller = {geometry::FlexPhase::PassiveFlex, k_flex};
  cfg.leg = {0.45, 0.998};
  return cfg;
}

TEST(SimulateSwing, ZeroGainIsBitwiseTransparent) {
  auto off = controlled(0.0);
  off.controller_enabled = false;
  const auto a = simulate_swing(params(), controlled(0.0));
  const auto b = simulate_swing(params(), off);
  ASSERT_EQ(a.trajectory.rows.size(), b.trajectory.rows.size());
  for (std::size_t i = 0; i < a.trajectory.rows.size(); ++i) {
    const auto& x = a.trajectory.rows[i].state;
    const auto& y = b.trajectory.rows[i].state;
    EXPECT_EQ(std::memcmp(&x, &y, sizeof x), 0) << i;
    EXPECT_EQ(a.applied_torques[i], b.applied_torques[i]);
  }
}

TEST(SimulateSwing, ControllerBranchContract) {
  const auto r = simulate_swing(params(), controlled(2.0));
  bool assisted = false;
  for (std::size_t i = 0; i < r.phase_series.size(); ++i) {
    if (r.phase_series[i].alpha_dot > 0.0) EXPECT_EQ(r.applied_torques[i].knee, 0.0);
    if (r.applied_torques[i].knee != 0.0) assisted = true;
  }
  EXPECT_TRUE(assisted);
}

TEST(SimulateSwing, ConfigValidation) {
  auto cfg = passive(1.0);
  cfg.dt = 0.0;
  EXPECT_THROW(simulate_swing(params(), cfg), DomainError);
  cfg = passive(1e-5);
  EXPECT_THROW(simulate_swing(params(), cfg), DomainError);
  cfg = controlled(-1.0);
  EXPECT_THROW(simulate_swing(params(), cfg), DomainError);
}

TEST(SimulateSwing, InstabilityReportsTime) {
  auto cfg = passive(1.0);
  cfg.dt = 1e-2;
  cfg.hip_torque_profile = [](double t) { return t > 0.05 ? 1e308 : 0.0; };
  try {
    simulate_swing(params(), cfg);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("instability"), std::string::npos);
  }
}

}  // namespace
}  // namespace gaitdyn::sim
