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

#include "gaitdyn/dynamics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"

namespace gaitdyn::dynamics {
namespace {

using testing::kPi;

SegmentParams params() { return anthro1_params(); }

double rel_error(const DynVector& got, const DynVector& ref) {
  const double diff = std::max(std::abs(got.v1 - ref.v1), std::abs(got.v2 - ref.v2));
  const double scale = std::max({std::abs(ref.v1), std::abs(ref.v2), 1.0});
  return diff / scale;
}

TEST(InertiaMatrix, OffDiagonalVanishesAtRightAngle) {
  const auto d = inertia_matrix(params(), {0.3, kPi / 2 - 0.3});
  EXPECT_NEAR(d.d12, 0.0, 1e-15);
  EXPECT_EQ(d.d12, d.d21);
}

TEST(InertiaMatrix, CoefficientValuesAtZero) {
  const auto d = inertia_matrix(params(), {});
  EXPECT_NEAR(d.d12, -0.2553, 1e-12);
  EXPECT_NEAR(d.d22, 0.0804 + 0.032, 1e-12);
}

TEST(InertiaMatrix, SymmetricPositiveDefiniteEverywhere) {
  testing::StateSampler rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto d = inertia_matrix(params(), rng.next());
    EXPECT_EQ(d.d12, d.d21);
    EXPECT_GT(d.d11, 0.0);
    EXPECT_GT(d.determinant(), 0.0);
  }
}

TEST(Coriolis, ZeroCases) {
  EXPECT_EQ(coriolis_vector(params(), {0.4, 0.2, 0.0, 0.0}), (DynVector{0.0, 0.0}));
  const auto c = coriolis_vector(params(), {0.4, -0.4, 3.0, -2.0});
  EXPECT_EQ(c.v1, 0.0);
  EXPECT_EQ(c.v2, 0.0);
}

TEST(Coriolis, RightAngleValues) {
  const auto c = coriolis_vector(params(), {0.0, kPi / 2, 2.0, 1.0});
  EXPECT_NEAR(c.v1, 0.2553, 1e-12);
  EXPECT_NEAR(c.v2, 1.0212, 1e-12);
}

TEST(Gravity, ValuesAndOddSymmetry) {
  EXPECT_EQ(gravity_vector(params(), {}), (DynVector{0.0, 0.0}));
  EXPECT_NEAR(gravity_vector(params(), {0.0, kPi / 2}).v2, 4.57168, 1e-12);
  testing::StateSampler rng(3);
  for (int i = 0; i < 100; ++i) {
    const JointState st = rng.next();
    const JointState neg{-st.theta_t, -st.theta_s};
    const auto g = gravity_vector(params(), st);
    const auto gn = gravity_vector(params(), neg);
    EXPECT_DOUBLE_EQ(gn.v1, -g.v1);
    EXPECT_DOUBLE_EQ(gn.v2, -g.v2);
  }
}

TEST(GeneralizedForces, DamperMoment) {
  const DamperGeometry d{0.05, 0.1, 0.2, 0.25};
  auto f = generalized_forces(d, {0.0, 0.7}, 3.0, 0.0);
  EXPECT_EQ(f.gamma_hip, 3.0);
  EXPECT_EQ(f.gamma_knee, 0.0);
  f = generalized_forces(d, {0.0, 0.2}, 3.0, 50.0);
  EXPECT_EQ(f.gamma_hip, 3.0);
  EXPECT_EQ(f.gamma_knee, 0.0);
  f = generalized_forces(d, {0.0, 0.2 + kPi / 2}, 0.0, 10.0);
  EXPECT_NEAR(f.gamma_hip, 1.0, 1e-15);
  EXPECT_NEAR(f.gamma_knee, -1.0, 1e-15);
  EXPECT_EQ(f.t1, 0.0);
  EXPECT_EQ(f.fa, 10.0);
}

TEST(InverseDynamics, StaticStateIsGravity) {
  EXPECT_EQ(inverse_dynamics(params(), {}), (DynVector{0.0, 0.0}));
  const JointState st{0.7, -1.1};
  EXPECT_EQ(inverse_dynamics(params(), st), gravity_vector(params(), st));
}

TEST(InverseDynamics, MatchesLagrangianOracle) {
  testing::StateSampler rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const JointState st = rng.next();
    worst = std::max(worst, rel_error(inverse_dynamics(params(), st),
                                      lagrangian_oracle(params(), st)));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(LagrangianOracle, StaticStateReproducesGravity) {
  const JointState st{0.4, -0.9};
  const auto o = lagrangian_oracle(params(), st);
  const auto g = gravity_vector(params(), st);
  EXPECT_NEAR(o.v1, g.v1, 1e-8);
  EXPECT_NEAR(o.v2, g.v2, 1e-8);
}

TEST(LagrangianOracle, SecondOrderConvergence) {
  // Large steps so that truncation dominates rounding.
  const JointState st{0.6, -0.3, 4.0, -6.0, 12.0, -20.0};
  const auto exact = inverse_dynamics(params(), st);
  const auto coarse = lagrangian_oracle(params(), st, 2e-2);
  const auto fine = lagrangian_oracle(params(), st, 1e-2);
  const double e_coarse = std::abs(coarse.v1 - exact.v1) + std::abs(coarse.v2 - exact.v2);
  const double e_fine = std::abs(fine.v1 - exact.v1) + std::abs(fine.v2 - exact.v2);
  const double ratio = e_coarse / e_fine;
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(ForwardDynamics, EquilibriumAndRoundTrip) {
  const auto acc0 = forward_dynamics(params(), {}, {0.0, 0.0});
  EXPECT_EQ(acc0.ddtheta_t, 0.0);
  EXPECT_EQ(acc0.ddtheta_s, 0.0);

  testing::StateSampler rng(99);
  for (int i = 0; i < 1000; ++i) {
    const JointState st = rng.next();
    const auto acc = forward_dynamics(params(), st, inverse_dynamics(params(), st));
    EXPECT_NEAR(acc.ddtheta_t, st.ddtheta_t, 1e-9);
    EXPECT_NEAR(acc.ddtheta_s, st.ddtheta_s, 1e-9);

    const DynVector gamma{rng.uniform(100.0), rng.uniform(100.0)};
    const auto a = forward_dynamics(params(), st, gamma);
    JointState solved = st;
    solved.ddtheta_t = a.ddtheta_t;
    solved.ddtheta_s = a.ddtheta_s;
    const auto back = inverse_dynamics(params(), solved);
    EXPECT_NEAR(back.v1, gamma.v1, 1e-9);
    EXPECT_NEAR(back.v2, gamma.v2, 1e-9);
  }
}

TEST(SwingKneeTorque, StaticValues) {
  EXPECT_EQ(swing_knee_torque(params(), {}), 0.0);
  EXPECT_NEAR(swing_knee_torque(params(), {0.0, kPi / 6}), 2.28584, 1e-12);
}

TEST(SwingKneeTorque, EqualsKneeRowOfInverseDynamics) {
  testing::StateSampler rng(5);
  for (int i = 0; i < 1000; ++i) {
    const JointState st = rng.next();
    EXPECT_NEAR(swing_knee_torque(params(), st), inverse_dynamics(params(), st).v2, 1e-12);
  }
}

TEST(Energy, HangingDatum) {
  const auto p = params();
  const double expected = -(p.m1 * p.g * p.a1 + p.m2 * p.g * p.l1 + p.m2 * p.g * p.a2);
  EXPECT_DOUBLE_EQ(total_energy(p, {}), expected);
}

TEST(Energy, KineticNonNegativeAndPotentialGradient) {
  testing::StateSampler rng(17);
  const auto p = params();
  for (int i = 0; i < 500; ++i) {
    const JointState st = rng.next();
    EXPECT_GE(kinetic_energy(p, st), 0.0);
    const auto g = gravity_vector(p, st);
    const double dvt = testing::central_derivative(
        [&](double x) { return potential_energy(p, {x, st.theta_s}); }, st.theta_t, 1e-6);
    const double dvs = testing::central_derivative(
        [&](double x) { return potential_energy(p, {st.theta_t, x}); }, st.theta_s, 1e-6);
    EXPECT_NEAR(dvt, g.v1, 1e-6);
    EXPECT_NEAR(dvs, g.v2, 1e-6);
  }
}

TEST(Energy, PowerBalance) {
  // dtheta . C == 1/2 dtheta^T Ddot dtheta with Ddot by finite difference
  // along the motion.
  testing::StateSampler rng(21);
  const auto p = params();
  for (int i = 0; i < 200; ++i) {
    const JointState st = rng.next();
    const auto c = coriolis_vector(p, st);
    const double lhs = st.dtheta_t * c.v1 + st.dtheta_s * c.v2;
    const double h = 1e-6;
    auto d_at = [&](double tau) {
      return inertia_matrix(p, {st.theta_t + tau * st.dtheta_t, st.theta_s + tau * st.dtheta_s});
    };
    const auto dp = d_at(h);
    const auto dm = d_at(-h);
    const double ddot12 = (dp.d12 - dm.d12) / (2 * h);
    const double rhs = 0.5 * (2.0 * ddot12 * st.dtheta_t * st.dtheta_s);
    EXPECT_NEAR(lhs, rhs, 1e-5 * std::max(1.0, std::abs(lhs)));
  }
}

}  // namespace
}  // namespace gaitdyn::dynamics
