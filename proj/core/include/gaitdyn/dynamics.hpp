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

// Closed-form Lagrangian dynamics of the planar thigh-shank chain:
//
//   D(theta) * ddtheta + C(theta, dtheta) + G(theta) = Gamma
//
// C is a velocity-squared vector added directly (it already carries the
// dtheta^2 factors), not a matrix multiplied by dtheta.

#include "gaitdyn/model.hpp"

namespace gaitdyn::dynamics {

struct InertiaMatrix {
  double d11 = 0.0;
  double d12 = 0.0;
  double d21 = 0.0;
  double d22 = 0.0;

  double determinant() const noexcept { return d11 * d22 - d12 * d21; }
};

/// Two-component generalized quantity (hip row, knee row).
struct DynVector {
  double v1 = 0.0;
  double v2 = 0.0;

  bool operator==(const DynVector&) const = default;
};

struct Accelerations {
  double ddtheta_t = 0.0;
  double ddtheta_s = 0.0;
};

InertiaMatrix inertia_matrix(const SegmentParams& p, const JointState& st);
DynVector coriolis_vector(const SegmentParams& p, const JointState& st);
DynVector gravity_vector(const SegmentParams& p, const JointState& st);

/// Gamma = [t1 + fa b sin(theta_s - beta), -fa b sin(theta_s - beta)].
GeneralizedForces generalized_forces(const DamperGeometry& d,
                                     const JointState& st, double t1,
                                     double fa);

/// Required generalized torques for the motion in `st` (accelerations used).
DynVector inverse_dynamics(const SegmentParams& p, const JointState& st);

/// Solves D ddtheta = Gamma - C - G; accelerations in `st` are ignored.
Accelerations forward_dynamics(const SegmentParams& p, const JointState& st,
                               const DynVector& gamma);

/// Knee torque during swing, written out term by term. Identical to the knee
/// row of inverse_dynamics.
double swing_knee_torque(const SegmentParams& p, const JointState& st);

double kinetic_energy(const SegmentParams& p, const JointState& st);

/// V = -(m1 g a1 + m2 g l1) cos(theta_t) - m2 g a2 cos(theta_s); its
/// gradient is gravity_vector.
double potential_energy(const SegmentParams& p, const JointState& st);

double total_energy(const SegmentParams& p, const JointState& st);

inline constexpr double kOracleStep = 1e-5;

/// Independent check of inverse_dynamics: evaluates
/// d/dt(dL/d(dtheta)) - dL/dtheta for L = T - V by central differences.
/// The Lagrangian is evaluated in extended precision from its own energy
/// expressions; nothing here calls the closed-form C or G. The time
/// derivative follows the state along theta + dtheta*tau + ddtheta*tau^2/2.
DynVector lagrangian_oracle(const SegmentParams& p, const JointState& st,
                            double h = kOracleStep);

}  // namespace gaitdyn::dynamics
