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

#include <array>
#include <cmath>

namespace gaitdyn::dynamics {

InertiaMatrix inertia_matrix(const SegmentParams& p, const JointState& st) {
  const double coupling = -p.m2 * p.l1 * p.a2 * std::cos(st.theta_t + st.theta_s);
  InertiaMatrix d;
  d.d11 = p.m1 * p.a1 * p.a1 + p.I1 + p.m2 * p.l1 * p.l1;
  d.d12 = coupling;
  d.d21 = coupling;
  d.d22 = p.m2 * p.a2 * p.a2 + p.I2;
  return d;
}

DynVector coriolis_vector(const SegmentParams& p, const JointState& st) {
  const double h = p.m2 * p.l1 * p.a2 * std::sin(st.theta_t + st.theta_s);
  return {h * st.dtheta_s * st.dtheta_s, h * st.dtheta_t * st.dtheta_t};
}

DynVector gravity_vector(const SegmentParams& p, const JointState& st) {
  return {(p.m1 * p.g * p.a1 + p.m2 * p.g * p.l1) * std::sin(st.theta_t),
          p.m2 * p.g * p.a2 * std::sin(st.theta_s)};
}

GeneralizedForces generalized_forces(const DamperGeometry& d,
                                     const JointState& st, double t1,
                                     double fa) {
  const double moment = fa * d.b * std::sin(st.theta_s - d.beta);
  GeneralizedForces f;
  f.gamma_hip = t1 + moment;
  f.gamma_knee = -moment;
  f.t1 = t1;
  f.fa = fa;
  return f;
}

DynVector inverse_dynamics(const SegmentParams& p, const JointState& st) {
  const InertiaMatrix d = inertia_matrix(p, st);
  const DynVector c = coriolis_vector(p, st);
  const DynVector g = gravity_vector(p, st);
  return {d.d11 * st.ddtheta_t + d.d12 * st.ddtheta_s + c.v1 + g.v1,
          d.d21 * st.ddtheta_t + d.d22 * st.ddtheta_s + c.v2 + g.v2};
}

Accelerations forward_dynamics(const SegmentParams& p, const JointState& st,
                               const DynVector& gamma) {
  const InertiaMatrix d = inertia_matrix(p, st);
  const DynVector c = coriolis_vector(p, st);
  const DynVector g = gravity_vector(p, st);
  const double r1 = gamma.v1 - c.v1 - g.v1;
  const double r2 = gamma.v2 - c.v2 - g.v2;
  const double det = d.determinant();
  return {(d.d22 * r1 - d.d12 * r2) / det, (d.d11 * r2 - d.d21 * r1) / det};
}

double swing_knee_torque(const SegmentParams& p, const JointState& st) {
  const double k = p.m2 * p.l1 * p.a2;
  const double sum = st.theta_t + st.theta_s;
  return p.m2 * p.a2 * p.a2 * st.ddtheta_s -
         k * st.ddtheta_t * std::cos(sum) +
         k * st.dtheta_t * st.dtheta_t * std::sin(sum) + p.I2 * st.ddtheta_s +
         p.m2 * p.g * p.a2 * std::sin(st.theta_s);
}

double kinetic_energy(const SegmentParams& p, const JointState& st) {
  const InertiaMatrix d = inertia_matrix(p, st);
  const double wt = st.dtheta_t;
  const double ws = st.dtheta_s;
  return 0.5 * (d.d11 * wt * wt + (d.d12 + d.d21) * wt * ws + d.d22 * ws * ws);
}

double potential_energy(const SegmentParams& p, const JointState& st) {
  return -(p.m1 * p.g * p.a1 + p.m2 * p.g * p.l1) * std::cos(st.theta_t) -
         p.m2 * p.g * p.a2 * std::cos(st.theta_s);
}

double total_energy(const SegmentParams& p, const JointState& st) {
  return kinetic_energy(p, st) + potential_energy(p, st);
}

namespace {

using Real = long double;
using Pair = std::array<Real, 2>;

// L = T - V, written directly from the segment energies.
Real lagrangian(const SegmentParams& p, const Pair& q, const Pair& w) {
  const Real m1 = p.m1, m2 = p.m2, a1 = p.a1, a2 = p.a2;
  const Real I1 = p.I1, I2 = p.I2, l1 = p.l1, g = p.g;
  const Real thigh_inertia = m1 * a1 * a1 + I1 + m2 * l1 * l1;
  const Real shank_inertia = m2 * a2 * a2 + I2;
  const Real coupling = m2 * l1 * a2 * std::cos(q[0] + q[1]);
  const Real kinetic = 0.5L * thigh_inertia * w[0] * w[0] +
                       0.5L * shank_inertia * w[1] * w[1] -
                       coupling * w[0] * w[1];
  const Real potential = -(m1 * g * a1 + m2 * g * l1) * std::cos(q[0]) -
                         m2 * g * a2 * std::cos(q[1]);
  return kinetic - potential;
}

Real d_dw(const SegmentParams& p, const Pair& q, Pair w, int i, Real h) {
  const Real w0 = w[i];
  w[i] = w0 + h;
  const Real plus = lagrangian(p, q, w);
  w[i] = w0 - h;
  const Real minus = lagrangian(p, q, w);
  return (plus - minus) / (2 * h);
}

Real d_dq(const SegmentParams& p, Pair q, const Pair& w, int i, Real h) {
  const Real q0 = q[i];
  q[i] = q0 + h;
  const Real plus = lagrangian(p, q, w);
  q[i] = q0 - h;
  const Real minus = lagrangian(p, q, w);
  return (plus - minus) / (2 * h);
}

}  // namespace

DynVector lagrangian_oracle(const SegmentParams& p, const JointState& st,
                            double h) {
  const Real step = h;
  const Pair q = {st.theta_t, st.theta_s};
  const Pair w = {st.dtheta_t, st.dtheta_s};
  const Pair a = {st.ddtheta_t, st.ddtheta_s};

  auto along_path = [&](Real tau) {
    Pair qt{}, wt{};
    for (int i = 0; i < 2; ++i) {
      qt[i] = q[i] + w[i] * tau + 0.5L * a[i] * tau * tau;
      wt[i] = w[i] + a[i] * tau;
    }
    return std::pair{qt, wt};
  };
  const auto [q_fwd, w_fwd] = along_path(step);
  const auto [q_bwd, w_bwd] = along_path(-step);

  std::array<double, 2> out{};
  for (int i = 0; i < 2; ++i) {
    const Real momentum_rate = (d_dw(p, q_fwd, w_fwd, i, step) -
                                d_dw(p, q_bwd, w_bwd, i, step)) /
                               (2 * step);
    out[i] = static_cast<double>(momentum_rate - d_dq(p, q, w, i, step));
  }
  return {out[0], out[1]};
}

}  // namespace gaitdyn::dynamics
