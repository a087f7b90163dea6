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

// Sine-rule elimination of one joint angle given the other, and the
// anthropometric-coefficient knee torque.

#include <vector>

#include "gaitdyn/model.hpp"

namespace gaitdyn::estimation {

/// Link lengths of the angle-elimination triangle.
struct LinkPair {
  double l1 = 0.0;
  double l2 = 0.0;
};

/// Principal solution of sin(theta2 - theta1) / l1 = sin(theta1) / l2:
///   theta1 = atan2(l2 sin theta2, l1 + l2 cos theta2).
/// DomainError for non-positive links or when both atan2 arguments vanish.
double solve_theta1(double theta2, const LinkPair& links);

/// Residual l2 sin(theta2 - theta1) - l1 sin(theta1) of the sine-rule
/// relation.
double sine_rule_residual(double theta1, double theta2, const LinkPair& links);

/// Per-sample solve_theta1. Timestamps must be strictly increasing. There is
/// deliberately no parameter for the vertical length: the estimate is
/// independent of it.
std::vector<TimedValue> estimate_series(const std::vector<TimedValue>& theta2_series,
                                        const LinkPair& links);

/// tau_k = c1 dd_k - c2 dd_h cos(h + k) + c2 d_h^2 sin(h + k) + c3 dd_k
///         + c4 sin(k), with hip -> thigh and knee -> shank coordinates.
double knee_torque_anthro(const AnthroCoefficients& coeffs, const JointState& st);

}  // namespace gaitdyn::estimation
