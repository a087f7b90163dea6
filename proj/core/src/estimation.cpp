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

#include "gaitdyn/estimation.hpp"

#include <cmath>
#include <limits>

#include "gaitdyn/error.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn::estimation {
namespace {

constexpr const char* kModule = "estimation";

}  // namespace

double solve_theta1(double theta2, const LinkPair& links) {
  if (!(links.l1 > 0.0) || !(links.l2 > 0.0)) {
    throw DomainError(kModule, "link lengths must be > 0");
  }
  const double y = links.l2 * std::sin(theta2);
  // l1 + l2 cos(theta2) rewritten with the half angle so it does not cancel
  // near theta2 = +-pi.
  const double half_cos = std::cos(theta2 / 2.0);
  const double x = (links.l1 - links.l2) + 2.0 * links.l2 * half_cos * half_cos;
  // sin(pi) is not exactly zero in floating point, so the degenerate case is
  // detected with a relative tolerance.
  if (std::hypot(x, y) <= 8.0 * std::numeric_limits<double>::epsilon() * (links.l1 + links.l2)) {
    throw DomainError(kModule, "degenerate triangle: l1 + l2 cos(theta2) = 0 and sin(theta2) = 0");
  }
  return std::atan2(y, x);
}

double sine_rule_residual(double theta1, double theta2, const LinkPair& links) {
  return links.l2 * std::sin(theta2 - theta1) - links.l1 * std::sin(theta1);
}

std::vector<TimedValue> estimate_series(const std::vector<TimedValue>& theta2_series,
                                        const LinkPair& links) {
  std::vector<TimedValue> out;
  out.reserve(theta2_series.size());
  for (std::size_t i = 0; i < theta2_series.size(); ++i) {
    const auto& sample = theta2_series[i];
    if (i > 0 && !(sample.t > theta2_series[i - 1].t)) {
      throw DomainError(kModule, "timestamps not strictly increasing at t = " +
                                     text::format_number(sample.t));
    }
    try {
      out.push_back({sample.t, solve_theta1(sample.value, links)});
    } catch (const DomainError& e) {
      throw DomainError(kModule, "at t = " + text::format_number(sample.t) + ": " + e.what());
    }
  }
  return out;
}

double knee_torque_anthro(const AnthroCoefficients& c, const JointState& st) {
  const double hip = st.theta_t;
  const double knee = st.theta_s;
  return c.c1 * st.ddtheta_s - c.c2 * st.ddtheta_t * std::cos(hip + knee) +
         c.c2 * st.dtheta_t * st.dtheta_t * std::sin(hip + knee) +
         c.c3 * st.ddtheta_s + c.c4 * std::sin(knee);
}

}  // namespace gaitdyn::estimation
