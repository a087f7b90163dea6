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

// Shared domain types for the thigh-shank model and the parameter file.

#include <string>
#include <string_view>
#include <vector>

namespace gaitdyn {

/// Thigh (index 1) and shank (index 2) segment parameters, SI units.
/// a1/a2 are centre-of-mass offsets measured from the proximal joint.
struct SegmentParams {
  double m1 = 0.0;  ///< thigh mass [kg]
  double m2 = 0.0;  ///< shank mass [kg]
  double a1 = 0.0;  ///< thigh COM distance from hip [m]
  double a2 = 0.0;  ///< shank COM distance from knee [m]
  double I1 = 0.0;  ///< thigh moment of inertia [kg m^2]
  double I2 = 0.0;  ///< shank moment of inertia [kg m^2]
  double l1 = 0.0;  ///< thigh length [m]
  double l2 = 0.0;  ///< shank length [m]
  double g = 9.81;  ///< gravitational acceleration [m/s^2]
};

/// Hydraulic damper mounting. beta is the orientation angle that appears in
/// the knee moment arm term sin(theta_s - beta).
struct DamperGeometry {
  double s = 0.0;     ///< knee centre to piston attachment on thigh [m]
  double b = 0.0;     ///< knee centre to damper attachment on shank [m]
  double beta = 0.0;  ///< damper orientation [rad]
  double ld = 0.0;    ///< damper length [m]
};

/// Thigh angle theta_t is measured from the horizontal, shank angle theta_s
/// from the vertical. Hip/knee aliases map hip -> thigh, knee -> shank.
/// The gravity and energy terms are taken as given; they behave as if both
/// angles were measured from the downward vertical.
struct JointState {
  double theta_t = 0.0;
  double theta_s = 0.0;
  double dtheta_t = 0.0;
  double dtheta_s = 0.0;
  double ddtheta_t = 0.0;
  double ddtheta_s = 0.0;
};

/// One sample of a scalar time series.
struct TimedValue {
  double t = 0.0;
  double value = 0.0;

  bool operator==(const TimedValue&) const = default;
};

struct GeneralizedForces {
  double gamma_hip = 0.0;   ///< [N m]
  double gamma_knee = 0.0;  ///< [N m]
  double t1 = 0.0;          ///< hip torque input [N m]
  double fa = 0.0;          ///< damper force [N]
};

struct Violation {
  std::string field;
  std::string description;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool operator==(const ValidationReport&) const = default;
};

/// The four anthropometric knee-torque coefficients:
///   c1 = m2 a2^2, c2 = m2 l1 a2, c3 = I2, c4 = m2 g a2.
struct AnthroCoefficients {
  double c1 = 0.0804;
  double c2 = 0.2553;
  double c3 = 0.032;
  double c4 = 4.57168;
};

/// Shank-side parameters recoverable from AnthroCoefficients.
struct ShankParams {
  double m2 = 0.0;
  double a2 = 0.0;
  double l1 = 0.0;
  double I2 = 0.0;
};

inline constexpr double kStandardGravity = 9.81;

/// Inverts the coefficient structure. Throws DomainError naming the first
/// offending coefficient when c1, c2, c4 or g is not strictly positive, or
/// c3 is negative.
ShankParams derive_params_from_coefficients(const AnthroCoefficients& c,
                                            double g = kStandardGravity);

/// Recomputes (c1, c2, c3, c4) from shank parameters.
AnthroCoefficients coefficients_from_params(const ShankParams& s, double g);

/// "ANTHRO-1": shank side derived from the default coefficients at g = 9.81,
/// thigh side filled with fixed defaults (m1 = 7.0 kg, a1 = 0.25 m,
/// I1 = 0.15 kg m^2, l2 = 0.45 m). The thigh values are configuration, not
/// measurements.
SegmentParams anthro1_params();

/// Default damper mounting used when a parameter file omits damper keys.
DamperGeometry default_damper();

ValidationReport validate_params(const SegmentParams& p);
ValidationReport validate_damper(const DamperGeometry& d);

struct ParamSet {
  SegmentParams segments = anthro1_params();
  DamperGeometry damper = default_damper();
};

/// Parses flat `key = value` lines. Recognised keys: m1 m2 a1 a2 I1 I2 l1 l2
/// g s b beta ld. Blank lines and `#` comments are ignored; keys that are
/// absent keep their ANTHRO-1 / default damper value. Unknown keys,
/// duplicate keys and malformed numbers throw DomainError with the line
/// number.
ParamSet parse_param_file(std::string_view text);

/// Canonical text form accepted by parse_param_file.
std::string format_param_file(const ParamSet& params);

}  // namespace gaitdyn
