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

// Stride length, stride velocity, swing/stance distances and sagittal areas
// from thigh and shank angular-rate signals integrated over gait-event
// windows.
//
// Two evaluation modes are provided. PaperFormula transcribes the published
// closed forms literally (chord 2 l cos(angle/2), law-of-cosines with a "+"
// sign). GeometricOracle replaces the distance formulas with exact planar
// double-pendulum forward kinematics.

#include <optional>
#include <vector>

#include "gaitdyn/quadrature.hpp"

namespace gaitdyn::spatial {

enum class SegmentLabel { Thigh, Shank };

struct RateSample {
  double t = 0.0;     ///< [s]
  double rate = 0.0;  ///< [rad/s]

  bool operator==(const RateSample&) const = default;
};

struct RateSignal {
  std::vector<RateSample> samples;
  SegmentLabel label = SegmentLabel::Thigh;

  bool operator==(const RateSignal&) const = default;
};

/// Throws DomainError unless timestamps strictly increase and rates are
/// finite.
void validate_signal(const RateSignal& sig);

struct GaitCycle {
  double to_time = 0.0;    ///< toe-off, start of swing
  double hs_time = 0.0;    ///< heel strike, start of stance
  double cycle_end = 0.0;  ///< next toe-off

  bool operator==(const GaitCycle&) const = default;
};

struct GaitEvents {
  std::vector<GaitCycle> cycles;

  bool operator==(const GaitEvents&) const = default;
};

/// Throws DomainError (naming the cycle index) unless
/// to_time < hs_time < cycle_end within each cycle and cycles are ordered and
/// non-overlapping.
void validate_events(const GaitEvents& ev);

struct TriangleSolution {
  double x1 = 0.0;
  double x2 = 0.0;
  double gamma = 0.0;
  double phi = 0.0;
  double D = 0.0;  ///< chord
};

enum class SpatialMode { PaperFormula, GeometricOracle };

/// Mean absolute segment angles (from the downward vertical) about which the
/// segments rotate during each window. Used by GeometricOracle only.
struct PostureMean {
  double thigh = 0.0;
  double shank = 0.0;
};

struct SpatialConfig {
  SpatialMode mode = SpatialMode::PaperFormula;
  double h_L = 0.0;  ///< height parameter of the area formulas [m]
  double l1 = 0.0;   ///< thigh length [m]
  double l2 = 0.0;   ///< shank length [m]
  PostureMean posture;

  /// h_L defaults to l1 + l2 (standing hip height). This is a guess; the
  /// quantity has no published definition.
  static SpatialConfig make(double l1, double l2, SpatialMode mode);
};

void validate_config(const SpatialConfig& cfg);

struct SpatialMetrics {
  std::size_t n = 0;               ///< cycle index
  double stride_length = 0.0;      ///< [m]
  double stride_velocity = 0.0;    ///< [m/s]
  double a_swing = 0.0;            ///< [m]
  double a_stance = 0.0;           ///< [m]
  double area_swing = 0.0;         ///< [m^2]
  std::optional<double> area_stance;  ///< absent when its integral is undefined
  double alpha = 0.0;              ///< thigh rotation over swing [rad]
  double beta = 0.0;               ///< shank rotation over swing [rad]
};

/// Trapezoidal integral of the rate over [t0, t1], interpolating linearly at
/// endpoints that fall between samples. Exact for piecewise-linear rates.
double integrate_rotation(const RateSignal& sig, double t0, double t1);

/// PaperFormula: |2 l cos(angle/2)|. GeometricOracle: |2 l sin(angle/2)|,
/// the true chord swept by a segment of length l rotating by `angle`.
double chord_length(double l, double angle, SpatialMode mode);

/// phi = (pi - beta)/2, gamma = (pi - 2 alpha + beta)/2,
/// x1 = D sin(gamma)/sin(alpha), x2 = D sin(phi)/sin(alpha).
TriangleSolution solve_swing_triangle(double D, double alpha, double beta);

/// phi = (pi - alpha)/2, gamma = (pi - 2 beta + alpha)/2, same sine-rule
/// layout as the swing triangle.
TriangleSolution solve_stance_triangle(double D, double alpha, double beta);

/// PaperFormula: sqrt(p^2 + q^2 + p q cos(thigh_rotation)) with
/// p = l2 + x1, q = l2 + x2. GeometricOracle: Euclidean displacement of the
/// ankle relative to the hip between the window's start and end postures.
double swing_distance(double x1, double x2, double thigh_rotation,
                      double shank_rotation, const SpatialConfig& cfg);

/// PaperFormula: sqrt(p^2 + q^2 + p q cos(thigh_rotation)) with
/// p = l1 + x2, q = l1 + x1. GeometricOracle: displacement of the hip over
/// the planted ankle (inverted double pendulum).
double stance_distance(double x1, double x2, double thigh_rotation,
                       double shank_rotation, const SpatialConfig& cfg);

/// Heron area of the (l1, l2, c) triangle with
/// c = sqrt(l1^2 + l2^2 - l1 l2 cos(included_angle)).
double heron_area(double l1, double l2, double included_angle);

/// Heron area from three sides; DomainError when the triangle inequality is
/// violated. A degenerate (flat) triangle has area 0.
double heron_area_sides(double a, double b, double c);

struct SwingArea {
  double closed_form = 0.0;       ///< h_L a1 - A
  quadrature::Result quadrature;  ///< piecewise integral
};

/// Closed form h_L a1 - heron, reported with the piecewise integral
///   int_0^{l2 cos g} tan(g) x dx
///   + int_{l2 cos g}^{l1 (beta+phi)} [k (x - l2 cos g) + l2 sin g] dx,
///   k = (l2 sin g + l1 cos(beta+phi)) / (l2 cos g - l1 sin(beta+phi)).
SwingArea swing_area(const SpatialConfig& cfg, double a1, double gamma,
                     double beta_plus_phi, double heron);

struct StanceAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phi = 0.0;
};

struct StanceArea {
  double value = 0.0;  ///< integral + a1 h_L / 2 - heron
  quadrature::Result quadrature;
};

/// int_{a1}^{(l1+l2) sin(beta/2)} k (x - l1 cos(beta+phi) + l1 sin(beta+gamma)) dx
/// + a1 h_L / 2 - heron, with
/// k = l1 sin(beta+gamma) / (l1 cos(beta+phi) - sin(alpha/2)(l1+l2)).
StanceArea stance_area(const SpatialConfig& cfg, double a1,
                       const StanceAngles& angles, double heron);

/// Per-cycle pipeline. Swing window [to_time, hs_time] yields the thigh
/// rotation alpha and shank rotation beta; the stance window
/// [hs_time, cycle_end] is labelled the other way round (alpha from the
/// shank, beta from the thigh). Triangle solutions use rotation magnitudes.
/// stride_length = a_swing + a_stance, stride_velocity = stride_length /
/// (cycle_end - to_time). Errors are rethrown tagged with the cycle index.
std::vector<SpatialMetrics> stride_metrics(const RateSignal& thigh,
                                           const RateSignal& shank,
                                           const GaitEvents& events,
                                           const SpatialConfig& cfg);

}  // namespace gaitdyn::spatial
