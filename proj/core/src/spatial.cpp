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

#include "gaitdyn/spatial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gaitdyn/error.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn::spatial {
namespace {

constexpr const char* kModule = "spatial";
constexpr double kPi = std::numbers::pi;

std::string num(double v) { return text::format_number(v); }

bool inside_open_pi(double angle) { return angle > 0.0 && angle < kPi; }

// Ankle position relative to the hip, segment angles from the downward
// vertical.
std::array<double, 2> ankle_offset(double l1, double l2, double thigh,
                                   double shank) {
  return {l1 * std::sin(thigh) + l2 * std::sin(shank),
          -l1 * std::cos(thigh) - l2 * std::cos(shank)};
}

double forward_kinematic_displacement(const SpatialConfig& cfg,
                                      double thigh_rotation,
                                      double shank_rotation) {
  const auto& m = cfg.posture;
  const auto start = ankle_offset(cfg.l1, cfg.l2, m.thigh - 0.5 * thigh_rotation,
                                  m.shank - 0.5 * shank_rotation);
  const auto end = ankle_offset(cfg.l1, cfg.l2, m.thigh + 0.5 * thigh_rotation,
                                m.shank + 0.5 * shank_rotation);
  return std::hypot(end[0] - start[0], end[1] - start[1]);
}

double cosine_form(double p, double q, double angle) {
  const double radicand = p * p + q * q + p * q * std::cos(angle);
  if (radicand < 0.0) {
    throw DomainError(kModule, "negative radicand " + num(radicand) + " in distance formula");
  }
  return std::sqrt(radicand);
}

TriangleSolution sine_rule(double D, double alpha, double gamma, double phi,
                           const char* which) {
  if (!(D >= 0.0)) {
    throw DomainError(kModule, std::string(which) + " triangle: chord must be >= 0");
  }
  if (!inside_open_pi(alpha)) {
    throw DomainError(kModule, std::string("degenerate ") + which +
                                   " triangle: alpha = " + num(alpha) + " outside (0, pi)");
  }
  if (!inside_open_pi(gamma) || !inside_open_pi(phi)) {
    throw DomainError(kModule, std::string("degenerate ") + which + " triangle: gamma = " +
                                   num(gamma) + ", phi = " + num(phi) + " must lie in (0, pi)");
  }
  const double ratio = D / std::sin(alpha);
  return {ratio * std::sin(gamma), ratio * std::sin(phi), gamma, phi, D};
}

}  // namespace

void validate_signal(const RateSignal& sig) {
  for (std::size_t i = 0; i < sig.samples.size(); ++i) {
    const auto& s = sig.samples[i];
    if (!std::isfinite(s.t) || !std::isfinite(s.rate)) {
      throw DomainError(kModule, "non-finite sample at index " + std::to_string(i));
    }
    if (i > 0 && !(s.t > sig.samples[i - 1].t)) {
      throw DomainError(kModule, "timestamps not strictly increasing at index " +
                                     std::to_string(i));
    }
  }
}

void validate_events(const GaitEvents& ev) {
  for (std::size_t n = 0; n < ev.cycles.size(); ++n) {
    const auto& c = ev.cycles[n];
    const std::string tag = "cycle " + std::to_string(n) + ": ";
    if (!(c.to_time < c.hs_time && c.hs_time < c.cycle_end)) {
      throw DomainError(kModule, tag + "require to_time < hs_time < cycle_end");
    }
    if (n > 0 && c.to_time < ev.cycles[n - 1].cycle_end) {
      throw DomainError(kModule, tag + "overlaps the previous cycle");
    }
  }
}

SpatialConfig SpatialConfig::make(double l1, double l2, SpatialMode mode) {
  SpatialConfig cfg;
  cfg.mode = mode;
  cfg.l1 = l1;
  cfg.l2 = l2;
  cfg.h_L = l1 + l2;
  return cfg;
}

void validate_config(const SpatialConfig& cfg) {
  if (!(cfg.h_L > 0.0)) throw DomainError(kModule, "h_L must be > 0");
  if (!(cfg.l1 > 0.0) || !(cfg.l2 > 0.0)) {
    throw DomainError(kModule, "segment lengths must be > 0");
  }
  if (!std::isfinite(cfg.posture.thigh) || !std::isfinite(cfg.posture.shank)) {
    throw DomainError(kModule, "posture angles must be finite");
  }
}

double integrate_rotation(const RateSignal& sig, double t0, double t1) {
  if (!(t0 < t1)) {
    throw DomainError(kModule, "empty integration window [" + num(t0) + ", " + num(t1) + "]");
  }
  const auto& s = sig.samples;
  if (s.size() < 2) {
    throw DomainError(kModule, "integration window outside signal span (fewer than 2 samples)");
  }
  // Event times round-tripped through text may sit a hair outside the span.
  const double slack = 1e-9 * std::max({1.0, std::abs(s.front().t), std::abs(s.back().t)});
  if (t0 < s.front().t - slack || t1 > s.back().t + slack) {
    throw DomainError(kModule, "integration window [" + num(t0) + ", " + num(t1) +
                                   "] outside signal span [" + num(s.front().t) + ", " +
                                   num(s.back().t) + "]");
  }
  t0 = std::max(t0, s.front().t);
  t1 = std::min(t1, s.back().t);

  auto rate_in_segment = [&](std::size_t k, double t) {
    const double w = (t - s[k].t) / (s[k + 1].t - s[k].t);
    return s[k].rate + w * (s[k + 1].rate - s[k].rate);
  };

  const auto after = std::upper_bound(s.begin(), s.end(), t0,
                                      [](double t, const RateSample& x) { return t < x.t; });
  std::size_t k = static_cast<std::size_t>(std::distance(s.begin(), after));
  k = std::clamp<std::size_t>(k == 0 ? 0 : k - 1, 0, s.size() - 2);

  double total = 0.0;
  double left_t = t0;
  double left_rate = rate_in_segment(k, t0);
  while (true) {
    const double seg_end = s[k + 1].t;
    if (t1 <= seg_end || k + 2 == s.size()) {
      total += 0.5 * (left_rate + rate_in_segment(k, t1)) * (t1 - left_t);
      break;
    }
    total += 0.5 * (left_rate + s[k + 1].rate) * (seg_end - left_t);
    left_t = seg_end;
    left_rate = s[k + 1].rate;
    ++k;
  }
  return total;
}

double chord_length(double l, double angle, SpatialMode mode) {
  if (!(l > 0.0)) throw DomainError(kModule, "chord segment length must be > 0");
  if (mode == SpatialMode::PaperFormula) return std::abs(2.0 * l * std::cos(angle / 2.0));
  return std::abs(2.0 * l * std::sin(angle / 2.0));
}

TriangleSolution solve_swing_triangle(double D, double alpha, double beta) {
  const double phi = (kPi - beta) / 2.0;
  const double gamma = (kPi - 2.0 * alpha + beta) / 2.0;
  return sine_rule(D, alpha, gamma, phi, "swing");
}

TriangleSolution solve_stance_triangle(double D, double alpha, double beta) {
  const double phi = (kPi - alpha) / 2.0;
  const double gamma = (kPi - 2.0 * beta + alpha) / 2.0;
  return sine_rule(D, alpha, gamma, phi, "stance");
}

double swing_distance(double x1, double x2, double thigh_rotation,
                      double shank_rotation, const SpatialConfig& cfg) {
  if (cfg.mode == SpatialMode::GeometricOracle) {
    return forward_kinematic_displacement(cfg, thigh_rotation, shank_rotation);
  }
  if (x1 < 0.0 || x2 < 0.0) throw DomainError(kModule, "swing distance: x1, x2 must be >= 0");
  return cosine_form(cfg.l2 + x1, cfg.l2 + x2, thigh_rotation);
}

double stance_distance(double x1, double x2, double thigh_rotation,
                       double shank_rotation, const SpatialConfig& cfg) {
  if (cfg.mode == SpatialMode::GeometricOracle) {
    return forward_kinematic_displacement(cfg, thigh_rotation, shank_rotation);
  }
  if (x1 < 0.0 || x2 < 0.0) throw DomainError(kModule, "stance distance: x1, x2 must be >= 0");
  return cosine_form(cfg.l1 + x2, cfg.l1 + x1, thigh_rotation);
}

double heron_area_sides(double a, double b, double c) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0)) {
    throw DomainError(kModule, "triangle sides must be >= 0");
  }
  // Kahan's ordering of Heron's formula: a >= b >= c.
  std::array<double, 3> s = {a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const auto [x, y, z] = s;
  if (x > y + z) {
    throw DomainError(kModule, "triangle inequality violated for sides " + num(a) + ", " +
                                   num(b) + ", " + num(c));
  }
  const double product = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(product, 0.0));
}

double heron_area(double l1, double l2, double included_angle) {
  const double c2 = l1 * l1 + l2 * l2 - l1 * l2 * std::cos(included_angle);
  return heron_area_sides(l1, l2, std::sqrt(std::max(c2, 0.0)));
}

SwingArea swing_area(const SpatialConfig& cfg, double a1, double gamma,
                     double beta_plus_phi, double heron) {
  SwingArea out;
  out.closed_form = cfg.h_L * a1 - heron;

  const double l1 = cfg.l1;
  const double l2 = cfg.l2;
  const double knee_x = l2 * std::cos(gamma);
  const double knee_y = l2 * std::sin(gamma);
  const double upper = l1 * beta_plus_phi;
  const double denom = knee_x - l1 * std::sin(beta_plus_phi);
  if (denom == 0.0) throw DomainError(kModule, "swing area: vertical second segment (zero slope denominator)");
  const double slope = (knee_y + l1 * std::cos(beta_plus_phi)) / denom;
  if (!(0.0 <= knee_x) || !(knee_x <= upper)) {
    throw DomainError(kModule, "swing area: integration bounds inverted (0, " + num(knee_x) +
                                   ", " + num(upper) + ")");
  }
  const double tan_gamma = std::tan(gamma);
  auto first = quadrature::adaptive_trapezoid([&](double x) { return tan_gamma * x; }, 0.0, knee_x);
  auto second = quadrature::adaptive_trapezoid(
      [&](double x) { return slope * (x - knee_x) + knee_y; }, knee_x, upper);
  out.quadrature.value = first.value + second.value;
  out.quadrature.last_difference = std::max(first.last_difference, second.last_difference);
  out.quadrature.intervals = first.intervals + second.intervals;
  out.quadrature.converged = first.converged && second.converged;
  return out;
}

StanceArea stance_area(const SpatialConfig& cfg, double a1,
                       const StanceAngles& ang, double heron) {
  const double l1 = cfg.l1;
  const double span = l1 + cfg.l2;
  const double denom = l1 * std::cos(ang.beta + ang.phi) - std::sin(ang.alpha / 2.0) * span;
  if (denom == 0.0) throw DomainError(kModule, "stance area: zero slope denominator");
  const double lift = l1 * std::sin(ang.beta + ang.gamma);
  const double slope = lift / denom;
  const double shift = -l1 * std::cos(ang.beta + ang.phi) + lift;
  const double upper = std::sin(ang.beta / 2.0) * span;
  if (!(a1 <= upper)) {
    throw DomainError(kModule, "stance area: integration bounds inverted (" + num(a1) + " > " +
                                   num(upper) + ")");
  }
  StanceArea out;
  out.quadrature = quadrature::adaptive_trapezoid(
      [&](double x) { return slope * (x + shift); }, a1, upper);
  out.value = out.quadrature.value + 0.5 * a1 * cfg.h_L - heron;
  return out;
}

std::vector<SpatialMetrics> stride_metrics(const RateSignal& thigh,
                                           const RateSignal& shank,
                                           const GaitEvents& events,
                                           const SpatialConfig& cfg) {
  validate_signal(thigh);
  validate_signal(shank);
  validate_events(events);
  validate_config(cfg);

  std::vector<SpatialMetrics> out;
  out.reserve(events.cycles.size());
  for (std::size_t n = 0; n < events.cycles.size(); ++n) {
    const auto& c = events.cycles[n];
    try {
      SpatialMetrics m;
      m.n = n;
      m.alpha = integrate_rotation(thigh, c.to_time, c.hs_time);
      m.beta = integrate_rotation(shank, c.to_time, c.hs_time);
      const double stance_alpha = integrate_rotation(shank, c.hs_time, c.cycle_end);
      const double stance_beta = integrate_rotation(thigh, c.hs_time, c.cycle_end);

      const double sw_a = std::abs(m.alpha);
      const double sw_b = std::abs(m.beta);
      const double st_a = std::abs(stance_alpha);
      const double st_b = std::abs(stance_beta);

      // Triangle angles depend only on the rotations.
      TriangleSolution swing_tri{0.0, 0.0, (kPi - 2.0 * sw_a + sw_b) / 2.0, (kPi - sw_b) / 2.0, 0.0};
      TriangleSolution stance_tri{0.0, 0.0, (kPi - 2.0 * st_b + st_a) / 2.0, (kPi - st_a) / 2.0, 0.0};

      if (cfg.mode == SpatialMode::PaperFormula) {
        swing_tri = solve_swing_triangle(chord_length(cfg.l1, sw_b, cfg.mode), sw_a, sw_b);
        stance_tri = solve_stance_triangle(chord_length(cfg.l2, st_a, cfg.mode), st_a, st_b);
        m.a_swing = swing_distance(swing_tri.x1, swing_tri.x2, sw_a, sw_b, cfg);
        m.a_stance = stance_distance(stance_tri.x1, stance_tri.x2, st_b, st_a, cfg);
      } else {
        m.a_swing = swing_distance(0.0, 0.0, m.alpha, m.beta, cfg);
        m.a_stance = stance_distance(0.0, 0.0, stance_beta, stance_alpha, cfg);
      }

      const double heron = heron_area(cfg.l1, cfg.l2, 2.0 * sw_a - sw_b);
      const double a1 = chord_length(cfg.l1, sw_a, cfg.mode);
      m.area_swing = cfg.h_L * a1 - heron;
      try {
        m.area_stance =
            stance_area(cfg, a1, {st_a, st_b, stance_tri.gamma, stance_tri.phi}, heron).value;
      } catch (const DomainError&) {
        m.area_stance.reset();
      }

      m.stride_length = m.a_swing + m.a_stance;
      m.stride_velocity = m.stride_length / (c.cycle_end - c.to_time);
      out.push_back(m);
    } catch (const DomainError& e) {
      throw DomainError(kModule, "cycle " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace gaitdyn::spatial
