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

#include "gaitdyn/signal_io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "gaitdyn/error.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn::io {
namespace {

constexpr const char* kModule = "signal-io";
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using spatial::GaitCycle;
using spatial::GaitEvents;
using spatial::RateSample;
using spatial::RateSignal;
using spatial::SegmentLabel;
using text::format_number;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row

  std::optional<std::size_t> column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  }
};

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

Table parse_table(std::string_view text) {
  Table table;
  const auto all = text::lines(text);
  std::size_t i = 0;
  while (i < all.size() && text::trim(all[i]).empty()) ++i;
  if (i == all.size()) throw DomainError(kModule, "missing header row");
  for (auto field : text::split(all[i], ',')) {
    table.header.emplace_back(text::trim(field));
  }
  for (std::size_t a = 0; a < table.header.size(); ++a) {
    for (std::size_t b = a + 1; b < table.header.size(); ++b) {
      if (table.header[a] == table.header[b]) {
        throw DomainError(kModule, at_line(i + 1) + "duplicate column '" + table.header[a] + "'");
      }
    }
  }
  for (++i; i < all.size(); ++i) {
    if (text::trim(all[i]).empty()) continue;
    const auto fields = text::split(all[i], ',');
    if (fields.size() != table.header.size()) {
      throw DomainError(kModule, at_line(i + 1) + "malformed row: expected " +
                                     std::to_string(table.header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const auto v = text::parse_number(fields[c]);
      if (!v) {
        throw DomainError(kModule, at_line(i + 1) + "malformed row: bad value '" +
                                       std::string(text::trim(fields[c])) + "' in column '" +
                                       table.header[c] + "'");
      }
      row.push_back(*v);
    }
    table.rows.push_back(std::move(row));
    table.line_numbers.push_back(i + 1);
  }
  return table;
}

std::size_t require_column(const Table& t, std::string_view name) {
  const auto c = t.column(name);
  if (!c) throw DomainError(kModule, "missing required column '" + std::string(name) + "'");
  return *c;
}

void reject_unknown_columns(const Table& t, std::initializer_list<std::string_view> known) {
  for (const auto& h : t.header) {
    if (std::find(known.begin(), known.end(), h) == known.end()) {
      throw DomainError(kModule, "line 1: unknown column '" + h + "'");
    }
  }
}

void require_increasing_time(const Table& t, std::size_t col) {
  for (std::size_t r = 1; r < t.rows.size(); ++r) {
    if (!(t.rows[r][col] > t.rows[r - 1][col])) {
      throw DomainError(kModule, at_line(t.line_numbers[r]) + "non-monotone time " +
                                     format_number(t.rows[r][col]));
    }
  }
}

std::vector<TimedValue> state_series(const Trajectory& traj, double JointState::*field) {
  std::vector<TimedValue> out;
  out.reserve(traj.rows.size());
  for (const auto& row : traj.rows) out.push_back({row.t, row.state.*field});
  return out;
}

// Zero crossing of the rate between samples a and b by linear interpolation.
double zero_crossing(const RateSample& a, const RateSample& b) {
  const double dr = b.rate - a.rate;
  if (dr == 0.0) return a.t;
  return a.t + (-a.rate / dr) * (b.t - a.t);
}

}  // namespace

Trajectory parse_trajectory_csv(std::string_view text) {
  const Table table = parse_table(text);
  reject_unknown_columns(table, {"t", "theta_t", "theta_s", "dtheta_t", "dtheta_s",
                                 "ddtheta_t", "ddtheta_s"});
  const std::size_t tc = require_column(table, "t");
  const std::size_t thc = require_column(table, "theta_t");
  const std::size_t tsc = require_column(table, "theta_s");
  if (table.rows.empty()) throw DomainError(kModule, "trajectory has no data rows");
  require_increasing_time(table, tc);

  Trajectory traj;
  traj.source = TrajectorySource::Measured;
  traj.rows.resize(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    traj.rows[r].t = table.rows[r][tc];
    traj.rows[r].state.theta_t = table.rows[r][thc];
    traj.rows[r].state.theta_s = table.rows[r][tsc];
  }

  // Each derivative column is either copied verbatim or differentiated from
  // the column one order below.
  struct Derived {
    const char* name;
    double JointState::*target;
    double JointState::*source;
  };
  const Derived derived[] = {
      {"dtheta_t", &JointState::dtheta_t, &JointState::theta_t},
      {"dtheta_s", &JointState::dtheta_s, &JointState::theta_s},
      {"ddtheta_t", &JointState::ddtheta_t, &JointState::dtheta_t},
      {"ddtheta_s", &JointState::ddtheta_s, &JointState::dtheta_s},
  };
  for (const auto& d : derived) {
    if (const auto col = table.column(d.name)) {
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        traj.rows[r].state.*d.target = table.rows[r][*col];
      }
    } else {
      const auto diff = central_difference(state_series(traj, d.source));
      for (std::size_t r = 0; r < diff.size(); ++r) traj.rows[r].state.*d.target = diff[r].value;
    }
  }
  return traj;
}

std::string write_trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "t,theta_t,theta_s,dtheta_t,dtheta_s,ddtheta_t,ddtheta_s\n";
  for (const auto& row : traj.rows) {
    const auto& s = row.state;
    os << format_number(row.t) << ',' << format_number(s.theta_t) << ','
       << format_number(s.theta_s) << ',' << format_number(s.dtheta_t) << ','
       << format_number(s.dtheta_s) << ',' << format_number(s.ddtheta_t) << ','
       << format_number(s.ddtheta_s) << '\n';
  }
  return os.str();
}

std::vector<TimedValue> parse_series_csv(std::string_view text, std::string_view column) {
  const Table table = parse_table(text);
  if (table.header.size() != 2 || table.header[0] != "t" || table.header[1] != column) {
    throw DomainError(kModule, "line 1: expected header 't," + std::string(column) + "'");
  }
  require_increasing_time(table, 0);
  std::vector<TimedValue> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.push_back({row[0], row[1]});
  return out;
}

RatePair parse_rate_csv(std::string_view text) {
  const Table table = parse_table(text);
  reject_unknown_columns(table, {"t", "rate_thigh", "rate_shank"});
  const std::size_t tc = require_column(table, "t");
  const std::size_t thc = require_column(table, "rate_thigh");
  const std::size_t shc = require_column(table, "rate_shank");
  if (table.rows.empty()) throw DomainError(kModule, "empty signal: no data rows");
  require_increasing_time(table, tc);

  RatePair out;
  out.thigh.label = SegmentLabel::Thigh;
  out.shank.label = SegmentLabel::Shank;
  for (const auto& row : table.rows) {
    out.thigh.samples.push_back({row[tc], row[thc]});
    out.shank.samples.push_back({row[tc], row[shc]});
  }
  return out;
}

std::string write_rate_csv(const RateSignal& thigh, const RateSignal& shank) {
  if (thigh.samples.size() != shank.samples.size()) {
    throw DomainError(kModule, "thigh and shank signals differ in length");
  }
  std::ostringstream os;
  os << "t,rate_thigh,rate_shank\n";
  for (std::size_t i = 0; i < thigh.samples.size(); ++i) {
    if (thigh.samples[i].t != shank.samples[i].t) {
      throw DomainError(kModule, "thigh and shank timestamps differ at index " + std::to_string(i));
    }
    os << format_number(thigh.samples[i].t) << ',' << format_number(thigh.samples[i].rate)
       << ',' << format_number(shank.samples[i].rate) << '\n';
  }
  return os.str();
}

GaitEvents parse_events_csv(std::string_view text) {
  const Table table = parse_table(text);
  reject_unknown_columns(table, {"cycle", "to_time", "hs_time", "cycle_end"});
  const std::size_t cc = require_column(table, "cycle");
  const std::size_t toc = require_column(table, "to_time");
  const std::size_t hsc = require_column(table, "hs_time");
  const std::size_t endc = require_column(table, "cycle_end");

  GaitEvents ev;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const double label = row[cc];
    if (label != std::floor(label) || label < 0) {
      throw DomainError(kModule, at_line(table.line_numbers[r]) + "cycle index must be a non-negative integer");
    }
    const std::string tag = at_line(table.line_numbers[r]) + "cycle " + format_number(label) + ": ";
    const GaitCycle c{row[toc], row[hsc], row[endc]};
    if (!(c.to_time < c.hs_time && c.hs_time < c.cycle_end)) {
      throw DomainError(kModule, tag + "order violation, require to_time < hs_time < cycle_end");
    }
    if (!ev.cycles.empty() && c.to_time < ev.cycles.back().cycle_end) {
      throw DomainError(kModule, tag + "overlaps the previous cycle");
    }
    ev.cycles.push_back(c);
  }
  return ev;
}

std::string write_events_csv(const GaitEvents& events) {
  std::ostringstream os;
  os << "cycle,to_time,hs_time,cycle_end\n";
  for (std::size_t n = 0; n < events.cycles.size(); ++n) {
    const auto& c = events.cycles[n];
    os << n << ',' << format_number(c.to_time) << ',' << format_number(c.hs_time) << ','
       << format_number(c.cycle_end) << '\n';
  }
  return os.str();
}

std::vector<TimedValue> central_difference(const std::vector<TimedValue>& series) {
  const std::size_t n = series.size();
  if (n < 3) {
    throw DomainError(kModule, "too few samples for differentiation (need >= 3, got " +
                                   std::to_string(n) + ")");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(series[i].t > series[i - 1].t)) {
      throw DomainError(kModule, "non-monotone time at index " + std::to_string(i));
    }
  }
  std::vector<TimedValue> out(n);
  out[0] = {series[0].t, (series[1].value - series[0].value) / (series[1].t - series[0].t)};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = {series[i].t, (series[i + 1].value - series[i - 1].value) /
                               (series[i + 1].t - series[i - 1].t)};
  }
  out[n - 1] = {series[n - 1].t, (series[n - 1].value - series[n - 2].value) /
                                     (series[n - 1].t - series[n - 2].t)};
  return out;
}

GaitEvents detect_events(const RateSignal& thigh, double threshold, double min_gap) {
  const auto& s = thigh.samples;
  const std::size_t n = s.size();

  struct Swing {
    double to = 0.0;
    double hs = 0.0;
  };
  std::vector<Swing> swings;
  std::size_t i = 0;
  while (i < n) {
    if (!(s[i].rate > threshold)) {
      ++i;
      continue;
    }
    std::size_t onset = i;
    while (onset > 0 && s[onset - 1].rate > 0.0) --onset;
    std::size_t end = i + 1;
    while (end < n && s[end].rate > 0.0) ++end;
    if (end == n) break;  // swing still in progress when the signal stops
    if (onset > 0) {
      swings.push_back({zero_crossing(s[onset - 1], s[onset]), zero_crossing(s[end - 1], s[end])});
    }
    i = end;
  }

  std::vector<Swing> accepted;
  for (const auto& sw : swings) {
    if (accepted.empty() || sw.to - accepted.back().to >= min_gap) accepted.push_back(sw);
  }

  GaitEvents ev;
  for (std::size_t k = 0; k + 1 < accepted.size(); ++k) {
    ev.cycles.push_back({accepted[k].to, accepted[k].hs, accepted[k + 1].to});
  }
  return ev;
}

void validate_synth_spec(const SynthGaitSpec& spec) {
  if (!(spec.cycle_duration > 0.0)) throw DomainError(kModule, "cycle_duration must be > 0");
  if (spec.n_cycles < 0) throw DomainError(kModule, "n_cycles must be >= 0");
  if (!(spec.sample_rate > 0.0)) throw DomainError(kModule, "sample_rate must be > 0");
  if (!(spec.swing_fraction > 0.0 && spec.swing_fraction < 1.0)) {
    throw DomainError(kModule, "swing_fraction must lie in (0, 1)");
  }
  if (!std::isfinite(spec.hip_amplitude) || !std::isfinite(spec.knee_amplitude)) {
    throw DomainError(kModule, "amplitudes must be finite");
  }
  if (!(spec.rate_noise_std >= 0.0)) throw DomainError(kModule, "rate_noise_std must be >= 0");
}

namespace {

struct ProfileSample {
  double angle = 0.0;
  double rate = 0.0;
  double accel = 0.0;
};

// Cycloidal swing-up / stance-down profile centred on `mean`.
class CycloidProfile {
 public:
  CycloidProfile(const SynthGaitSpec& spec, double amplitude, double mean)
      : cycle_(spec.cycle_duration),
        swing_(spec.swing_fraction * spec.cycle_duration),
        stance_(spec.cycle_duration - swing_),
        cycles_(spec.n_cycles),
        amplitude_(amplitude),
        low_(mean - 0.5 * amplitude) {}

  ProfileSample at(double t) const {
    const int n = std::clamp(static_cast<int>(std::floor(t / cycle_)), 0, cycles_ - 1);
    const double tau = t - n * cycle_;
    if (tau <= swing_) return phase(tau / swing_, swing_, low_, +1.0);
    return phase((tau - swing_) / stance_, stance_, low_ + amplitude_, -1.0);
  }

 private:
  ProfileSample phase(double u, double duration, double start, double sign) const {
    const double a = sign * amplitude_;
    return {start + a * (u - std::sin(kTwoPi * u) / kTwoPi),
            a / duration * (1.0 - std::cos(kTwoPi * u)),
            a / (duration * duration) * kTwoPi * std::sin(kTwoPi * u)};
  }

  double cycle_, swing_, stance_;
  int cycles_;
  double amplitude_, low_;
};

}  // namespace

SynthGait synth_gait(const SynthGaitSpec& spec) {
  validate_synth_spec(spec);
  SynthGait out;
  out.trajectory.source = TrajectorySource::Synthetic;
  out.thigh.label = SegmentLabel::Thigh;
  out.shank.label = SegmentLabel::Shank;
  if (spec.n_cycles == 0) return out;

  const CycloidProfile thigh(spec, spec.hip_amplitude, spec.phase_offsets.thigh);
  const CycloidProfile shank(spec, spec.knee_amplitude, spec.phase_offsets.shank);

  const double span = spec.n_cycles * spec.cycle_duration;
  const auto last = static_cast<std::size_t>(std::ceil(span * spec.sample_rate - 1e-9));

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, spec.rate_noise_std > 0.0 ? spec.rate_noise_std : 1.0);

  out.trajectory.rows.reserve(last + 1);
  out.thigh.samples.reserve(last + 1);
  out.shank.samples.reserve(last + 1);
  for (std::size_t i = 0; i <= last; ++i) {
    const double t = static_cast<double>(i) / spec.sample_rate;
    const auto th = thigh.at(t);
    const auto sh = shank.at(t);
    out.trajectory.rows.push_back(
        {t, JointState{th.angle, sh.angle, th.rate, sh.rate, th.accel, sh.accel}});
    double thigh_rate = th.rate;
    double shank_rate = sh.rate;
    if (spec.rate_noise_std > 0.0) {
      thigh_rate += noise(rng);
      shank_rate += noise(rng);
    }
    out.thigh.samples.push_back({t, thigh_rate});
    out.shank.samples.push_back({t, shank_rate});
  }

  const double swing = spec.swing_fraction * spec.cycle_duration;
  for (int n = 0; n < spec.n_cycles; ++n) {
    const double start = n * spec.cycle_duration;
    out.events.cycles.push_back({start, start + swing, start + spec.cycle_duration});
    out.truth.push_back({spec.hip_amplitude, spec.knee_amplitude, -spec.hip_amplitude,
                         -spec.knee_amplitude});
  }
  return out;
}

}  // namespace gaitdyn::io
