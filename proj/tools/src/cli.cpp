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

#include "gaitdyn_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "gaitdyn/dynamics.hpp"
#include "gaitdyn/error.hpp"
#include "gaitdyn/estimation.hpp"
#include "gaitdyn/model.hpp"
#include "gaitdyn/signal_io.hpp"
#include "gaitdyn/simulate.hpp"
#include "gaitdyn/text_format.hpp"

namespace gaitdyn::cli {
namespace {

constexpr const char* kModule = "cli";
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;

using text::format_number;

struct Options {
  std::string params;
  std::string trajectory;
  std::string rates;
  std::string events;
  std::string mode = "paper";
  std::string out;
  double dt = 1e-4;
  double duration = 1.0;
  std::optional<double> k_flex;
  bool degrees = false;
  std::uint64_t seed = 0;
  int cycles = 10;
  double sample_rate = 1000.0;
  double noise = 0.0;
  std::optional<double> h_l;
  double thigh_mean = 0.0;
  double shank_mean = 0.0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(kModule, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw DomainError(kModule, "cannot write '" + tmp.string() + "'");
    o << content;
    o.flush();
    if (!o) throw DomainError(kModule, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DomainError(kModule, "cannot replace '" + path + "'");
  }
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out.empty()) {
    out << content;
  } else {
    write_atomic(o.out, content);
  }
}

std::string describe(const ValidationReport& r) {
  std::string s;
  for (const auto& v : r.violations) {
    if (!s.empty()) s += "; ";
    s += v.field + ": " + v.description;
  }
  return s;
}

ParamSet load_params(const Options& o) {
  ParamSet ps = o.params.empty() ? ParamSet{} : parse_param_file(read_file(o.params));
  const auto seg = validate_params(ps.segments);
  if (!seg.ok()) throw DomainError("model-core", "invalid parameters: " + describe(seg));
  const auto dmp = validate_damper(ps.damper);
  if (!dmp.ok()) throw DomainError("model-core", "invalid damper geometry: " + describe(dmp));
  return ps;
}

void scale_angles(JointState& st, double k) {
  st.theta_t *= k;
  st.theta_s *= k;
  st.dtheta_t *= k;
  st.dtheta_s *= k;
  st.ddtheta_t *= k;
  st.ddtheta_s *= k;
}

void scale_rates(spatial::RateSignal& sig, double k) {
  for (auto& s : sig.samples) s.rate *= k;
}

int cmd_torque(const Options& o, std::ostream& out) {
  const auto p = load_params(o).segments;
  auto traj = io::parse_trajectory_csv(read_file(o.trajectory));
  std::ostringstream os;
  os << "t,gamma_hip,gamma_knee,tau_knee_swing\n";
  for (auto& row : traj.rows) {
    if (o.degrees) scale_angles(row.state, kDegToRad);
    const auto g = dynamics::inverse_dynamics(p, row.state);
    os << format_number(row.t) << ',' << format_number(g.v1) << ',' << format_number(g.v2) << ','
       << format_number(dynamics::swing_knee_torque(p, row.state)) << '\n';
  }
  emit(o, os.str(), out);
  return kExitOk;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  const auto p = load_params(o).segments;
  auto series = io::parse_series_csv(read_file(o.trajectory), "theta2");
  if (o.degrees) {
    for (auto& s : series) s.value *= kDegToRad;
  }
  const auto theta1 = estimation::estimate_series(series, {p.l1, p.l2});
  const auto rate = io::central_difference(theta1);
  const auto accel = io::central_difference(rate);
  const double k = o.degrees ? kRadToDeg : 1.0;
  std::ostringstream os;
  os << "t,theta1,dtheta1,ddtheta1\n";
  for (std::size_t i = 0; i < theta1.size(); ++i) {
    os << format_number(theta1[i].t) << ',' << format_number(k * theta1[i].value) << ','
       << format_number(k * rate[i].value) << ',' << format_number(k * accel[i].value) << '\n';
  }
  emit(o, os.str(), out);
  return kExitOk;
}

int cmd_spatial(const Options& o, std::ostream& out) {
  const auto p = load_params(o).segments;
  auto rates = io::parse_rate_csv(read_file(o.rates));
  if (o.degrees) {
    scale_rates(rates.thigh, kDegToRad);
    scale_rates(rates.shank, kDegToRad);
  }
  const auto events = o.events.empty() ? io::detect_events(rates.thigh)
                                       : io::parse_events_csv(read_file(o.events));
  auto cfg = spatial::SpatialConfig::make(
      p.l1, p.l2,
      o.mode == "geometric" ? spatial::SpatialMode::GeometricOracle
                            : spatial::SpatialMode::PaperFormula);
  if (o.h_l) cfg.h_L = *o.h_l;
  const double k = o.degrees ? kDegToRad : 1.0;
  cfg.posture = {k * o.thigh_mean, k * o.shank_mean};
  emit(o, metrics_json(spatial::stride_metrics(rates.thigh, rates.shank, events, cfg)), out);
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const auto p = load_params(o).segments;
  sim::SimConfig cfg;
  cfg.dt = o.dt;
  cfg.duration = o.duration;
  cfg.initial = {0.3, -0.2};
  cfg.leg = {p.l2, p.l1 + p.l2};
  if (o.k_flex) {
    cfg.controller_enabled = true;
    cfg.controller.k_flex = *o.k_flex;
  }
  const auto r = sim::simulate_swing(p, cfg);
  const double k = o.degrees ? kRadToDeg : 1.0;
  std::ostringstream os;
  os << "t,theta_t,theta_s,dtheta_t,dtheta_s,energy,tau_hip,tau_knee,phase\n";
  for (std::size_t i = 0; i < r.trajectory.rows.size(); ++i) {
    const auto& row = r.trajectory.rows[i];
    os << format_number(row.t) << ',' << format_number(k * row.state.theta_t) << ','
       << format_number(k * row.state.theta_s) << ',' << format_number(k * row.state.dtheta_t)
       << ',' << format_number(k * row.state.dtheta_s) << ','
       << format_number(r.energy_series[i].value) << ','
       << format_number(r.applied_torques[i].hip) << ','
       << format_number(r.applied_torques[i].knee) << ','
       << geometry::to_string(r.phase_series[i].phase) << '\n';
  }
  emit(o, os.str(), out);
  return kExitOk;
}

int cmd_synth(const Options& o) {
  io::SynthGaitSpec spec;
  spec.n_cycles = o.cycles;
  spec.sample_rate = o.sample_rate;
  spec.rate_noise_std = o.noise;
  spec.seed = o.seed;
  auto g = io::synth_gait(spec);
  if (o.degrees) {
    for (auto& row : g.trajectory.rows) scale_angles(row.state, kRadToDeg);
    scale_rates(g.thigh, kRadToDeg);
    scale_rates(g.shank, kRadToDeg);
  }
  write_atomic(o.out + ".trajectory.csv", io::write_trajectory_csv(g.trajectory));
  write_atomic(o.out + ".rates.csv", io::write_rate_csv(g.thigh, g.shank));
  write_atomic(o.out + ".events.csv", io::write_events_csv(g.events));
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ps = o.params.empty() ? ParamSet{} : parse_param_file(read_file(o.params));
  const auto& p = ps.segments;
  std::ostringstream os;
  bool ok = true;

  const auto seg = validate_params(p);
  const auto dmp = validate_damper(ps.damper);
  os << "params: " << (seg.ok() ? "ok" : describe(seg)) << '\n';
  os << "damper: " << (dmp.ok() ? "ok" : describe(dmp)) << '\n';
  ok = ok && seg.ok() && dmp.ok();

  if (seg.ok()) {
    std::mt19937_64 rng(o.seed);
    auto u = [&](double b) { return std::uniform_real_distribution<double>(-b, b)(rng); };
    constexpr double kPi = std::numbers::pi;
    double worst_oracle = 0.0;
    double worst_knee = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const JointState st{u(kPi), u(kPi), u(10.0), u(10.0), u(50.0), u(50.0)};
      const auto a = dynamics::inverse_dynamics(p, st);
      const auto b = dynamics::lagrangian_oracle(p, st);
      const double scale = std::max({std::abs(b.v1), std::abs(b.v2), 1.0});
      worst_oracle = std::max(
          worst_oracle, std::max(std::abs(a.v1 - b.v1), std::abs(a.v2 - b.v2)) / scale);
      worst_knee = std::max(worst_knee, std::abs(dynamics::swing_knee_torque(p, st) - a.v2));
    }
    const bool oracle_ok = worst_oracle < 1e-6;
    const bool knee_ok = worst_knee < 1e-12;
    os << "oracle sweep: max relative error " << format_number(worst_oracle)
       << (oracle_ok ? " ok" : " FAIL") << '\n';
    os << "knee row identity: max deviation " << format_number(worst_knee)
       << (knee_ok ? " ok" : " FAIL") << '\n';

    const ShankParams shank{p.m2, p.a2, p.l1, p.I2};
    const auto back = derive_params_from_coefficients(coefficients_from_params(shank, p.g), p.g);
    const double dev = std::max({std::abs(back.m2 - p.m2) / p.m2, std::abs(back.a2 - p.a2) / p.a2,
                                 std::abs(back.l1 - p.l1) / p.l1});
    const bool round_ok = dev < 1e-12 && back.I2 == p.I2;
    os << "coefficient round trip: max relative deviation " << format_number(dev)
       << (round_ok ? " ok" : " FAIL") << '\n';
    ok = ok && oracle_ok && knee_ok && round_ok;
  }
  emit(o, os.str(), out);
  if (!ok) {
    err << "validate: one or more checks failed\n";
    return kExitDomain;
  }
  return kExitOk;
}

void json_number(std::ostream& os, double v) {
  if (std::isfinite(v)) {
    os << format_number(v);
  } else {
    os << "null";
  }
}

}  // namespace

std::string metrics_json(const std::vector<spatial::SpatialMetrics>& metrics) {
  std::ostringstream os;
  os << "{\n  \"cycles\": [";
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const auto& m = metrics[i];
    os << (i == 0 ? "\n" : ",\n") << "    {\"n\": " << m.n << ", \"stride_length_m\": ";
    json_number(os, m.stride_length);
    os << ", \"stride_velocity_mps\": ";
    json_number(os, m.stride_velocity);
    os << ", \"a_swing_m\": ";
    json_number(os, m.a_swing);
    os << ", \"a_stance_m\": ";
    json_number(os, m.a_stance);
    os << ", \"area_swing_m2\": ";
    json_number(os, m.area_swing);
    os << ", \"area_stance_m2\": ";
    if (m.area_stance) {
      json_number(os, *m.area_stance);
    } else {
      os << "null";
    }
    os << ", \"alpha_rad\": ";
    json_number(os, m.alpha);
    os << ", \"beta_rad\": ";
    json_number(os, m.beta);
    os << '}';
  }
  os << (metrics.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar lower-limb gait dynamics toolkit", "gaitdyn"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* c) {
    c->add_option("--params", o.params, "parameter file (key = value); ANTHRO-1 if omitted");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file; stdout if omitted"); };
  auto add_degrees = [&](CLI::App* c) {
    c->add_flag("--degrees", o.degrees, "angle I/O in degrees instead of radians");
  };

  auto* torque = app.add_subcommand("torque", "inverse dynamics over a trajectory CSV");
  add_params(torque);
  torque->add_option("--trajectory", o.trajectory, "t,theta_t,theta_s[,derivatives] CSV")->required();
  add_degrees(torque);
  add_out(torque);

  auto* estimate = app.add_subcommand("estimate", "thigh angle from a t,theta2 series");
  add_params(estimate);
  estimate->add_option("--trajectory", o.trajectory, "t,theta2 CSV")->required();
  add_degrees(estimate);
  add_out(estimate);

  auto* spatial_cmd = app.add_subcommand("spatial", "stride metrics from rate and event CSVs");
  add_params(spatial_cmd);
  spatial_cmd->add_option("--rates", o.rates, "t,rate_thigh,rate_shank CSV")->required();
  spatial_cmd->add_option("--events", o.events, "cycle,to_time,hs_time,cycle_end CSV; detected if omitted");
  spatial_cmd->add_option("--mode", o.mode, "paper|geometric")
      ->check(CLI::IsMember({"paper", "geometric"}));
  spatial_cmd->add_option("--h-l", o.h_l, "height parameter [m]; l1 + l2 if omitted");
  spatial_cmd->add_option("--thigh-mean", o.thigh_mean, "mean thigh angle for geometric mode");
  spatial_cmd->add_option("--shank-mean", o.shank_mean, "mean shank angle for geometric mode");
  add_degrees(spatial_cmd);
  add_out(spatial_cmd);

  auto* simulate = app.add_subcommand("simulate", "forward swing simulation");
  add_params(simulate);
  simulate->add_option("--dt", o.dt, "time step [s]");
  simulate->add_option("--duration", o.duration, "horizon [s]");
  simulate->add_option("--k-flex", o.k_flex, "flexion gain; enables the controller");
  add_degrees(simulate);
  add_out(simulate);

  auto* synth = app.add_subcommand("synth", "write synthetic gait CSVs");
  synth->add_option("--out", o.out, "output prefix")->required();
  synth->add_option("--seed", o.seed, "noise seed");
  synth->add_option("--cycles", o.cycles, "number of gait cycles");
  synth->add_option("--sample-rate", o.sample_rate, "sampling rate [Hz]");
  synth->add_option("--noise", o.noise, "rate noise standard deviation [rad/s]");
  add_degrees(synth);

  auto* validate = app.add_subcommand("validate", "parameter and oracle self-checks");
  add_params(validate);
  validate->add_option("--seed", o.seed, "sweep seed");
  add_out(validate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (torque->parsed()) return cmd_torque(o, out);
    if (estimate->parsed()) return cmd_estimate(o, out);
    if (spatial_cmd->parsed()) return cmd_spatial(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (synth->parsed()) return cmd_synth(o);
    return cmd_validate(o, out, err);
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace gaitdyn::cli
