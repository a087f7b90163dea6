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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gaitdyn/dynamics.hpp"
#include "gaitdyn/signal_io.hpp"
#include "gaitdyn/simulate.hpp"
#include "gaitdyn/spatial.hpp"

namespace {

using namespace gaitdyn;

std::vector<JointState> states(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<JointState> out(n);
  for (auto& s : out) s = {3 * u(rng), 3 * u(rng), 10 * u(rng), 10 * u(rng), 50 * u(rng), 50 * u(rng)};
  return out;
}

void BM_InverseDynamics(benchmark::State& state) {
  const auto p = anthro1_params();
  const auto xs = states(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dynamics::inverse_dynamics(p, xs[i++ & 1023]));
  }
}
BENCHMARK(BM_InverseDynamics);

void BM_LagrangianOracle(benchmark::State& state) {
  const auto p = anthro1_params();
  const auto xs = states(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dynamics::lagrangian_oracle(p, xs[i++ & 1023]));
  }
}
BENCHMARK(BM_LagrangianOracle);

void BM_Rk4Step(benchmark::State& state) {
  const auto p = anthro1_params();
  sim::PlanarState x{0.3, -0.2, 0.0, 0.0};
  for (auto _ : state) {
    x = sim::rk4_step(p, x, {0.0, 0.0}, 1e-4);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_SimulateSwing(benchmark::State& state) {
  const auto p = anthro1_params();
  sim::SimConfig cfg;
  cfg.duration = 2.0;
  cfg.initial = {0.3, -0.2};
  for (auto _ : state) benchmark::DoNotOptimize(sim::simulate_swing(p, cfg));
}
BENCHMARK(BM_SimulateSwing)->Unit(benchmark::kMillisecond);

void BM_StrideMetrics(benchmark::State& state) {
  const auto g = io::synth_gait({});
  const auto p = anthro1_params();
  const auto cfg = spatial::SpatialConfig::make(p.l1, p.l2, spatial::SpatialMode::PaperFormula);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spatial::stride_metrics(g.thigh, g.shank, g.events, cfg));
  }
}
BENCHMARK(BM_StrideMetrics)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
