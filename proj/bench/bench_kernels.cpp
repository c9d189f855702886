// Copyright 2026 The PCS Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "pcs/config.hpp"
#include "pcs/experiment.hpp"
#include "pcs/measurement.hpp"
#include "pcs/projections.hpp"
#include "pcs/rng.hpp"
#include "pcs/states.hpp"

namespace {

pcs::ShadowSampler make_sampler(int n) {
  pcs::RngStream rng(11);
  return pcs::ShadowSampler(pcs::random_lowrank_state(n, 2, rng));
}

void BM_CollectShadowSerial(benchmark::State& state) {
  const pcs::ShadowSampler sampler = make_sampler(static_cast<int>(state.range(0)));
  const pcs::RngStream stream(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcs::collect_shadow_serial(sampler, state.range(1), stream).sum_outer().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_CollectShadowParallel(benchmark::State& state) {
  const pcs::ShadowSampler sampler = make_sampler(static_cast<int>(state.range(0)));
  const pcs::RngStream stream(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcs::collect_shadow(sampler, state.range(1), stream).sum_outer().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.counters["threads"] = omp_get_max_threads();
}

BENCHMARK(BM_CollectShadowSerial)->Args({4, 4096})->Args({6, 1024})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CollectShadowParallel)->Args({4, 4096})->Args({6, 1024})->Unit(benchmark::kMillisecond);

pcs::ExperimentConfig bench_config() {
  pcs::ExperimentConfig cfg;
  cfg.experiment_id = "bench";
  cfg.n_qubits = 4;
  cfg.state = pcs::StateSpec::lowrank(4);
  cfg.methods = {pcs::MethodSpec::cs(), pcs::MethodSpec::simplex_pcs(), pcs::MethodSpec::lr_pcs(4),
                 pcs::MethodSpec::mpo_pcs(pcs::BondControl::capped(4))};
  cfg.m_grid = {500, 2000};
  cfg.trials = 4;
  cfg.master_seed = 5;
  cfg.fresh_state_per_trial = true;
  return cfg;
}

void BM_RunExperimentSerial(benchmark::State& state) {
  const pcs::ExperimentConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(pcs::run_experiment_serial(cfg).size());
}

void BM_RunExperimentParallel(benchmark::State& state) {
  const pcs::ExperimentConfig cfg = bench_config();
  const int workers = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(pcs::run_experiment(cfg, workers).size());
  state.counters["threads"] = workers;
}

BENCHMARK(BM_RunExperimentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunExperimentParallel)->Unit(benchmark::kMillisecond);

void BM_MpoPcs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  pcs::RngStream rng(2);
  const pcs::ShadowSampler sampler(pcs::ghz_state(n));
  const pcs::ComplexMatrix rho_cs = pcs::cs_estimate(pcs::collect_shadow(sampler, 1000, rng));
  pcs::MpoPcsOptions options;
  options.bond = pcs::BondControl::capped(4);
  for (auto _ : state) benchmark::DoNotOptimize(pcs::mpo_pcs(rho_cs, n, options).matrix().data());
}

BENCHMARK(BM_MpoPcs)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
