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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcs/config.hpp"
#include "pcs/states.hpp"

namespace pcs {

/// One (method, M, trial) cell of an experiment grid.
struct TrialResult {
  std::string experiment_id;
  std::string method;
  std::string method_param;
  int n_qubits = 0;
  std::int64_t shots = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double frob_err_sq = 0.0;
  double trace_err = 0.0;
  double wall_ms = 0.0;
};

using ResultTable = std::vector<TrialResult>;

/// Seed of the measurement stream for cell (M, trial).
std::uint64_t trial_seed(const ExperimentConfig& cfg, std::int64_t shots, int trial);

/// Seed of the ground-truth draw. Depends on the trial index only when
/// cfg.fresh_state_per_trial, so one trial index sees the same state at
/// every M.
std::uint64_t state_seed(const ExperimentConfig& cfg, int trial);

DensityMatrix ground_truth(const ExperimentConfig& cfg, int trial);

/// Runs every method of cfg on one cell. Each method reconstructs from the
/// same classical-shadow estimate; wall_ms covers the reconstruction only.
/// Failures are rethrown with the cell coordinates prepended.
ResultTable run_trial(const ExperimentConfig& cfg, std::int64_t shots, int trial, int inner_threads = 1);

/// Runs the whole grid with up to `workers` OpenMP threads. Output is sorted
/// by (experiment_id, method, method_param, M, trial) and, apart from
/// wall_ms, does not depend on `workers`.
ResultTable run_experiment(const ExperimentConfig& cfg, int workers);

/// Single-threaded reference for run_experiment built on
/// collect_shadow_serial. Errors agree with run_experiment to rounding.
ResultTable run_experiment_serial(const ExperimentConfig& cfg);

ResultTable run_experiments(const std::vector<ExperimentConfig>& configs, int workers);

/// Stable sort into the canonical row order.
void sort_results(ResultTable& table);

}  // namespace pcs
