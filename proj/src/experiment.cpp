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

#include "pcs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <tuple>

#include <omp.h>

#include "pcs/errors.hpp"
#include "pcs/measurement.hpp"
#include "pcs/metrics.hpp"
#include "pcs/projections.hpp"
#include "pcs/rng.hpp"

namespace pcs {

std::uint64_t trial_seed(const ExperimentConfig& cfg, std::int64_t shots, int trial) {
  std::uint64_t s = hash_combine64(cfg.master_seed, hash_string64(cfg.experiment_id));
  s = hash_combine64(s, static_cast<std::uint64_t>(shots));
  return hash_combine64(s, static_cast<std::uint64_t>(trial));
}

std::uint64_t state_seed(const ExperimentConfig& cfg, int trial) {
  std::uint64_t s = hash_combine64(cfg.master_seed, hash_string64(cfg.experiment_id));
  s = hash_combine64(s, hash_string64("state"));
  return cfg.fresh_state_per_trial ? hash_combine64(s, static_cast<std::uint64_t>(trial)) : s;
}

DensityMatrix ground_truth(const ExperimentConfig& cfg, int trial) {
  RngStream rng(state_seed(cfg, trial));
  switch (cfg.state.family) {
    case StateSpec::Family::lowrank: return random_lowrank_state(cfg.n_qubits, cfg.state.rank, rng);
    case StateSpec::Family::mps: return random_mps_state(cfg.n_qubits, cfg.state.bond, rng).first.density();
    case StateSpec::Family::thermal: return thermal_state(cfg.n_qubits, cfg.state.temperature);
    case StateSpec::Family::ghz: return ghz_state(cfg.n_qubits);
  }
  throw std::logic_error("ground_truth: unknown state family");
}

namespace {

ComplexMatrix reconstruct(const MethodSpec& method, const ComplexMatrix& rho_cs, int n_qubits) {
  switch (method.kind) {
    case MethodSpec::Kind::cs: return rho_cs;
    case MethodSpec::Kind::simplex_pcs: return project_simplex_state(rho_cs).matrix();
    case MethodSpec::Kind::lr_pcs: return lr_pcs(rho_cs, method.rank).matrix();
    case MethodSpec::Kind::mpo_pcs: {
      MpoPcsOptions options;
      options.bond = method.bond;
      return mpo_pcs(rho_cs, n_qubits, options).matrix();
    }
  }
  throw std::logic_error("reconstruct: unknown method");
}

struct Cell {
  std::int64_t shots;
  int trial;
};

std::vector<Cell> grid_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (std::int64_t shots : cfg.m_grid) {
    for (int t = 0; t < cfg.trials; ++t) cells.push_back({shots, t});
  }
  return cells;
}

ResultTable run_cell(const ExperimentConfig& cfg, std::int64_t shots, int trial, int inner_threads,
                     bool serial_kernel) {
  try {
    const DensityMatrix truth = ground_truth(cfg, trial);
    const ShadowSampler sampler(truth);
    const std::uint64_t seed = trial_seed(cfg, shots, trial);
    const RngStream stream(seed);
    const ShadowAccumulator acc =
        serial_kernel ? collect_shadow_serial(sampler, shots, stream)
                      : collect_shadow(sampler, shots, stream, nullptr, kShadowChunk, std::max(1, inner_threads));

    const auto cs_start = std::chrono::steady_clock::now();
    const ComplexMatrix rho_cs = cs_estimate(acc);
    const double cs_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - cs_start).count();

    ResultTable rows;
    for (const MethodSpec& method : cfg.methods) {
      const auto start = std::chrono::steady_clock::now();
      const ComplexMatrix estimate = reconstruct(method, rho_cs, cfg.n_qubits);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (method.kind == MethodSpec::Kind::cs) ms += cs_ms;
      const ErrorRecord err = error_record(estimate, truth.matrix());
      rows.push_back(TrialResult{cfg.experiment_id, method.name(), method.param(), cfg.n_qubits, shots, trial, seed,
                                 err.frob_err_sq, err.trace_err, ms});
    }
    return rows;
  } catch (const std::exception& e) {
    // Keep the error category so callers can still dispatch on it.
    const std::string where = "experiment '" + cfg.experiment_id + "' M=" + std::to_string(shots) +
                              " trial=" + std::to_string(trial) + ": " + e.what();
    if (dynamic_cast<const NumericIntegrityError*>(&e) != nullptr) throw NumericIntegrityError(where);
    if (dynamic_cast<const ConfigError*>(&e) != nullptr) throw ConfigError(where);
    if (dynamic_cast<const CapacityError*>(&e) != nullptr) throw CapacityError(where);
    throw std::runtime_error(where);
  }
}

}  // namespace

ResultTable run_trial(const ExperimentConfig& cfg, std::int64_t shots, int trial, int inner_threads) {
  return run_cell(cfg, shots, trial, inner_threads, false);
}

void sort_results(ResultTable& table) {
  std::stable_sort(table.begin(), table.end(), [](const TrialResult& a, const TrialResult& b) {
    return std::tie(a.experiment_id, a.method, a.method_param, a.shots, a.trial) <
           std::tie(b.experiment_id, b.method, b.method_param, b.shots, b.trial);
  });
}

ResultTable run_experiment(const ExperimentConfig& cfg, int workers) {
  cfg.validate();
  const std::vector<Cell> cells = grid_cells(cfg);
  const int n_cells = static_cast<int>(cells.size());
  const int outer = std::clamp(workers, 1, n_cells);
  const int inner = std::max(1, workers / n_cells);

  std::vector<ResultTable> slots(cells.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(outer)
  for (int c = 0; c < n_cells; ++c) {
    try {
      slots[static_cast<std::size_t>(c)] = run_trial(cfg, cells[c].shots, cells[c].trial, inner);
    } catch (...) {
#pragma omp critical(pcs_run_experiment_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  ResultTable out;
  for (ResultTable& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  sort_results(out);
  return out;
}

ResultTable run_experiment_serial(const ExperimentConfig& cfg) {
  cfg.validate();
  ResultTable out;
  for (const Cell& cell : grid_cells(cfg)) {
    ResultTable rows = run_cell(cfg, cell.shots, cell.trial, 1, true);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  sort_results(out);
  return out;
}

ResultTable run_experiments(const std::vector<ExperimentConfig>& configs, int workers) {
  ResultTable out;
  for (const ExperimentConfig& cfg : configs) {
    ResultTable rows = run_experiment(cfg, workers);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  sort_results(out);
  return out;
}

}  // namespace pcs
