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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcs/projections.hpp"

namespace pcs {

/// Ground-truth family of an experiment.
struct StateSpec {
  enum class Family { lowrank, mps, thermal, ghz };

  Family family = Family::ghz;
  int rank = 1;             // lowrank
  int bond = 1;             // mps, MPS bond d (the MPO bond is d^2)
  double temperature = 1.0; // thermal

  static StateSpec lowrank(int r) { return {Family::lowrank, r, 1, 1.0}; }
  static StateSpec mps(int d) { return {Family::mps, 1, d, 1.0}; }
  static StateSpec thermal(double t) { return {Family::thermal, 1, 1, t}; }
  static StateSpec ghz() { return {Family::ghz, 1, 1, 1.0}; }
};

struct MethodSpec {
  enum class Kind { cs, simplex_pcs, lr_pcs, mpo_pcs };

  Kind kind = Kind::cs;
  Eigen::Index rank = 0;  // lr_pcs
  BondControl bond;       // mpo_pcs

  static MethodSpec cs() { return {Kind::cs, 0, {}}; }
  static MethodSpec simplex_pcs() { return {Kind::simplex_pcs, 0, {}}; }
  static MethodSpec lr_pcs(Eigen::Index r) { return {Kind::lr_pcs, r, {}}; }
  static MethodSpec mpo_pcs(BondControl b) { return {Kind::mpo_pcs, 0, b}; }

  /// "cs", "simplex-pcs", "lr-pcs" or "mpo-pcs".
  std::string name() const;
  /// "", "r=4", "cap=4" or "tol=1e-14".
  std::string param() const;
};

/// One experiment grid: every method on every (M, trial) cell.
struct ExperimentConfig {
  std::string experiment_id;
  int n_qubits = 1;
  StateSpec state;
  std::vector<MethodSpec> methods;
  std::vector<std::int64_t> m_grid;
  int trials = 1;
  std::uint64_t master_seed = 0;
  /// A new ground truth per trial index (random families) or one shared
  /// ground truth for the whole grid (tailored states).
  bool fresh_state_per_trial = false;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

/// Strict JSON schema; unknown keys and wrong types are ConfigErrors.
///
///   {
///     "experiment_id": "fig2-r4",
///     "n_qubits": 4,
///     "state": {"family": "lowrank", "rank": 4},
///     "methods": [{"method": "cs"}, {"method": "simplex-pcs"},
///                 {"method": "lr-pcs", "rank": 4},
///                 {"method": "mpo-pcs", "bond_cap": 4},
///                 {"method": "mpo-pcs", "tolerance": 1e-14}],
///     "m_grid": [250, 1000, 4000],
///     "trials": 10,
///     "master_seed": 7,
///     "fresh_state_per_trial": true
///   }
///
/// State families: lowrank {rank}, mps {bond}, thermal {temperature}, ghz.
/// fresh_state_per_trial defaults to true for lowrank and mps, false
/// otherwise.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// A file holds either one experiment object or {"experiments": [...]}.
std::vector<ExperimentConfig> configs_from_json(const nlohmann::json& j);
std::vector<ExperimentConfig> load_config_file(const std::filesystem::path& path);

enum class PresetScale { desk, full };

inline constexpr std::uint64_t kPresetSeed = 20240917;

/// Built-in experiment presets "fig2" .. "fig5".
std::vector<ExperimentConfig> preset_configs(std::string_view name, PresetScale scale = PresetScale::desk);

}  // namespace pcs
