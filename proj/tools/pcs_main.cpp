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

// pcs: command-line front end for state generation, measurement,
// reconstruction and Monte Carlo experiments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcs/config.hpp"
#include "pcs/csv.hpp"
#include "pcs/errors.hpp"
#include "pcs/experiment.hpp"
#include "pcs/io.hpp"
#include "pcs/measurement.hpp"
#include "pcs/metrics.hpp"
#include "pcs/projections.hpp"
#include "pcs/rng.hpp"
#include "pcs/states.hpp"
#include "pcs/text.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct StateGenArgs {
  std::string family = "ghz";
  int qubits = 2;
  int rank = 1;
  int bond = 1;
  double temperature = 1.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string mpo_out;
};

struct MeasureArgs {
  std::string state;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string log;
  int workers = 0;
};

struct ReconstructArgs {
  std::string input;
  std::string method;
  Eigen::Index rank = 0;
  Eigen::Index bond_cap = 0;
  double tolerance = 0.0;
  bool hermitize_first = false;
  std::string out;
  std::string truth;
  std::string report;
};

struct RunArgs {
  std::string config;
  std::string out;
  int workers = 1;
  std::optional<std::uint64_t> seed;
};

struct PresetArgs {
  std::string name;
  std::string scale = "desk";
  std::string out;
  int workers = 1;
};

void state_gen(const StateGenArgs& a) {
  if (!a.mpo_out.empty() && a.family != "mps") throw pcs::ConfigError("--mpo-out is only available for --family mps");
  pcs::RngStream rng(a.seed);
  pcs::ComplexMatrix rho;
  if (a.family == "lowrank") {
    rho = pcs::random_lowrank_state(a.qubits, a.rank, rng).matrix();
  } else if (a.family == "mps") {
    const auto [psi, mpo] = pcs::random_mps_state(a.qubits, a.bond, rng);
    rho = psi.density().matrix();
    if (!a.mpo_out.empty()) pcs::write_mpo_file(a.mpo_out, mpo);
  } else if (a.family == "thermal") {
    rho = pcs::thermal_state(a.qubits, a.temperature).matrix();
  } else if (a.family == "ghz") {
    rho = pcs::ghz_state(a.qubits).matrix();
  } else if (a.family == "mixed") {
    rho = pcs::maximally_mixed_state(a.qubits).matrix();
  } else {
    throw pcs::ConfigError("unknown state family '" + a.family + "'");
  }
  pcs::write_matrix_file(a.out, rho);
}

void measure(const MeasureArgs& a) {
  const pcs::DensityMatrix rho = pcs::DensityMatrix::from_matrix(pcs::read_matrix_file(a.state));
  const pcs::ShadowSampler sampler(rho);
  pcs::SnapshotLog log;
  const pcs::ShadowAccumulator acc = pcs::collect_shadow(sampler, a.shots, pcs::RngStream(a.seed),
                                                         a.log.empty() ? nullptr : &log, pcs::kShadowChunk, a.workers);
  pcs::write_matrix_file(a.out, pcs::cs_estimate(acc));
  if (!a.log.empty()) {
    std::ofstream out(a.log);
    if (!out) throw std::runtime_error(a.log + ": cannot open for writing");
    pcs::write_snapshot_log(out, log);
  }
}

void reconstruct(const ReconstructArgs& a) {
  const pcs::ComplexMatrix input = pcs::read_matrix_file(a.input);
  const int n = pcs::log2_exact(input.rows());
  pcs::TruncationReport report;
  pcs::ComplexMatrix estimate;
  if (a.method == "cs") {
    estimate = input;
  } else if (a.method == "simplex-pcs") {
    estimate = pcs::project_simplex_state(input).matrix();
  } else if (a.method == "lr-pcs") {
    if (a.rank < 1) throw pcs::ConfigError("lr-pcs needs --rank >= 1");
    estimate = pcs::lr_pcs(input, a.rank).matrix();
  } else if (a.method == "mpo-pcs") {
    if ((a.bond_cap > 0) == (a.tolerance > 0.0)) {
      throw pcs::ConfigError("mpo-pcs needs exactly one of --bond-cap or --tolerance");
    }
    pcs::MpoPcsOptions options;
    options.bond = a.bond_cap > 0 ? pcs::BondControl::capped(a.bond_cap) : pcs::BondControl::adaptive(a.tolerance);
    options.hermitize_before_truncation = a.hermitize_first;
    estimate = pcs::mpo_pcs(input, n, options, &report).matrix();
  } else {
    throw pcs::ConfigError("unknown method '" + a.method + "'");
  }
  pcs::write_matrix_file(a.out, estimate);

  if (!a.report.empty()) {
    if (a.method != "mpo-pcs") throw pcs::ConfigError("--report is only available for mpo-pcs");
    std::ofstream out(a.report);
    if (!out) throw std::runtime_error(a.report + ": cannot open for writing");
    pcs::write_truncation_report(out, report);
  }
  if (!a.truth.empty()) {
    const pcs::ErrorRecord err = pcs::error_record(estimate, pcs::read_matrix_file(a.truth));
    std::cout << "frob_err_sq," << pcs::format_double(err.frob_err_sq) << "\n"
              << "trace_err," << pcs::format_double(err.trace_err) << "\n";
  }
}

void run_and_write(const std::vector<pcs::ExperimentConfig>& configs, const fs::path& dir, int workers) {
  fs::create_directories(dir);
  const pcs::ResultTable table = pcs::run_experiments(configs, workers);
  pcs::write_trials_file(dir / "trials.csv", table);
  pcs::write_summary_file(dir / "summary.csv", pcs::summarize_table(table));
}

void experiment_run(const RunArgs& a) {
  std::vector<pcs::ExperimentConfig> configs = pcs::load_config_file(a.config);
  if (a.seed) {
    for (pcs::ExperimentConfig& cfg : configs) cfg.master_seed = *a.seed;
  }
  run_and_write(configs, a.out, a.workers);
}

void experiment_preset(const PresetArgs& a) {
  const pcs::PresetScale scale = a.scale == "full" ? pcs::PresetScale::full : pcs::PresetScale::desk;
  const std::vector<pcs::ExperimentConfig> configs = pcs::preset_configs(a.name, scale);
  if (a.out.empty()) {
    nlohmann::json list = nlohmann::json::array();
    for (const pcs::ExperimentConfig& cfg : configs) list.push_back(pcs::config_to_json(cfg));
    std::cout << nlohmann::json{{"experiments", list}}.dump(2) << "\n";
    return;
  }
  run_and_write(configs, a.out, a.workers);
}

void report_summarize(const std::string& csv) {
  pcs::write_summary_csv(std::cout, pcs::summarize_table(pcs::read_trials_file(csv)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projected classical shadow tomography toolkit"};
  app.require_subcommand(1);

  StateGenArgs gen;
  CLI::App* state = app.add_subcommand("state", "Ground-truth states");
  state->require_subcommand(1);
  CLI::App* state_gen_cmd = state->add_subcommand("gen", "Write a density matrix (RHO1) and optionally its MPO (MPO1)");
  state_gen_cmd->add_option("--family", gen.family, "lowrank, mps, thermal, ghz or mixed")
      ->check(CLI::IsMember({"lowrank", "mps", "thermal", "ghz", "mixed"}));
  state_gen_cmd->add_option("-n,--qubits", gen.qubits, "Number of qubits")->required()->check(CLI::Range(1, 12));
  state_gen_cmd->add_option("--rank", gen.rank, "Rank for lowrank");
  state_gen_cmd->add_option("--bond", gen.bond, "MPS bond dimension for mps");
  state_gen_cmd->add_option("--temperature", gen.temperature, "Temperature for thermal");
  state_gen_cmd->add_option("--seed", gen.seed, "RNG seed for random families");
  state_gen_cmd->add_option("-o,--out", gen.out, "Output RHO1 file")->required();
  state_gen_cmd->add_option("--mpo-out", gen.mpo_out, "Output MPO1 file (mps only)");
  state_gen_cmd->callback([&] { state_gen(gen); });

  MeasureArgs meas;
  CLI::App* measure_cmd = app.add_subcommand("measure", "Simulate Haar-random measurements and write the shadow estimate");
  measure_cmd->add_option("--state", meas.state, "Input RHO1 file")->required()->check(CLI::ExistingFile);
  measure_cmd->add_option("-M,--shots", meas.shots, "Number of measurements")->required()->check(CLI::PositiveNumber);
  measure_cmd->add_option("--seed", meas.seed, "RNG seed")->required();
  measure_cmd->add_option("-o,--out", meas.out, "Output RHO1 file holding the shadow estimate")->required();
  measure_cmd->add_option("--log", meas.log, "Optional CSV snapshot log");
  measure_cmd->add_option("--workers", meas.workers, "Threads (0: OpenMP default)");
  measure_cmd->callback([&] { measure(meas); });

  ReconstructArgs rec;
  CLI::App* rec_cmd = app.add_subcommand("reconstruct", "Project a shadow estimate onto a physical set");
  rec_cmd->add_option("--input", rec.input, "Input RHO1 file")->required()->check(CLI::ExistingFile);
  rec_cmd->add_option("--method", rec.method, "cs, simplex-pcs, lr-pcs or mpo-pcs")
      ->required()
      ->check(CLI::IsMember({"cs", "simplex-pcs", "lr-pcs", "mpo-pcs"}));
  rec_cmd->add_option("--rank", rec.rank, "Rank for lr-pcs");
  rec_cmd->add_option("--bond-cap", rec.bond_cap, "Bond cap for mpo-pcs");
  rec_cmd->add_option("--tolerance", rec.tolerance, "Relative TT-SVD tolerance for mpo-pcs");
  rec_cmd->add_flag("--hermitize-first", rec.hermitize_first, "Hermitize before the TT-SVD sweep as well");
  rec_cmd->add_option("-o,--out", rec.out, "Output RHO1 file")->required();
  rec_cmd->add_option("--truth", rec.truth, "Ground-truth RHO1 file; prints errors")->check(CLI::ExistingFile);
  rec_cmd->add_option("--report", rec.report, "Truncation report CSV (mpo-pcs)");
  rec_cmd->callback([&] { reconstruct(rec); });

  CLI::App* exp = app.add_subcommand("experiment", "Monte Carlo experiments");
  exp->require_subcommand(1);
  RunArgs run;
  std::uint64_t run_seed = 0;
  CLI::App* run_cmd = exp->add_subcommand("run", "Run experiments from a JSON config");
  run_cmd->add_option("--config", run.config, "JSON config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out", run.out, "Output directory for trials.csv and summary.csv")->required();
  run_cmd->add_option("--workers", run.workers, "Worker threads")->check(CLI::PositiveNumber);
  CLI::Option* seed_opt = run_cmd->add_option("--seed", run_seed, "Override every master_seed");
  run_cmd->callback([&] {
    if (seed_opt->count() > 0) run.seed = run_seed;
    experiment_run(run);
  });

  PresetArgs preset;
  CLI::App* preset_cmd = exp->add_subcommand("preset", "Print or run a built-in experiment preset");
  preset_cmd->add_option("name", preset.name, "fig2, fig3, fig4 or fig5")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
  preset_cmd->add_option("--scale", preset.scale, "desk or full")->check(CLI::IsMember({"desk", "full"}));
  preset_cmd->add_option("--out", preset.out, "Run and write CSVs here; without it the config is printed");
  preset_cmd->add_option("--workers", preset.workers, "Worker threads")->check(CLI::PositiveNumber);
  preset_cmd->callback([&] { experiment_preset(preset); });

  std::string summarize_csv;
  CLI::App* report = app.add_subcommand("report", "Result post-processing");
  report->require_subcommand(1);
  CLI::App* summarize_cmd = report->add_subcommand("summarize", "Aggregate a trials CSV to per-cell means");
  summarize_cmd->add_option("csv", summarize_csv, "trials.csv")->required()->check(CLI::ExistingFile);
  summarize_cmd->callback([&] { report_summarize(summarize_csv); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const pcs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pcs::NumericIntegrityError& e) {
    std::cerr << "numeric integrity error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
