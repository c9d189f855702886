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

#include "pcs/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pcs/errors.hpp"
#include "pcs/text.hpp"

namespace pcs {

using nlohmann::json;

std::string MethodSpec::name() const {
  switch (kind) {
    case Kind::cs: return "cs";
    case Kind::simplex_pcs: return "simplex-pcs";
    case Kind::lr_pcs: return "lr-pcs";
    case Kind::mpo_pcs: return "mpo-pcs";
  }
  return "unknown";
}

std::string MethodSpec::param() const {
  switch (kind) {
    case Kind::lr_pcs: return "r=" + std::to_string(rank);
    case Kind::mpo_pcs:
      return bond.mode == BondControl::Mode::capped ? "cap=" + std::to_string(bond.cap)
                                                    : "tol=" + format_double(bond.tolerance);
    default: return "";
  }
}

void ExperimentConfig::validate() const {
  auto fail = [&](const std::string& what) {
    throw ConfigError("experiment '" + experiment_id + "': " + what);
  };
  if (experiment_id.empty()) throw ConfigError("experiment_id must not be empty");
  if (experiment_id.find_first_of(",\"\r\n") != std::string::npos) {
    fail("experiment_id must not contain commas, quotes or newlines");
  }
  if (n_qubits < 1 || n_qubits > kTolerances.dense_qubit_limit) {
    fail("n_qubits must be in [1, " + std::to_string(kTolerances.dense_qubit_limit) + "]");
  }
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  switch (state.family) {
    case StateSpec::Family::lowrank:
      if (state.rank < 1 || state.rank > dim) fail("state rank must be in [1, 2^n]");
      break;
    case StateSpec::Family::mps:
      if (state.bond < 1) fail("state bond must be positive");
      break;
    case StateSpec::Family::thermal:
      if (!(state.temperature > 0.0) || !std::isfinite(state.temperature)) fail("temperature must be positive");
      break;
    case StateSpec::Family::ghz: break;
  }
  if (methods.empty()) fail("at least one method is required");
  for (const MethodSpec& m : methods) {
    if (m.kind == MethodSpec::Kind::lr_pcs && (m.rank < 1 || m.rank > dim)) fail("lr-pcs rank must be in [1, 2^n]");
    if (m.kind == MethodSpec::Kind::mpo_pcs) {
      if (m.bond.mode == BondControl::Mode::capped && m.bond.cap < 1) fail("mpo-pcs bond_cap must be positive");
      if (m.bond.mode == BondControl::Mode::adaptive && !(m.bond.tolerance > 0.0)) {
        fail("mpo-pcs tolerance must be positive");
      }
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const MethodSpec& m : methods) {
    if (!seen.emplace(m.name(), m.param()).second) fail("duplicate method " + m.name() + " " + m.param());
  }
  if (m_grid.empty()) fail("m_grid must not be empty");
  for (std::int64_t shots : m_grid) {
    if (shots < 1) fail("every M must be at least 1");
  }
  if (trials < 1) fail("trials must be at least 1");
}

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (std::string_view key : allowed) ok = ok || item.key() == key;
    if (!ok) throw ConfigError(where + ": unknown key '" + item.key() + "'");
  }
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
  return j.at(key);
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ConfigError(what + " must be an integer");
  return v.get<std::int64_t>();
}

double as_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ConfigError(what + " must be a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& what) {
  if (!v.is_string()) throw ConfigError(what + " must be a string");
  return v.get<std::string>();
}

StateSpec state_from_json(const json& j) {
  const std::string family = as_string(require(j, "family", "state"), "state.family");
  if (family == "lowrank") {
    reject_unknown_keys(j, {"family", "rank"}, "state");
    return StateSpec::lowrank(static_cast<int>(as_int(require(j, "rank", "state"), "state.rank")));
  }
  if (family == "mps") {
    reject_unknown_keys(j, {"family", "bond"}, "state");
    return StateSpec::mps(static_cast<int>(as_int(require(j, "bond", "state"), "state.bond")));
  }
  if (family == "thermal") {
    reject_unknown_keys(j, {"family", "temperature"}, "state");
    return StateSpec::thermal(as_number(require(j, "temperature", "state"), "state.temperature"));
  }
  if (family == "ghz") {
    reject_unknown_keys(j, {"family"}, "state");
    return StateSpec::ghz();
  }
  throw ConfigError("state.family '" + family + "' is not one of lowrank, mps, thermal, ghz");
}

json state_to_json(const StateSpec& s) {
  switch (s.family) {
    case StateSpec::Family::lowrank: return {{"family", "lowrank"}, {"rank", s.rank}};
    case StateSpec::Family::mps: return {{"family", "mps"}, {"bond", s.bond}};
    case StateSpec::Family::thermal: return {{"family", "thermal"}, {"temperature", s.temperature}};
    case StateSpec::Family::ghz: return {{"family", "ghz"}};
  }
  return {};
}

MethodSpec method_from_json(const json& j) {
  const std::string name = as_string(require(j, "method", "method"), "method.method");
  if (name == "cs") {
    reject_unknown_keys(j, {"method"}, "method cs");
    return MethodSpec::cs();
  }
  if (name == "simplex-pcs") {
    reject_unknown_keys(j, {"method"}, "method simplex-pcs");
    return MethodSpec::simplex_pcs();
  }
  if (name == "lr-pcs") {
    reject_unknown_keys(j, {"method", "rank"}, "method lr-pcs");
    return MethodSpec::lr_pcs(as_int(require(j, "rank", "method lr-pcs"), "lr-pcs rank"));
  }
  if (name == "mpo-pcs") {
    reject_unknown_keys(j, {"method", "bond_cap", "tolerance"}, "method mpo-pcs");
    const bool has_cap = j.contains("bond_cap");
    const bool has_tol = j.contains("tolerance");
    if (has_cap == has_tol) throw ConfigError("method mpo-pcs needs exactly one of bond_cap or tolerance");
    if (has_cap) return MethodSpec::mpo_pcs(BondControl::capped(as_int(j.at("bond_cap"), "mpo-pcs bond_cap")));
    return MethodSpec::mpo_pcs(BondControl::adaptive(as_number(j.at("tolerance"), "mpo-pcs tolerance")));
  }
  throw ConfigError("method '" + name + "' is not one of cs, simplex-pcs, lr-pcs, mpo-pcs");
}

json method_to_json(const MethodSpec& m) {
  json j{{"method", m.name()}};
  if (m.kind == MethodSpec::Kind::lr_pcs) j["rank"] = m.rank;
  if (m.kind == MethodSpec::Kind::mpo_pcs) {
    if (m.bond.mode == BondControl::Mode::capped) {
      j["bond_cap"] = m.bond.cap;
    } else {
      j["tolerance"] = m.bond.tolerance;
    }
  }
  return j;
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"experiment_id", "n_qubits", "state", "methods", "m_grid", "trials", "master_seed",
                       "fresh_state_per_trial"},
                      "experiment");
  ExperimentConfig cfg;
  cfg.experiment_id = as_string(require(j, "experiment_id", "experiment"), "experiment_id");
  const std::string where = "experiment '" + cfg.experiment_id + "'";
  cfg.n_qubits = static_cast<int>(as_int(require(j, "n_qubits", where), "n_qubits"));
  cfg.state = state_from_json(require(j, "state", where));

  const json& methods = require(j, "methods", where);
  if (!methods.is_array()) throw ConfigError(where + ": methods must be an array");
  for (const json& m : methods) cfg.methods.push_back(method_from_json(m));

  const json& grid = require(j, "m_grid", where);
  if (!grid.is_array()) throw ConfigError(where + ": m_grid must be an array");
  for (const json& m : grid) cfg.m_grid.push_back(as_int(m, "m_grid entry"));

  cfg.trials = static_cast<int>(as_int(require(j, "trials", where), "trials"));
  const json& seed = require(j, "master_seed", where);
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    throw ConfigError(where + ": master_seed must be a non-negative integer");
  }
  cfg.master_seed = seed.get<std::uint64_t>();

  cfg.fresh_state_per_trial =
      cfg.state.family == StateSpec::Family::lowrank || cfg.state.family == StateSpec::Family::mps;
  if (j.contains("fresh_state_per_trial")) {
    if (!j.at("fresh_state_per_trial").is_boolean()) throw ConfigError(where + ": fresh_state_per_trial must be a boolean");
    cfg.fresh_state_per_trial = j.at("fresh_state_per_trial").get<bool>();
  }
  cfg.validate();
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  json methods = json::array();
  for (const MethodSpec& m : cfg.methods) methods.push_back(method_to_json(m));
  return {{"experiment_id", cfg.experiment_id},
          {"n_qubits", cfg.n_qubits},
          {"state", state_to_json(cfg.state)},
          {"methods", methods},
          {"m_grid", cfg.m_grid},
          {"trials", cfg.trials},
          {"master_seed", cfg.master_seed},
          {"fresh_state_per_trial", cfg.fresh_state_per_trial}};
}

std::vector<ExperimentConfig> configs_from_json(const json& j) {
  std::vector<ExperimentConfig> out;
  if (j.is_object() && j.contains("experiments")) {
    reject_unknown_keys(j, {"experiments"}, "config file");
    if (!j.at("experiments").is_array()) throw ConfigError("experiments must be an array");
    for (const json& e : j.at("experiments")) out.push_back(config_from_json(e));
  } else {
    out.push_back(config_from_json(j));
  }
  if (out.empty()) throw ConfigError("config file lists no experiments");
  std::set<std::string> ids;
  for (const ExperimentConfig& cfg : out) {
    if (!ids.insert(cfg.experiment_id).second) throw ConfigError("duplicate experiment_id '" + cfg.experiment_id + "'");
  }
  return out;
}

std::vector<ExperimentConfig> load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return configs_from_json(j);
}

namespace {

std::string temperature_tag(double t) {
  std::ostringstream s;
  s << t;
  return s.str();
}

}  // namespace

std::vector<ExperimentConfig> preset_configs(std::string_view name, PresetScale scale) {
  const bool full = scale == PresetScale::full;
  const std::vector<std::int64_t> wide_grid{100, 316, 1000, 3162, 10000};
  std::vector<ExperimentConfig> out;

  if (name == "fig2") {
    for (int r : {1, 4, 16}) {
      ExperimentConfig cfg;
      cfg.experiment_id = "fig2-r" + std::to_string(r);
      cfg.n_qubits = 4;
      cfg.state = StateSpec::lowrank(r);
      cfg.methods = {MethodSpec::cs(), MethodSpec::simplex_pcs(), MethodSpec::lr_pcs(r)};
      cfg.m_grid = {250, 500, 1000, 2000, 4000, 10000};
      cfg.trials = 10;
      cfg.fresh_state_per_trial = true;
      out.push_back(cfg);
    }
  } else if (name == "fig3") {
    for (int d : {1, 2}) {
      ExperimentConfig cfg;
      cfg.experiment_id = "fig3-D" + std::to_string(d * d);
      cfg.n_qubits = 7;
      cfg.state = StateSpec::mps(d);
      cfg.methods = {MethodSpec::cs(), MethodSpec::mpo_pcs(BondControl::capped(d * d))};
      cfg.m_grid = full ? wide_grid : std::vector<std::int64_t>{2000, 8000};
      cfg.trials = 10;
      cfg.fresh_state_per_trial = true;
      out.push_back(cfg);
    }
  } else if (name == "fig4" || name == "fig5") {
    struct Tailored {
      std::string tag;
      StateSpec state;
      int rank;  // -1: 4(n-1)
    };
    const bool sweep = name == "fig5";
    const std::vector<Tailored> states{{"T" + temperature_tag(0.2), StateSpec::thermal(0.2), 4},
                                       {"T" + temperature_tag(2.0), StateSpec::thermal(2.0), sweep ? -1 : 24},
                                       {"ghz", StateSpec::ghz(), 1}};
    const std::vector<int> qubits = sweep ? std::vector<int>{3, 4, 5, 6, 7} : std::vector<int>{7};
    for (const Tailored& t : states) {
      for (int n : qubits) {
        ExperimentConfig cfg;
        cfg.experiment_id = std::string(name) + "-" + t.tag + (sweep ? "-n" + std::to_string(n) : "");
        cfg.n_qubits = n;
        cfg.state = t.state;
        const int rank = t.rank < 0 ? 4 * (n - 1) : t.rank;
        cfg.methods = {MethodSpec::cs(), MethodSpec::simplex_pcs(), MethodSpec::lr_pcs(rank),
                       MethodSpec::mpo_pcs(BondControl::adaptive(1e-14))};
        if (sweep) {
          cfg.m_grid = {3000};
        } else {
          cfg.m_grid = full ? wide_grid : std::vector<std::int64_t>{100, 1000, 3000};
        }
        cfg.trials = 10;
        cfg.fresh_state_per_trial = false;
        out.push_back(cfg);
      }
    }
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig2, fig3, fig4 or fig5)");
  }
  for (ExperimentConfig& cfg : out) {
    cfg.master_seed = kPresetSeed;
    cfg.validate();
  }
  return out;
}

}  // namespace pcs
