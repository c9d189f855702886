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
#include <iosfwd>
#include <string>
#include <vector>

#include "pcs/experiment.hpp"

namespace pcs {

inline constexpr const char* kTrialsHeader =
    "experiment_id,method,method_param,n,M,trial,seed,frob_err_sq,trace_err,wall_ms";
inline constexpr const char* kSummaryHeader =
    "experiment_id,method,method_param,n,M,trials,mean_mse,stderr_mse,mean_trace_err";

/// Mean over trials of one (experiment, method, M) group.
struct SummaryRow {
  std::string experiment_id;
  std::string method;
  std::string method_param;
  int n_qubits = 0;
  std::int64_t shots = 0;
  std::int64_t trials = 0;
  double mean_mse = 0.0;
  double stderr_mse = 0.0;
  double mean_trace_err = 0.0;
};

/// Rows are written in the given order; floats use the shortest
/// round-trip form.
void write_trials_csv(std::ostream& out, const ResultTable& table);
ResultTable read_trials_csv(std::istream& in);

/// Groups rows by (experiment_id, method, method_param, M). Output is in
/// canonical order whatever the input order.
std::vector<SummaryRow> summarize_table(const ResultTable& table);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

/// File wrappers; failures are std::runtime_error naming the path.
void write_trials_file(const std::filesystem::path& path, const ResultTable& table);
ResultTable read_trials_file(const std::filesystem::path& path);
void write_summary_file(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

}  // namespace pcs
