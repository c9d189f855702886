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

#include "pcs/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <tuple>

#include "pcs/metrics.hpp"
#include "pcs/text.hpp"

namespace pcs {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t parse_int64(std::string_view text) {
  std::int64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::uint64_t parse_uint64(std::string_view text) {
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void write_trials_csv(std::ostream& out, const ResultTable& table) {
  out << kTrialsHeader << '\n';
  for (const TrialResult& r : table) {
    out << r.experiment_id << ',' << r.method << ',' << r.method_param << ',' << r.n_qubits << ',' << r.shots << ','
        << r.trial << ',' << r.seed << ',' << format_double(r.frob_err_sq) << ',' << format_double(r.trace_err) << ','
        << format_double(r.wall_ms) << '\n';
  }
}

ResultTable read_trials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kTrialsHeader) {
    throw std::runtime_error("trials csv: missing or unexpected header");
  }
  ResultTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 10) {
      throw std::runtime_error("trials csv line " + std::to_string(line_no) + ": expected 10 fields");
    }
    try {
      table.push_back(TrialResult{f[0], f[1], f[2], static_cast<int>(parse_int64(f[3])), parse_int64(f[4]),
                                  static_cast<int>(parse_int64(f[5])), parse_uint64(f[6]), parse_double(f[7]),
                                  parse_double(f[8]), parse_double(f[9])});
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("trials csv line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

std::vector<SummaryRow> summarize_table(const ResultTable& table) {
  using Key = std::tuple<std::string, std::string, std::string, std::int64_t>;
  struct Group {
    int n_qubits = 0;
    std::vector<double> mse;
    std::vector<double> trace;
  };
  std::map<Key, Group> groups;
  for (const TrialResult& r : table) {
    Group& g = groups[Key{r.experiment_id, r.method, r.method_param, r.shots}];
    g.n_qubits = r.n_qubits;
    g.mse.push_back(r.frob_err_sq);
    g.trace.push_back(r.trace_err);
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, g] : groups) {
    const Summary mse = summarize(g.mse);
    const Summary tr = summarize(g.trace);
    rows.push_back(SummaryRow{std::get<0>(key), std::get<1>(key), std::get<2>(key), g.n_qubits, std::get<3>(key),
                              static_cast<std::int64_t>(mse.count), mse.mean, mse.standard_error, tr.mean});
  }
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const SummaryRow& r : rows) {
    out << r.experiment_id << ',' << r.method << ',' << r.method_param << ',' << r.n_qubits << ',' << r.shots << ','
        << r.trials << ',' << format_double(r.mean_mse) << ',' << format_double(r.stderr_mse) << ','
        << format_double(r.mean_trace_err) << '\n';
  }
}

void write_trials_file(const std::filesystem::path& path, const ResultTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  write_trials_csv(out, table);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

ResultTable read_trials_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  try {
    return read_trials_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_summary_file(const std::filesystem::path& path, const std::vector<SummaryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  write_summary_csv(out, rows);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace pcs
