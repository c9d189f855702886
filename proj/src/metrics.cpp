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

#include "pcs/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace pcs {

namespace {

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(where) + ": shape mismatch");
  }
}

}  // namespace

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "frobenius_distance");
  return (a - b).norm();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "trace_distance");
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_distance: matrices are not square");
  return singular_values(a - b).sum();
}

ErrorRecord error_record(const ComplexMatrix& estimate, const ComplexMatrix& truth) {
  ErrorRecord rec;
  rec.frob_err = frobenius_distance(estimate, truth);
  rec.frob_err_sq = rec.frob_err * rec.frob_err;
  rec.trace_err = trace_distance(estimate, truth);
  return rec;
}

double predicted_mse(int n_qubits, const DensityMatrix& rho_star, std::int64_t shots) {
  if (shots < 1) throw std::invalid_argument("predicted_mse: shot count must be positive");
  if (n_qubits != rho_star.n_qubits()) throw std::invalid_argument("predicted_mse: qubit count mismatch");
  const double dim = std::ldexp(1.0, n_qubits);
  const double purity = rho_star.matrix().squaredNorm();
  return (dim * dim + dim - 1.0 - purity) / static_cast<double>(shots);
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: no values");
  Summary s;
  s.count = values.size();
  double total = 0.0;
  for (double v : values) total += v;
  s.mean = total / static_cast<double>(s.count);
  if (s.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    const double variance = sq / static_cast<double>(s.count - 1);
    s.standard_error = std::sqrt(variance / static_cast<double>(s.count));
  }
  return s;
}

}  // namespace pcs
