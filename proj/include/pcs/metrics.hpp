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
#include <span>

#include "pcs/numerics.hpp"
#include "pcs/states.hpp"

namespace pcs {

struct ErrorRecord {
  double frob_err = 0.0;     // ||estimate - truth||_F
  double frob_err_sq = 0.0;  // its square
  double trace_err = 0.0;    // ||estimate - truth||_1
};

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of singular values of A - B.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

ErrorRecord error_record(const ComplexMatrix& estimate, const ComplexMatrix& truth);

/// Expected ||rho_CS - rho*||_F^2 after M single-shot Haar measurements:
/// (4^n + 2^n - 1 - ||rho*||_F^2) / M.
double predicted_mse(int n_qubits, const DensityMatrix& rho_star, std::int64_t shots);

struct Summary {
  double mean = 0.0;
  /// Sample standard deviation over sqrt(count); zero for a single value.
  double standard_error = 0.0;
  std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

}  // namespace pcs
