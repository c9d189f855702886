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

#include <iosfwd>
#include <vector>

#include "pcs/mpo.hpp"
#include "pcs/numerics.hpp"
#include "pcs/states.hpp"

namespace pcs {

/// Euclidean projection onto {w >= 0, sum w = 1}: w_i = max(v_i - tau, 0)
/// with the waterfilling threshold tau. Rounding in the sum is folded into
/// the largest component so the output sums to one.
RealVector project_simplex_vector(const RealVector& v);

/// Frobenius-nearest density matrix to a Hermitian H: eigendecompose and
/// project the spectrum onto the simplex.
DensityMatrix project_simplex_state(const ComplexMatrix& h);

/// Keeps the r algebraically largest eigenvalues of a Hermitian H.
ComplexMatrix project_rank(const ComplexMatrix& h, Eigen::Index rank);

/// Rank-r truncation followed by the simplex projection of the kept
/// spectrum. The result has rank at most r; with r = dim it coincides with
/// project_simplex_state.
DensityMatrix lr_pcs(const ComplexMatrix& h, Eigen::Index rank);

/// How TT-SVD chooses bond dimensions.
struct BondControl {
  enum class Mode { capped, adaptive };

  Mode mode = Mode::capped;
  Eigen::Index cap = 1;
  double tolerance = 0.0;

  /// Every bond at most `cap`; singular values under 1e-14 ||H||_F are
  /// dropped even below the cap.
  static BondControl capped(Eigen::Index cap) { return {Mode::capped, cap, 0.0}; }
  /// Each of the n-1 steps may discard up to tol ||H||_F / sqrt(n-1) in
  /// Frobenius norm.
  static BondControl adaptive(double tolerance) { return {Mode::adaptive, 0, tolerance}; }
};

struct TruncationReport {
  /// Squared singular values dropped at each sweep step (n-1 entries).
  std::vector<double> discarded_energy;
  /// Bond kept at each step.
  std::vector<Eigen::Index> kept_dims;

  double total_discarded() const;
};

struct TtSvdResult {
  MpoState mpo;
  TruncationReport report;
};

/// Left-to-right TT-SVD of a 2^n x 2^n matrix viewed as an n-mode tensor
/// with mode index i_l + 2 j_l. The reconstruction error satisfies
/// ||H - mpo_to_dense(mpo)||_F^2 = report.total_discarded().
TtSvdResult tt_svd(const ComplexMatrix& h, int n_qubits, const BondControl& bond);

struct MpoPcsOptions {
  BondControl bond = BondControl::adaptive(1e-14);
  /// Hermitize before the sweep as well as after it.
  bool hermitize_before_truncation = false;
};

/// TT-SVD, contraction, Hermitization, then project_simplex_state. The
/// result's own bond dimension is not controlled.
DensityMatrix mpo_pcs(const ComplexMatrix& h, int n_qubits, const MpoPcsOptions& options,
                      TruncationReport* report = nullptr);

/// H + ((1 - trace H) / dim) I, the nearest unit-trace matrix.
ComplexMatrix project_trace(const ComplexMatrix& h);

/// (B + B^dagger) / 2.
ComplexMatrix hermitize(const ComplexMatrix& b);

/// CSV with header step,discarded_energy,kept_dim.
void write_truncation_report(std::ostream& out, const TruncationReport& report);

}  // namespace pcs
