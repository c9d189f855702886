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

#include <utility>

#include "pcs/mpo.hpp"
#include "pcs/numerics.hpp"
#include "pcs/rng.hpp"

namespace pcs {

/// Hermitian, unit-trace, positive semidefinite 2^n x 2^n matrix. The
/// invariants are checked once, in from_matrix.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument if `m` is not a valid density matrix to
  /// within kTolerances, or CapacityError if it exceeds the dense limit.
  static DensityMatrix from_matrix(ComplexMatrix m);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  DensityMatrix(int n_qubits, ComplexMatrix m) : n_qubits_(n_qubits), matrix_(std::move(m)) {}

  int n_qubits_;
  ComplexMatrix matrix_;
};

class PureState {
 public:
  /// Throws std::invalid_argument unless the length is 2^n and the norm is
  /// one within kTolerances.pure_norm.
  static PureState from_amplitudes(ComplexVector amplitudes);

  int n_qubits() const { return n_qubits_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  DensityMatrix density() const;

 private:
  PureState(int n_qubits, ComplexVector u) : n_qubits_(n_qubits), amplitudes_(std::move(u)) {}

  int n_qubits_;
  ComplexVector amplitudes_;
};

/// rho = F F^dagger with F = (A + iB) / ||A + iB||_F, A and B 2^n x r with
/// i.i.d. standard normal entries (all of A, then all of B, column-major).
DensityMatrix random_lowrank_state(int n_qubits, int rank, RngStream& rng);

/// 2^n complex amplitudes with standard normal real and imaginary parts,
/// truncated by a TT-SVD sweep to MPS bond `bond`, then normalized. The
/// returned MPO represents u u^dagger with bonds at most bond^2.
std::pair<PureState, MpoState> random_mps_state(int n_qubits, int bond, RngStream& rng);

/// sum_j Z_j Z_{j+1} + sum_j X_j on an open chain.
ComplexMatrix ising_hamiltonian(int n_qubits);

/// exp(-H/T) / trace for the Ising chain above.
DensityMatrix thermal_state(int n_qubits, double temperature);

/// (|0..0> + |1..1>) / sqrt(2) as a density matrix.
DensityMatrix ghz_state(int n_qubits);

DensityMatrix basis_state(int n_qubits, Eigen::Index index);
DensityMatrix maximally_mixed_state(int n_qubits);

}  // namespace pcs
