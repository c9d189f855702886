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

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "pcs/numerics.hpp"

namespace pcs {

// Index convention. Row i_1 ... i_n of a 2^n x 2^n matrix is
// i_1 + 2 i_2 + ... + 2^{n-1} i_n, so qubit 1 is the least significant bit.
// The n-mode tensor view of a matrix uses mode index q_l = i_l + 2 j_l with
// mode 1 varying fastest, i.e. the tensor offset interleaves the bits of the
// row (even positions) and column (odd positions). Every reshape between
// matrices and tensors goes through the two functions below.

std::uint64_t interleave_index(std::uint64_t row, std::uint64_t col, int n_qubits) noexcept;
std::pair<std::uint64_t, std::uint64_t> deinterleave_index(std::uint64_t offset, int n_qubits) noexcept;

/// Tensor view of a 2^n x 2^n matrix, length 4^n.
ComplexVector matrix_to_tensor(const ComplexMatrix& m, int n_qubits);
ComplexMatrix tensor_to_matrix(const ComplexVector& t, int n_qubits);

/// One MPO site: four left x right matrices X^{i,j}, stored at i + 2j.
struct MpoCore {
  Eigen::Index left = 1;
  Eigen::Index right = 1;
  std::array<ComplexMatrix, 4> slices;

  const ComplexMatrix& slice(int i, int j) const { return slices[static_cast<std::size_t>(i + 2 * j)]; }
  ComplexMatrix& slice(int i, int j) { return slices[static_cast<std::size_t>(i + 2 * j)]; }
};

/// Density matrix in matrix-product form:
///   rho(i_1..i_n, j_1..j_n) = X_1^{i_1,j_1} X_2^{i_2,j_2} ... X_n^{i_n,j_n}.
class MpoState {
 public:
  /// Validates boundary bonds of one and matching adjacent bonds.
  explicit MpoState(std::vector<MpoCore> cores);

  int n_qubits() const { return static_cast<int>(cores_.size()); }
  const std::vector<MpoCore>& cores() const { return cores_; }
  /// Internal bonds D_1 .. D_{n-1}.
  std::vector<Eigen::Index> bond_dims() const;
  /// D_0 .. D_n including the unit boundaries.
  std::vector<Eigen::Index> all_bond_dims() const;
  Eigen::Index max_bond() const;

 private:
  std::vector<MpoCore> cores_;
};

/// Builds an MPO from tensor-train cores of mode 4, as produced by
/// tt_sweep over matrix_to_tensor(H).
MpoState mpo_from_tt_cores(const std::vector<ComplexMatrix>& cores);

/// rho = u u^dagger for an MPS u with mode-2 tensor-train cores. Site l of
/// the result is X^{i,j} = U^i (x) conj(U^j), so bonds square.
MpoState mpo_from_mps_cores(const std::vector<ComplexMatrix>& mps_cores);

/// Throws CapacityError when n exceeds kTolerances.dense_qubit_limit.
ComplexMatrix mpo_to_dense(const MpoState& m);

}  // namespace pcs
