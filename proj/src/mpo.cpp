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

#include "pcs/mpo.hpp"

#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "pcs/errors.hpp"

namespace pcs {

std::uint64_t interleave_index(std::uint64_t row, std::uint64_t col, int n_qubits) noexcept {
  std::uint64_t offset = 0;
  for (int l = 0; l < n_qubits; ++l) {
    offset |= ((row >> l) & 1ULL) << (2 * l);
    offset |= ((col >> l) & 1ULL) << (2 * l + 1);
  }
  return offset;
}

std::pair<std::uint64_t, std::uint64_t> deinterleave_index(std::uint64_t offset, int n_qubits) noexcept {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  for (int l = 0; l < n_qubits; ++l) {
    row |= ((offset >> (2 * l)) & 1ULL) << l;
    col |= ((offset >> (2 * l + 1)) & 1ULL) << l;
  }
  return {row, col};
}

ComplexVector matrix_to_tensor(const ComplexMatrix& m, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("matrix_to_tensor: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                " matrix");
  }
  ComplexVector t(dim * dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      t(static_cast<Eigen::Index>(interleave_index(r, c, n_qubits))) = m(r, c);
    }
  }
  return t;
}

ComplexMatrix tensor_to_matrix(const ComplexVector& t, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (t.size() != dim * dim) throw std::invalid_argument("tensor_to_matrix: expected 4^n entries");
  ComplexMatrix m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      m(r, c) = t(static_cast<Eigen::Index>(interleave_index(r, c, n_qubits)));
    }
  }
  return m;
}

MpoState::MpoState(std::vector<MpoCore> cores) : cores_(std::move(cores)) {
  if (cores_.empty()) throw std::invalid_argument("MpoState: at least one core is required");
  if (cores_.front().left != 1 || cores_.back().right != 1) {
    throw std::invalid_argument("MpoState: boundary bond dimensions must be 1");
  }
  for (std::size_t l = 0; l < cores_.size(); ++l) {
    const MpoCore& core = cores_[l];
    if (core.left < 1 || core.right < 1) throw std::invalid_argument("MpoState: bond dimensions must be positive");
    for (const ComplexMatrix& s : core.slices) {
      if (s.rows() != core.left || s.cols() != core.right) {
        throw std::invalid_argument("MpoState: core " + std::to_string(l + 1) + " slice has wrong shape");
      }
    }
    if (l + 1 < cores_.size() && core.right != cores_[l + 1].left) {
      throw std::invalid_argument("MpoState: bond mismatch between cores " + std::to_string(l + 1) + " and " +
                                  std::to_string(l + 2));
    }
  }
}

std::vector<Eigen::Index> MpoState::bond_dims() const {
  std::vector<Eigen::Index> dims;
  for (std::size_t l = 0; l + 1 < cores_.size(); ++l) dims.push_back(cores_[l].right);
  return dims;
}

std::vector<Eigen::Index> MpoState::all_bond_dims() const {
  std::vector<Eigen::Index> dims{cores_.front().left};
  for (const MpoCore& core : cores_) dims.push_back(core.right);
  return dims;
}

Eigen::Index MpoState::max_bond() const {
  Eigen::Index best = 1;
  for (Eigen::Index d : all_bond_dims()) best = std::max(best, d);
  return best;
}

MpoState mpo_from_tt_cores(const std::vector<ComplexMatrix>& cores) {
  std::vector<MpoCore> sites;
  Eigen::Index left = 1;
  for (const ComplexMatrix& core : cores) {
    if (core.rows() != 4 * left) throw std::invalid_argument("mpo_from_tt_cores: core rows must be 4 * left bond");
    MpoCore site;
    site.left = left;
    site.right = core.cols();
    for (int q = 0; q < 4; ++q) site.slices[static_cast<std::size_t>(q)] = core.middleRows(q * left, left);
    sites.push_back(std::move(site));
    left = core.cols();
  }
  return MpoState(std::move(sites));
}

MpoState mpo_from_mps_cores(const std::vector<ComplexMatrix>& mps_cores) {
  std::vector<MpoCore> sites;
  Eigen::Index left = 1;
  for (const ComplexMatrix& core : mps_cores) {
    if (core.rows() != 2 * left) throw std::invalid_argument("mpo_from_mps_cores: core rows must be 2 * left bond");
    MpoCore site;
    site.left = left * left;
    site.right = core.cols() * core.cols();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const ComplexMatrix ui = core.middleRows(i * left, left);
        const ComplexMatrix uj = core.middleRows(j * left, left).conjugate();
        site.slice(i, j) = Eigen::kroneckerProduct(ui, uj);
      }
    }
    sites.push_back(std::move(site));
    left = core.cols();
  }
  return MpoState(std::move(sites));
}

ComplexMatrix mpo_to_dense(const MpoState& m) {
  const int n = m.n_qubits();
  if (n > kTolerances.dense_qubit_limit) {
    throw CapacityError("mpo_to_dense: " + std::to_string(n) + " qubits exceeds the dense limit of " +
                        std::to_string(kTolerances.dense_qubit_limit));
  }
  std::vector<ComplexMatrix> cores;
  cores.reserve(static_cast<std::size_t>(n));
  for (const MpoCore& site : m.cores()) {
    ComplexMatrix core(4 * site.left, site.right);
    for (int q = 0; q < 4; ++q) core.middleRows(q * site.left, site.left) = site.slices[static_cast<std::size_t>(q)];
    cores.push_back(std::move(core));
  }
  return tensor_to_matrix(tt_contract(cores, 4), n);
}

}  // namespace pcs
