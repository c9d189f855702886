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

#include "pcs/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pcs/text.hpp"

namespace pcs {

RealVector project_simplex_vector(const RealVector& v) {
  if (v.size() == 0) throw std::invalid_argument("project_simplex_vector: empty input");
  if (!v.allFinite()) throw std::invalid_argument("project_simplex_vector: non-finite input");

  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    // The support is a prefix of the sorted order; the last k that passes wins.
    if (sorted[k] - candidate > 0.0) tau = candidate;
  }

  RealVector w = (v.array() - tau).cwiseMax(0.0);
  Eigen::Index top = 0;
  w.maxCoeff(&top);
  w(top) += 1.0 - w.sum();
  return w;
}

namespace {

// V_r diag(simplex(lambda_r)) V_r^dagger over the leading r eigenpairs.
DensityMatrix simplex_on_leading(const HermitianEig& eig, Eigen::Index rank) {
  const RealVector w = project_simplex_vector(eig.eigenvalues.head(rank));
  const auto vr = eig.eigenvectors.leftCols(rank);
  return DensityMatrix::from_matrix(hermitize(vr * w.asDiagonal() * vr.adjoint()));
}

void check_rank(Eigen::Index rank, Eigen::Index dim, const char* where) {
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument(std::string(where) + ": rank " + std::to_string(rank) + " outside [1, " +
                                std::to_string(dim) + "]");
  }
}

}  // namespace

DensityMatrix project_simplex_state(const ComplexMatrix& h) {
  const HermitianEig eig = hermitian_eig(h);
  return simplex_on_leading(eig, h.rows());
}

ComplexMatrix project_rank(const ComplexMatrix& h, Eigen::Index rank) {
  check_rank(rank, h.rows(), "project_rank");
  const HermitianEig eig = hermitian_eig(h);
  const auto vr = eig.eigenvectors.leftCols(rank);
  return hermitize(vr * eig.eigenvalues.head(rank).asDiagonal() * vr.adjoint());
}

DensityMatrix lr_pcs(const ComplexMatrix& h, Eigen::Index rank) {
  check_rank(rank, h.rows(), "lr_pcs");
  return simplex_on_leading(hermitian_eig(h), rank);
}

double TruncationReport::total_discarded() const {
  return std::accumulate(discarded_energy.begin(), discarded_energy.end(), 0.0);
}

TtSvdResult tt_svd(const ComplexMatrix& h, int n_qubits, const BondControl& bond) {
  if (n_qubits < 1 || n_qubits > kTolerances.dense_qubit_limit) {
    throw std::invalid_argument("tt_svd: qubit count out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (h.rows() != dim || h.cols() != dim) {
    throw std::invalid_argument("tt_svd: entry count " + std::to_string(h.size()) + " is not 4^" +
                                std::to_string(n_qubits));
  }
  const double norm = h.norm();
  TtRule rule;
  if (bond.mode == BondControl::Mode::capped) {
    if (bond.cap < 1) throw std::invalid_argument("tt_svd: bond cap must be positive");
    rule.max_rank = bond.cap;
    rule.noise_floor = kTolerances.tt_noise_floor * norm;
  } else {
    if (!(bond.tolerance > 0.0)) throw std::invalid_argument("tt_svd: tolerance must be positive");
    if (n_qubits > 1) rule.step_tolerance = bond.tolerance * norm / std::sqrt(static_cast<double>(n_qubits - 1));
  }
  TtSweep sweep = tt_sweep(matrix_to_tensor(h, n_qubits), 4, n_qubits, rule);
  TruncationReport report{std::move(sweep.discarded), std::move(sweep.ranks)};
  return TtSvdResult{mpo_from_tt_cores(sweep.cores), std::move(report)};
}

DensityMatrix mpo_pcs(const ComplexMatrix& h, int n_qubits, const MpoPcsOptions& options, TruncationReport* report) {
  TtSvdResult tt = options.hermitize_before_truncation ? tt_svd(hermitize(h), n_qubits, options.bond)
                                                       : tt_svd(h, n_qubits, options.bond);
  if (report != nullptr) *report = tt.report;
  return project_simplex_state(hermitize(mpo_to_dense(tt.mpo)));
}

ComplexMatrix project_trace(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("project_trace: matrix is not square");
  const Eigen::Index dim = h.rows();
  const Complex shift = (Complex(1.0, 0.0) - h.trace()) / static_cast<double>(dim);
  ComplexMatrix out = h;
  out.diagonal().array() += shift;
  return out;
}

ComplexMatrix hermitize(const ComplexMatrix& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("hermitize: matrix is not square");
  return 0.5 * (b + b.adjoint());
}

void write_truncation_report(std::ostream& out, const TruncationReport& report) {
  out << "step,discarded_energy,kept_dim\n";
  for (std::size_t k = 0; k < report.discarded_energy.size(); ++k) {
    out << (k + 1) << ',' << format_double(report.discarded_energy[k]) << ',' << report.kept_dims[k] << '\n';
  }
}

}  // namespace pcs
