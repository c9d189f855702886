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

#include "pcs/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pcs/errors.hpp"

namespace pcs {

namespace {

void check_qubits(int n_qubits, const char* where) {
  if (n_qubits < 1) throw std::invalid_argument(std::string(where) + ": qubit count must be positive");
  if (n_qubits > kTolerances.dense_qubit_limit) {
    throw CapacityError(std::string(where) + ": " + std::to_string(n_qubits) + " qubits exceeds the dense limit");
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("DensityMatrix: matrix is not square");
  const int n = log2_exact(static_cast<std::size_t>(m.rows()));
  check_qubits(n, "DensityMatrix");
  if (!m.allFinite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
  const double defect = hermitian_defect(m);
  if (defect > kTolerances.density_hermitian) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTolerances.density_trace) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues()(0);
  if (min_eig < -kTolerances.density_psd) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite (min eigenvalue " +
                                std::to_string(min_eig) + ")");
  }
  return DensityMatrix(n, std::move(m));
}

PureState PureState::from_amplitudes(ComplexVector amplitudes) {
  const int n = log2_exact(static_cast<std::size_t>(amplitudes.size()));
  check_qubits(n, "PureState");
  if (std::abs(amplitudes.norm() - 1.0) > kTolerances.pure_norm) {
    throw std::invalid_argument("PureState: amplitudes are not unit norm");
  }
  return PureState(n, std::move(amplitudes));
}

DensityMatrix PureState::density() const {
  return DensityMatrix::from_matrix(amplitudes_ * amplitudes_.adjoint());
}

DensityMatrix random_lowrank_state(int n_qubits, int rank, RngStream& rng) {
  check_qubits(n_qubits, "random_lowrank_state");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument("random_lowrank_state: rank " + std::to_string(rank) + " outside [1, " +
                                std::to_string(dim) + "]");
  }
  Eigen::MatrixXd a(dim, rank);
  Eigen::MatrixXd b(dim, rank);
  for (Eigen::Index k = 0; k < a.size(); ++k) a.data()[k] = rng.normal();
  for (Eigen::Index k = 0; k < b.size(); ++k) b.data()[k] = rng.normal();
  ComplexMatrix f(dim, rank);
  f.real() = a;
  f.imag() = b;
  f /= f.norm();
  return DensityMatrix::from_matrix(hermitian_part(f * f.adjoint()));
}

std::pair<PureState, MpoState> random_mps_state(int n_qubits, int bond, RngStream& rng) {
  check_qubits(n_qubits, "random_mps_state");
  if (bond < 1) throw std::invalid_argument("random_mps_state: bond dimension must be positive");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexVector amplitudes(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double re = rng.normal();
    const double im = rng.normal();
    amplitudes(k) = Complex(re, im);
  }
  TtSweep sweep = tt_sweep(amplitudes, 2, n_qubits, TtRule{bond, 0.0, 0.0});
  const ComplexVector truncated = tt_contract(sweep.cores, 2);
  const double norm = truncated.norm();
  sweep.cores.back() /= norm;
  ComplexVector u = truncated / norm;
  MpoState mpo = mpo_from_mps_cores(sweep.cores);
  return {PureState::from_amplitudes(std::move(u)), std::move(mpo)};
}

ComplexMatrix ising_hamiltonian(int n_qubits) {
  check_qubits(n_qubits, "ising_hamiltonian");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    double zz = 0.0;
    for (int j = 0; j + 1 < n_qubits; ++j) {
      const double sj = ((b >> j) & 1) ? -1.0 : 1.0;
      const double sk = ((b >> (j + 1)) & 1) ? -1.0 : 1.0;
      zz += sj * sk;
    }
    h(b, b) = zz;
    for (int j = 0; j < n_qubits; ++j) h(b ^ (Eigen::Index{1} << j), b) += 1.0;
  }
  return h;
}

DensityMatrix thermal_state(int n_qubits, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("thermal_state: temperature must be positive and finite");
  }
  const HermitianEig eig = hermitian_eig(ising_hamiltonian(n_qubits));
  // Shift by the ground energy so the largest weight is exactly one.
  const double ground = eig.eigenvalues.minCoeff();
  RealVector weights = (-(eig.eigenvalues.array() - ground) / temperature).exp();
  weights /= weights.sum();
  const ComplexMatrix rho = eig.eigenvectors * weights.asDiagonal() * eig.eigenvectors.adjoint();
  return DensityMatrix::from_matrix(hermitian_part(rho));
}

DensityMatrix ghz_state(int n_qubits) {
  check_qubits(n_qubits, "ghz_state");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(0, 0) = rho(0, dim - 1) = rho(dim - 1, 0) = rho(dim - 1, dim - 1) = 0.5;
  return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix basis_state(int n_qubits, Eigen::Index index) {
  check_qubits(n_qubits, "basis_state");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index < 0 || index >= dim) throw std::invalid_argument("basis_state: index out of range");
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(index, index) = 1.0;
  return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix maximally_mixed_state(int n_qubits) {
  check_qubits(n_qubits, "maximally_mixed_state");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix::from_matrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace pcs
