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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcs/errors.hpp"
#include "pcs/states.hpp"

namespace pcs {
namespace {

void expect_density_invariants(const ComplexMatrix& rho) {
  EXPECT_LE(hermitian_defect(rho), kTolerances.density_hermitian);
  EXPECT_NEAR(rho.trace().real(), 1.0, kTolerances.density_trace);
  EXPECT_GE(hermitian_eig(rho).eigenvalues.minCoeff(), -kTolerances.density_psd);
}

Eigen::Index count_above(const RealVector& v, double threshold) { return (v.array() > threshold).count(); }

TEST(DensityMatrix, RejectsInvalidMatrices) {
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::Identity(3, 3) / 3.0), std::invalid_argument);
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::Identity(2, 2)), std::invalid_argument);
  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(negative), std::invalid_argument);
  ComplexMatrix skew = ComplexMatrix::Identity(2, 2) / 2.0;
  skew(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix::from_matrix(skew), std::invalid_argument);
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2) / 2.0;
  nan(0, 1) = std::nan("");
  EXPECT_THROW(DensityMatrix::from_matrix(nan), std::invalid_argument);
}

TEST(PureState, NormChecked) {
  ComplexVector u = ComplexVector::Zero(4);
  u(0) = 1.0;
  EXPECT_NO_THROW(PureState::from_amplitudes(u));
  u(1) = 1e-3;
  EXPECT_THROW(PureState::from_amplitudes(u), std::invalid_argument);
  EXPECT_THROW(PureState::from_amplitudes(ComplexVector::Ones(3) / std::sqrt(3.0)), std::invalid_argument);
}

TEST(LowRankState, SingleQubitPure) {
  RngStream rng(1);
  const DensityMatrix rho = random_lowrank_state(1, 1, rng);
  const RealVector lambda = hermitian_eig(rho.matrix()).eigenvalues;
  EXPECT_NEAR(lambda(0), 1.0, 1e-10);
  EXPECT_NEAR(lambda(1), 0.0, 1e-10);
}

TEST(LowRankState, FullRankFourQubits) {
  RngStream rng(2);
  const DensityMatrix rho = random_lowrank_state(4, 16, rng);
  expect_density_invariants(rho.matrix());
  EXPECT_GT(hermitian_eig(rho.matrix()).eigenvalues.minCoeff(), 0.0);
}

TEST(LowRankState, RankMatchesRequestAcrossSeeds) {
  RngStream root(3);
  for (int r : {1, 2, 3, 4}) {
    for (int s = 0; s < 20; ++s) {
      RngStream rng = root.split(static_cast<std::uint64_t>(100 * r + s));
      const DensityMatrix rho = random_lowrank_state(2, r, rng);
      EXPECT_EQ(count_above(hermitian_eig(rho.matrix()).eigenvalues, 1e-10), r);
      EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-14);
    }
  }
}

TEST(LowRankState, FollowsDocumentedConstruction) {
  RngStream rng(4), copy(4);
  const DensityMatrix rho = random_lowrank_state(2, 2, rng);
  Eigen::MatrixXd a(4, 2), b(4, 2);
  for (Eigen::Index k = 0; k < a.size(); ++k) a.data()[k] = copy.normal();
  for (Eigen::Index k = 0; k < b.size(); ++k) b.data()[k] = copy.normal();
  ComplexMatrix f = a.cast<Complex>() + Complex(0.0, 1.0) * b.cast<Complex>();
  f /= f.norm();
  EXPECT_LE((rho.matrix() - f * f.adjoint()).norm(), 1e-14);
}

TEST(LowRankState, RankOutOfRange) {
  RngStream rng(5);
  EXPECT_THROW(random_lowrank_state(2, 0, rng), std::invalid_argument);
  EXPECT_THROW(random_lowrank_state(2, 5, rng), std::invalid_argument);
}

TEST(MpsState, BondOneIsProductState) {
  RngStream rng(6);
  const auto [psi, mpo] = random_mps_state(5, 1, rng);
  for (Eigen::Index d : mpo.bond_dims()) EXPECT_EQ(d, 1);
  // A product state has a rank-one unfolding at every cut.
  for (int cut = 1; cut < 5; ++cut) {
    const Eigen::Index rows = Eigen::Index{1} << cut;
    const ComplexMatrix unfold = Eigen::Map<const ComplexMatrix>(psi.amplitudes().data(), rows, 32 / rows);
    EXPECT_EQ(oracle::numerical_rank(unfold, 1e-10), 1);
  }
}

TEST(MpsState, BondTwoSevenQubits) {
  RngStream rng(7);
  const auto [psi, mpo] = random_mps_state(7, 2, rng);
  for (Eigen::Index d : mpo.bond_dims()) EXPECT_LE(d, 4);
  EXPECT_NEAR(psi.amplitudes().squaredNorm(), 1.0, 1e-12);
  EXPECT_NEAR(psi.density().matrix().trace().real(), 1.0, 1e-12);
}

TEST(MpsState, MpoContractsToOuterProduct) {
  RngStream root(8);
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= 3; ++d) {
      RngStream rng = root.split(static_cast<std::uint64_t>(10 * n + d));
      const auto [psi, mpo] = random_mps_state(n, d, rng);
      const ComplexVector& u = psi.amplitudes();
      EXPECT_LE((mpo_to_dense(mpo) - u * u.adjoint()).cwiseAbs().maxCoeff(), 1e-10) << n << " " << d;
      for (Eigen::Index b : mpo.bond_dims()) EXPECT_LE(b, d * d);
    }
  }
}

TEST(MpsState, DenseContractionMatchesEntrywiseProducts) {
  RngStream rng(9);
  const auto [psi, mpo] = random_mps_state(3, 2, rng);
  const ComplexMatrix dense = mpo_to_dense(mpo);
  for (std::uint64_t i = 0; i < 8; ++i) {
    for (std::uint64_t j = 0; j < 8; ++j) {
      EXPECT_LE(std::abs(dense(i, j) - oracle::mpo_entry(mpo.cores(), i, j)), 1e-13);
    }
  }
}

TEST(Ising, SingleQubitIsPauliX) { EXPECT_EQ(ising_hamiltonian(1), oracle::pauli_x()); }

TEST(Ising, TwoQubitsTraceless) {
  const ComplexMatrix h = ising_hamiltonian(2);
  const ComplexMatrix expected = oracle::kron(oracle::pauli_z(), oracle::pauli_z()) +
                                 oracle::kron(oracle::pauli_x(), ComplexMatrix::Identity(2, 2)) +
                                 oracle::kron(ComplexMatrix::Identity(2, 2), oracle::pauli_x());
  EXPECT_EQ(h, expected);
  EXPECT_EQ(h.trace(), Complex(0.0, 0.0));
}

TEST(Ising, MatchesKroneckerSum) {
  for (int n = 1; n <= 6; ++n) {
    const ComplexMatrix h = ising_hamiltonian(n);
    EXPECT_EQ(h, oracle::ising_by_kron(n)) << n;
    EXPECT_EQ(h.imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(h, h.transpose());
  }
}

TEST(Thermal, SingleQubitGibbsWeights) {
  const RealVector p = hermitian_eig(thermal_state(1, 2.0).matrix()).eigenvalues;
  const double z = std::exp(0.5) + std::exp(-0.5);
  EXPECT_NEAR(p(0), std::exp(0.5) / z, 1e-14);
  EXPECT_NEAR(p(1), std::exp(-0.5) / z, 1e-14);
  EXPECT_NEAR(p(0), 0.7310585786, 1e-9);
  EXPECT_NEAR(p(1), 0.2689414214, 1e-9);
}

TEST(Thermal, HighTemperatureIsMaximallyMixed) {
  const ComplexMatrix rho = thermal_state(3, 1e6).matrix();
  EXPECT_LE((rho - ComplexMatrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff(), 1e-4);
}

TEST(Thermal, CommutesWithHamiltonianAndReversesItsOrder) {
  for (int n : {2, 4, 5}) {
    for (double t : {0.2, 2.0}) {
      const ComplexMatrix h = ising_hamiltonian(n);
      const ComplexMatrix rho = thermal_state(n, t).matrix();
      expect_density_invariants(rho);
      EXPECT_LE((rho * h - h * rho).cwiseAbs().maxCoeff(), 1e-8);
      // exp(-h/T) of h's spectrum, sorted descending, is rho's spectrum.
      const RealVector eh = hermitian_eig(h).eigenvalues;
      const RealVector er = hermitian_eig(rho).eigenvalues;
      RealVector weights = (-(eh.array() - eh.minCoeff()) / t).exp();
      weights /= weights.sum();
      for (Eigen::Index k = 0; k < er.size(); ++k) EXPECT_NEAR(er(k), weights(er.size() - 1 - k), 1e-12);
    }
  }
}

TEST(Thermal, LowTemperatureSevenQubitSpectrum) {
  const RealVector p = hermitian_eig(thermal_state(7, 0.2).matrix()).eigenvalues;
  // Independent dense computation of the same spectrum gives
  // 0.888103, 0.109784, 1.838e-3, 2.272e-4, 4.03e-5, ...
  EXPECT_NEAR(p(0), 0.888103176, 1e-8);
  EXPECT_NEAR(p(1), 0.109784424, 1e-8);
  EXPECT_NEAR(p(2), 1.83812869e-3, 1e-10);
  EXPECT_NEAR(p(3), 2.27223486e-4, 1e-11);
  Eigen::Index k99 = 0;
  double acc = 0.0;
  while (acc < 0.99) acc += p(k99++);
  EXPECT_EQ(k99, 2);
  EXPECT_EQ(count_above(p, 1e-4), 4);
}

TEST(Thermal, HighTemperatureSevenQubitCoverage) {
  const RealVector p = hermitian_eig(thermal_state(7, 2.0).matrix()).eigenvalues;
  EXPECT_GT(p.minCoeff(), 0.0);
  EXPECT_NEAR(p.head(24).sum(), 0.78278384, 1e-7);
  EXPECT_NEAR(p.head(26).sum(), 0.80153472, 1e-7);
}

TEST(Thermal, NonPositiveTemperatureRejected) {
  EXPECT_THROW(thermal_state(2, 0.0), std::invalid_argument);
  EXPECT_THROW(thermal_state(2, -1.0), std::invalid_argument);
}

TEST(Ghz, SingleQubit) {
  const ComplexMatrix rho = ghz_state(1).matrix();
  EXPECT_LE((rho - ComplexMatrix::Constant(2, 2, 0.5)).norm(), 1e-15);
}

TEST(Ghz, PureWithFourEntries) {
  for (int n = 1; n <= 7; ++n) {
    const ComplexMatrix rho = ghz_state(n).matrix();
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-12);
    EXPECT_LE((rho * rho - rho).norm(), 1e-12);
    if (n > 1) {
      EXPECT_EQ((rho.array() != Complex(0.0, 0.0)).count(), 4);
      const Eigen::Index last = rho.rows() - 1;
      EXPECT_EQ(rho(0, 0), Complex(0.5, 0.0));
      EXPECT_EQ(rho(0, last), Complex(0.5, 0.0));
      EXPECT_EQ(rho(last, 0), Complex(0.5, 0.0));
      EXPECT_EQ(rho(last, last), Complex(0.5, 0.0));
    }
  }
}

TEST(OtherStates, BasisAndMixed) {
  const ComplexMatrix b = basis_state(2, 3).matrix();
  EXPECT_EQ(b(3, 3), Complex(1.0, 0.0));
  EXPECT_EQ(b.cwiseAbs().sum(), 1.0);
  EXPECT_LE((maximally_mixed_state(3).matrix() - ComplexMatrix::Identity(8, 8) / 8.0).norm(), 1e-16);
}

TEST(DenseLimit, LargeMpoRefusesDenseContraction) {
  std::vector<MpoCore> cores(13);
  for (MpoCore& c : cores) {
    for (ComplexMatrix& s : c.slices) s = ComplexMatrix::Identity(1, 1);
  }
  EXPECT_THROW(mpo_to_dense(MpoState(cores)), CapacityError);
}

}  // namespace
}  // namespace pcs
