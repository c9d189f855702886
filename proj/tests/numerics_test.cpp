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
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcs/numerics.hpp"
#include "pcs/rng.hpp"

namespace pcs {
namespace {

TEST(Rng, Mix64MatchesSplitMix64Reference) {
  // First output of SplitMix64 started from state 0 (mix64 adds the increment).
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Rng, SameSeedSameSequence) {
  RngStream a(17), b(17);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next_u64(), b.next_u64());
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.normal(), b.normal());
}

TEST(Rng, SplitIgnoresConsumption) {
  RngStream a(5);
  const RngStream fresh = a.split(3);
  for (int k = 0; k < 10; ++k) a.next_u64();
  RngStream x = fresh;
  RngStream y = a.split(3);
  EXPECT_EQ(x.next_u64(), y.next_u64());
  EXPECT_NE(a.split(3).seed(), a.split(4).seed());
}

TEST(Rng, UniformRangeAndMean) {
  RngStream rng(9);
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 3.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(Rng, NormalMoments) {
  RngStream rng(10);
  const int n = 100000;
  double s1 = 0.0, s2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double z = rng.normal();
    s1 += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s1 / n, 0.0, 3.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 3.0 * std::sqrt(2.0 / n));
}

TEST(Rng, StringHashDistinguishesIds) {
  EXPECT_NE(hash_string64("fig2-r1"), hash_string64("fig2-r4"));
  EXPECT_EQ(hash_string64("abc"), hash_string64("abc"));
  EXPECT_NE(hash_combine64(1, 2), hash_combine64(2, 1));
}

TEST(Numerics, PowerOfTwoHelpers) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(12));
  EXPECT_EQ(log2_exact(128), 7);
  EXPECT_THROW(log2_exact(6), std::invalid_argument);
}

double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

TEST(Haar, DimensionOneIsAPhase) {
  RngStream rng(1);
  const ComplexMatrix u = haar_unitary(1, rng);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-12);
}

TEST(Haar, ZeroDimensionRejected) {
  RngStream rng(1);
  EXPECT_THROW(haar_unitary(0, rng), std::invalid_argument);
}

TEST(Haar, UnitaryAcrossSeedsAndDims) {
  RngStream root(2);
  for (Eigen::Index dim : {1, 2, 3, 8, 16, 64, 256}) {
    const int seeds = dim >= 64 ? 5 : 200;
    for (int s = 0; s < seeds; ++s) {
      RngStream rng = root.split(static_cast<std::uint64_t>(dim * 1000 + s));
      ASSERT_LE(unitarity_defect(haar_unitary(dim, rng)), kTolerances.unitarity) << "dim " << dim;
    }
  }
}

TEST(Haar, FactoredFormAgreesWithExplicitMatrix) {
  RngStream rng(3);
  const HaarUnitary u(8, rng);
  const ComplexMatrix dense = u.matrix();
  RngStream frng(4);
  const ComplexMatrix f = oracle::random_complex(8, 3, frng);
  EXPECT_LE((u.adjoint_times(f) - dense.adjoint() * f).norm(), 1e-12);
  for (Eigen::Index j = 0; j < 8; ++j) EXPECT_LE((u.column(j) - dense.col(j)).norm(), 1e-13);
}

TEST(Haar, PhaseFixGivesPositiveDiagonalR) {
  // U = G R'^{-1} with R' upper triangular and positive on the diagonal.
  RngStream draw(5);
  RngStream copy = draw;
  const ComplexMatrix u = haar_unitary(6, draw);
  ComplexMatrix g(6, 6);
  for (Eigen::Index k = 0; k < g.size(); ++k) {
    const double re = copy.normal();
    const double im = copy.normal();
    g.data()[k] = Complex(re, im);
  }
  const ComplexMatrix r = u.adjoint() * g;
  for (Eigen::Index i = 0; i < 6; ++i) {
    EXPECT_GT(r(i, i).real(), 0.0);
    EXPECT_NEAR(r(i, i).imag(), 0.0, 1e-12);
    for (Eigen::Index j = 0; j < i; ++j) EXPECT_NEAR(std::abs(r(i, j)), 0.0, 1e-12);
  }
}

TEST(Haar, FirstMomentDimFour) {
  // E[U e1 e1^dagger U^dagger] = I/4. Entry variances from the Haar column
  // moments: diagonal 3/80, off-diagonal 1/20 (|u_i|^2 |u_j|^2 averages).
  const int samples = 100000;
  const Eigen::Index dim = 4;
  RngStream root(6);
  ComplexMatrix mean = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < samples; ++s) {
    RngStream rng = root.split(static_cast<std::uint64_t>(s));
    const ComplexVector c = HaarUnitary(dim, rng).column(0);
    mean += c * c.adjoint();
  }
  mean /= samples;
  const double d = static_cast<double>(dim);
  const double var_diag = 2.0 / (d * (d + 1.0)) - 1.0 / (d * d);
  const double var_off = 1.0 / (d * (d + 1.0));
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double target = i == j ? 1.0 / d : 0.0;
      const double sigma = std::sqrt((i == j ? var_diag : var_off) / samples);
      EXPECT_LE(std::abs(mean(i, j) - target), 3.0 * sigma) << i << "," << j;
    }
  }
}

TEST(HermitianEig, DiagonalInput) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 1.0;
  const HermitianEig e = hermitian_eig(h);
  EXPECT_NEAR(e.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.eigenvectors(1, 1)), 1.0, 1e-15);
}

TEST(HermitianEig, PauliX) {
  const HermitianEig e = hermitian_eig(oracle::pauli_x());
  EXPECT_NEAR(e.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), -1.0, 1e-15);
}

TEST(HermitianEig, RandomReconstructionAndOrdering) {
  RngStream rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = oracle::random_hermitian(8, rng);
    const HermitianEig e = hermitian_eig(h);
    const ComplexMatrix back = e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
    EXPECT_LE((back - h).norm(), kTolerances.eig_reconstruction * h.norm());
    EXPECT_LE(unitarity_defect(e.eigenvectors), 1e-10);
    for (Eigen::Index k = 1; k < 8; ++k) EXPECT_GE(e.eigenvalues(k - 1), e.eigenvalues(k));
  }
}

TEST(HermitianEig, RejectsBadInput) {
  EXPECT_THROW(hermitian_eig(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eig(h), std::invalid_argument);
}

TEST(TruncatedSvd, IdentityKeepsEverything) {
  const TruncatedSvd s = truncated_svd(ComplexMatrix::Identity(3, 3), 3);
  ASSERT_EQ(s.singular_values.size(), 3);
  for (Eigen::Index k = 0; k < 3; ++k) EXPECT_NEAR(s.singular_values(k), 1.0, 1e-15);
  EXPECT_EQ(s.discarded_tail_energy, 0.0);
}

TEST(TruncatedSvd, RankOneIsExact) {
  RngStream rng(8);
  const ComplexMatrix a = oracle::random_complex(5, 1, rng) * oracle::random_complex(1, 7, rng);
  const TruncatedSvd s = truncated_svd(a, 1);
  EXPECT_LE(s.discarded_tail_energy, 1e-20 * a.squaredNorm());
  EXPECT_LE((s.u * s.singular_values.cast<Complex>().asDiagonal() * s.vh - a).norm(), 1e-12 * a.norm());
}

TEST(TruncatedSvd, TailMatchesJacobiReference) {
  RngStream rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = oracle::random_complex(4, 16, rng);
    const TruncatedSvd s = truncated_svd(a, 2);
    const RealVector full = Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
    const double tail = full(2) * full(2) + full(3) * full(3);
    EXPECT_NEAR(s.discarded_tail_energy, tail, 1e-9 * tail);
    const ComplexMatrix approx = s.u * s.singular_values.cast<Complex>().asDiagonal() * s.vh;
    EXPECT_NEAR((a - approx).squaredNorm(), s.discarded_tail_energy, 1e-9 * a.squaredNorm());
  }
}

TEST(ExpmHermitian, ZeroGivesIdentity) {
  EXPECT_LE((expm_hermitian(ComplexMatrix::Zero(4, 4), 3.0) - ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(ExpmHermitian, DiagonalIsExact) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const ComplexMatrix e = expm_hermitian(h, -1.0);
  EXPECT_NEAR(e(0, 0).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(e(1, 1).real(), std::exp(1.0), 1e-15);
  EXPECT_EQ(e(0, 1), Complex(0.0, 0.0));
}

TEST(ExpmHermitian, PauliXSpectrum) {
  const HermitianEig e = hermitian_eig(expm_hermitian(oracle::pauli_x(), -0.5));
  EXPECT_NEAR(e.eigenvalues(0), std::exp(0.5), 1e-14);
  EXPECT_NEAR(e.eigenvalues(1), std::exp(-0.5), 1e-14);
  EXPECT_NEAR(e.eigenvalues(0), 1.6487212707, 1e-9);
  EXPECT_NEAR(e.eigenvalues(1), 0.6065306597, 1e-9);
}

TEST(ExpmHermitian, OverflowIsRangeError) {
  EXPECT_THROW(expm_hermitian(ComplexMatrix::Identity(2, 2), 701.0), std::range_error);
  EXPECT_NO_THROW(expm_hermitian(ComplexMatrix::Identity(2, 2), 699.0));
}

TEST(TensorTrain, ExactRoundTripWithoutTruncation) {
  RngStream rng(11);
  const ComplexVector t = oracle::random_complex(64, 1, rng);
  const TtSweep sweep = tt_sweep(t, 4, 3, TtRule{});
  EXPECT_LE((tt_contract(sweep.cores, 4) - t).norm(), 1e-12 * t.norm());
  EXPECT_EQ(sweep.ranks, (std::vector<Eigen::Index>{4, 4}));
}

TEST(TensorTrain, DiscardedEnergyEqualsSquaredError) {
  RngStream rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector t = oracle::random_complex(256, 1, rng);
    const TtSweep sweep = tt_sweep(t, 4, 4, TtRule{2, 0.0, 0.0});
    double total = 0.0;
    for (double e : sweep.discarded) total += e;
    EXPECT_NEAR((tt_contract(sweep.cores, 4) - t).squaredNorm(), total, 1e-10 * t.squaredNorm());
    for (Eigen::Index r : sweep.ranks) EXPECT_LE(r, 2);
  }
}

}  // namespace
}  // namespace pcs
