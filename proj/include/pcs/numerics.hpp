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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pcs/rng.hpp"

namespace pcs {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Every numeric tolerance used by the library, in one place.
struct Tolerances {
  double unitarity = 1e-12;
  double eig_reconstruction = 1e-10;
  /// Allowed ||H - H^dagger||_max relative to ||H||_F for eigensolver input.
  double hermitian_input = 1e-8;
  double density_hermitian = 1e-10;
  double density_trace = 1e-10;
  double density_psd = 1e-10;
  double pure_norm = 1e-12;
  /// |sum p - 1| above this is a numeric-integrity error.
  double probability_sum = 1e-6;
  /// Negative probabilities above -floor are rounding and get clamped.
  double probability_floor = 1e-9;
  /// Largest exponent accepted by expm_hermitian.
  double exp_overflow = 700.0;
  /// Singular values below this times ||H||_F are dropped in capped TT-SVD.
  double tt_noise_floor = 1e-14;
  /// Eigenvalues at or below this are dropped from a state's sampling factor.
  double factor_eigen_floor = 1e-14;
  /// Largest qubit count for which dense 2^n x 2^n matrices are formed.
  int dense_qubit_limit = 12;
};

inline constexpr Tolerances kTolerances{};

struct HermitianEig {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalue k
};

struct TruncatedSvd {
  ComplexMatrix u;
  RealVector singular_values;
  ComplexMatrix vh;
  double discarded_tail_energy = 0.0;
};

/// Largest entry of |H - H^dagger|. Requires a square matrix.
double hermitian_defect(const ComplexMatrix& h);

bool is_power_of_two(std::size_t value) noexcept;
/// log2 of a power of two; throws std::invalid_argument otherwise.
int log2_exact(std::size_t value);

/// A Haar-random unitary kept in Householder form, U = Q diag(R_kk/|R_kk|)
/// where Q R is the QR factorization of a complex Ginibre matrix. The
/// measurement simulator only needs U^dagger F and one column of U, both of
/// which are cheaper from the reflectors than from an explicit U.
class HaarUnitary {
 public:
  /// Draws dim*dim complex normals (real part then imaginary part,
  /// column-major) from `rng`.
  HaarUnitary(Eigen::Index dim, RngStream& rng);

  Eigen::Index dim() const { return qr_.rows(); }
  ComplexMatrix matrix() const;
  ComplexMatrix adjoint_times(const ComplexMatrix& f) const;
  ComplexVector column(Eigen::Index j) const;

 private:
  Eigen::HouseholderQR<ComplexMatrix> qr_;
  ComplexVector phases_;
};

ComplexMatrix haar_unitary(Eigen::Index dim, RngStream& rng);

HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Top-min(max_rank, rank(A)) singular triplets of A. The discarded tail
/// energy is the sum of squared singular values that were dropped.
TruncatedSvd truncated_svd(const ComplexMatrix& a, Eigen::Index max_rank);

/// All singular values, descending.
RealVector singular_values(const ComplexMatrix& a);

/// V diag(exp(scale * lambda)) V^dagger for Hermitian H.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale);

/// Bond selection for a tensor-train sweep. A step keeps
///   min(max_rank, #{sigma > noise_floor}, smallest k with tail(k) <= step_tolerance^2)
/// singular values, never fewer than one. Non-positive fields are inactive.
struct TtRule {
  Eigen::Index max_rank = 0;
  double step_tolerance = 0.0;
  double noise_floor = 0.0;
};

struct TtSweep {
  /// Core l is (r_{l-1} * mode) x r_l with row index a + r_{l-1} * q.
  std::vector<ComplexMatrix> cores;
  /// Squared Frobenius norm dropped at each of the order-1 steps.
  std::vector<double> discarded;
  /// r_1 .. r_{order-1}.
  std::vector<Eigen::Index> ranks;
};

/// Left-to-right sequential SVD of a tensor with `order` modes of size
/// `mode`, stored with mode 1 varying fastest. Cores 1..order-1 are left
/// orthonormal, so ||T - contract(cores)||_F^2 = sum(discarded).
TtSweep tt_sweep(const ComplexVector& tensor, Eigen::Index mode, int order, const TtRule& rule);

/// Contracts a sweep back into a tensor in the same storage order.
ComplexVector tt_contract(const std::vector<ComplexMatrix>& cores, Eigen::Index mode);

}  // namespace pcs
