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

#include "pcs/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcs {

double hermitian_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_defect: matrix is not square");
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

bool is_power_of_two(std::size_t value) noexcept { return std::has_single_bit(value); }

int log2_exact(std::size_t value) {
  if (!is_power_of_two(value)) {
    throw std::invalid_argument("dimension " + std::to_string(value) + " is not a power of two");
  }
  return std::countr_zero(value);
}

HaarUnitary::HaarUnitary(Eigen::Index dim, RngStream& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  ComplexMatrix ginibre(dim, dim);
  for (Eigen::Index k = 0; k < ginibre.size(); ++k) {
    const double re = rng.normal();
    const double im = rng.normal();
    ginibre.data()[k] = Complex(re, im);
  }
  qr_.compute(ginibre);
  phases_.resize(dim);
  const auto& r = qr_.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    phases_(k) = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
  }
}

ComplexMatrix HaarUnitary::matrix() const {
  ComplexMatrix q = qr_.householderQ();
  return q * phases_.asDiagonal();
}

ComplexMatrix HaarUnitary::adjoint_times(const ComplexMatrix& f) const {
  if (f.rows() != dim()) throw std::invalid_argument("HaarUnitary::adjoint_times: row mismatch");
  ComplexMatrix out = f;
  out.applyOnTheLeft(qr_.householderQ().adjoint());
  return phases_.conjugate().asDiagonal() * out;
}

ComplexVector HaarUnitary::column(Eigen::Index j) const {
  if (j < 0 || j >= dim()) throw std::out_of_range("HaarUnitary::column: index out of range");
  ComplexVector e = ComplexVector::Zero(dim());
  e(j) = 1.0;
  e.applyOnTheLeft(qr_.householderQ());
  return e * phases_(j);
}

ComplexMatrix haar_unitary(Eigen::Index dim, RngStream& rng) { return HaarUnitary(dim, rng).matrix(); }

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eig: matrix is not square");
  if (h.size() == 0) throw std::invalid_argument("hermitian_eig: empty matrix");
  if (!h.allFinite()) throw std::invalid_argument("hermitian_eig: non-finite entries");
  const double defect = hermitian_defect(h);
  if (defect > kTolerances.hermitian_input * h.norm()) {
    throw std::invalid_argument("hermitian_eig: input not Hermitian (defect " + std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  // Eigen returns ascending order.
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

namespace {

Eigen::Index numerical_rank(const RealVector& sigma, Eigen::Index rows, Eigen::Index cols) {
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = sigma(0) * static_cast<double>(std::max(rows, cols)) *
                        std::numeric_limits<double>::epsilon();
  return (sigma.array() > cutoff).count();
}

}  // namespace

namespace {

// Eigen 3.4.0's BDCSVD returns inconsistent factors for some complex
// unfoldings under -O3 -march=native (reconstruction errors of order one),
// so every SVD here goes through one-sided Jacobi.
using Svd = Eigen::JacobiSVD<ComplexMatrix>;

}  // namespace

TruncatedSvd truncated_svd(const ComplexMatrix& a, Eigen::Index max_rank) {
  if (max_rank < 1) throw std::invalid_argument("truncated_svd: max_rank must be positive");
  if (!a.allFinite()) throw std::invalid_argument("truncated_svd: non-finite entries");
  Svd svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sigma = svd.singularValues();
  const Eigen::Index keep = std::min(max_rank, numerical_rank(sigma, a.rows(), a.cols()));
  TruncatedSvd out;
  out.u = svd.matrixU().leftCols(keep);
  out.singular_values = sigma.head(keep);
  out.vh = svd.matrixV().leftCols(keep).adjoint();
  out.discarded_tail_energy = sigma.tail(sigma.size() - keep).squaredNorm();
  return out;
}

RealVector singular_values(const ComplexMatrix& a) {
  Svd svd(a);
  return svd.singularValues();
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale) {
  const HermitianEig eig = hermitian_eig(h);
  const RealVector exponents = scale * eig.eigenvalues;
  if (exponents.maxCoeff() > kTolerances.exp_overflow) {
    throw std::range_error("expm_hermitian: exponent " + std::to_string(exponents.maxCoeff()) + " overflows");
  }
  const RealVector weights = exponents.array().exp();
  return eig.eigenvectors * weights.asDiagonal() * eig.eigenvectors.adjoint();
}

namespace {

Eigen::Index select_rank(const RealVector& sigma, const TtRule& rule) {
  Eigen::Index keep = sigma.size();
  if (rule.max_rank > 0) keep = std::min(keep, rule.max_rank);
  if (rule.noise_floor > 0.0) keep = std::min<Eigen::Index>(keep, (sigma.array() > rule.noise_floor).count());
  if (rule.step_tolerance > 0.0) {
    const double budget = rule.step_tolerance * rule.step_tolerance;
    double tail = 0.0;
    Eigen::Index k = sigma.size();
    while (k > 0 && tail + sigma(k - 1) * sigma(k - 1) <= budget) {
      tail += sigma(k - 1) * sigma(k - 1);
      --k;
    }
    keep = std::min(keep, k);
  }
  return std::max<Eigen::Index>(keep, 1);
}

}  // namespace

TtSweep tt_sweep(const ComplexVector& tensor, Eigen::Index mode, int order, const TtRule& rule) {
  if (mode < 1 || order < 1) throw std::invalid_argument("tt_sweep: mode and order must be positive");
  Eigen::Index expected = 1;
  for (int l = 0; l < order; ++l) expected *= mode;
  if (tensor.size() != expected) throw std::invalid_argument("tt_sweep: tensor size does not match mode^order");

  TtSweep out;
  ComplexMatrix remainder = tensor;  // viewed below with varying shapes
  Eigen::Index left = 1;
  for (int step = 1; step < order; ++step) {
    const Eigen::Index rows = left * mode;
    const Eigen::Index cols = remainder.size() / rows;
    const Eigen::Map<const ComplexMatrix> unfolding(remainder.data(), rows, cols);
    Svd svd(unfolding, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sigma = svd.singularValues();
    const Eigen::Index keep = select_rank(sigma, rule);

    out.cores.push_back(svd.matrixU().leftCols(keep));
    out.discarded.push_back(sigma.tail(sigma.size() - keep).squaredNorm());
    out.ranks.push_back(keep);
    // keep x cols; column-major storage makes this (keep*mode) x (cols/mode).
    remainder = sigma.head(keep).asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
    left = keep;
  }
  out.cores.push_back(Eigen::Map<const ComplexMatrix>(remainder.data(), left * mode, 1));
  return out;
}

ComplexVector tt_contract(const std::vector<ComplexMatrix>& cores, Eigen::Index mode) {
  if (cores.empty()) throw std::invalid_argument("tt_contract: no cores");
  ComplexMatrix partial = cores.front();  // mode x r_1
  if (partial.rows() != mode) throw std::invalid_argument("tt_contract: first core must have one left bond");
  for (std::size_t l = 1; l < cores.size(); ++l) {
    const ComplexMatrix& core = cores[l];
    const Eigen::Index left = partial.cols();
    if (core.rows() != left * mode) throw std::invalid_argument("tt_contract: inconsistent bond dimensions");
    const Eigen::Index block = partial.rows();
    ComplexMatrix next(block * mode, core.cols());
    for (Eigen::Index q = 0; q < mode; ++q) {
      next.middleRows(q * block, block).noalias() = partial * core.middleRows(q * left, left);
    }
    partial = std::move(next);
  }
  if (partial.cols() != 1) throw std::invalid_argument("tt_contract: last core must have one right bond");
  return partial.col(0);
}

}  // namespace pcs
