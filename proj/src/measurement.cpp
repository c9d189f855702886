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

#include "pcs/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

#include "pcs/errors.hpp"
#include "pcs/text.hpp"

namespace pcs {

RealVector finalize_probabilities(RealVector raw) {
  const double total = raw.sum();
  if (!std::isfinite(total) || std::abs(total - 1.0) > kTolerances.probability_sum) {
    throw NumericIntegrityError("outcome probabilities sum to " + format_double(total));
  }
  for (Eigen::Index k = 0; k < raw.size(); ++k) {
    if (raw(k) < -kTolerances.probability_floor) {
      throw NumericIntegrityError("outcome probability " + format_double(raw(k)) + " at index " +
                                  std::to_string(k) + " is negative");
    }
    raw(k) = std::clamp(raw(k), 0.0, 1.0);
  }
  return raw / raw.sum();
}

RealVector outcome_probabilities(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw std::invalid_argument("outcome_probabilities: basis dimension does not match the state");
  }
  const ComplexMatrix conjugated = u.adjoint() * rho.matrix() * u;
  return finalize_probabilities(conjugated.diagonal().real());
}

Eigen::Index sample_outcome(const RealVector& probabilities, double uniform) {
  double cumulative = 0.0;
  Eigen::Index last_positive = 0;
  for (Eigen::Index k = 0; k < probabilities.size(); ++k) {
    if (probabilities(k) > 0.0) last_positive = k;
    cumulative += probabilities(k);
    if (uniform < cumulative) return k;
  }
  // Rounding left the total just below the draw.
  return last_positive;
}

MeasurementRecord measure_with_unitary(const DensityMatrix& rho, const ComplexMatrix& u, double uniform) {
  const RealVector p = outcome_probabilities(rho, u);
  const Eigen::Index j = sample_outcome(p, uniform);
  return MeasurementRecord{u.col(j), j};
}

ShadowSampler::ShadowSampler(const DensityMatrix& rho) : n_qubits_(rho.n_qubits()) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  const Eigen::Index rank = (eig.eigenvalues.array() > kTolerances.factor_eigen_floor).count();
  // Eigenvalues are sorted descending, so the kept ones lead.
  factor_ = eig.eigenvectors.leftCols(rank) * eig.eigenvalues.head(rank).cwiseSqrt().asDiagonal();
  trace_ = factor_.squaredNorm();
}

RealVector ShadowSampler::probabilities(const HaarUnitary& u) const {
  const ComplexMatrix g = u.adjoint_times(factor_);
  return finalize_probabilities(g.rowwise().squaredNorm());
}

MeasurementRecord ShadowSampler::measure_reference(RngStream& rng, double* uniform_out) const {
  const double draw = rng.uniform();
  if (uniform_out != nullptr) *uniform_out = draw;
  const HaarUnitary u(dim(), rng);
  const Eigen::Index j = sample_outcome(probabilities(u), draw);
  return MeasurementRecord{u.column(j), j};
}

MeasurementRecord ShadowSampler::measure(RngStream& rng, double* uniform_out) const {
  const double draw = rng.uniform();
  if (uniform_out != nullptr) *uniform_out = draw;
  const Eigen::Index d = dim();
  const double target = draw * trace_;

  // Column k of the positive-diagonal QR factor of the Ginibre matrix is its
  // k-th column orthogonalized against the earlier ones, so U can be grown
  // left to right. Columns are drawn in blocks so the projections run as
  // matrix products; two Gram-Schmidt passes keep U unitary to rounding.
  constexpr Eigen::Index kBlock = 16;
  ComplexMatrix basis(d, d);
  ComplexMatrix coeff;
  double cumulative = 0.0;
  Eigen::Index last_positive = 0;
  for (Eigen::Index start = 0; start < d; start += kBlock) {
    const Eigen::Index width = std::min(kBlock, d - start);
    auto block = basis.middleCols(start, width);
    for (Eigen::Index c = 0; c < width; ++c) {
      for (Eigen::Index i = 0; i < d; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        block(i, c) = Complex(re, im);
      }
    }
    if (start > 0) {
      const auto done = basis.leftCols(start);
      for (int pass = 0; pass < 2; ++pass) {
        coeff.noalias() = done.adjoint() * block;
        block.noalias() -= done * coeff;
      }
    }
    for (Eigen::Index c = 0; c < width; ++c) {
      auto col = block.col(c);
      for (int pass = 0; pass < 2 && c > 0; ++pass) {
        const ComplexVector local = block.leftCols(c).adjoint() * col;
        col.noalias() -= block.leftCols(c) * local;
      }
      col /= col.norm();
    }
    const RealVector p = (block.adjoint() * factor_).rowwise().squaredNorm();
    for (Eigen::Index c = 0; c < width; ++c) {
      if (p(c) > 0.0) last_positive = start + c;
      cumulative += p(c);
      if (target < cumulative) return MeasurementRecord{block.col(c), start + c};
    }
  }
  // Rounding left the total just below the draw.
  return MeasurementRecord{basis.col(last_positive), last_positive};
}

MeasurementRecord measure_once(const DensityMatrix& rho, RngStream& rng) { return ShadowSampler(rho).measure(rng); }

ComplexMatrix snapshot_matrix(const MeasurementRecord& rec) {
  const Eigen::Index dim = rec.basis_column.size();
  return static_cast<double>(dim + 1) * (rec.basis_column * rec.basis_column.adjoint()) -
         ComplexMatrix::Identity(dim, dim);
}

ShadowAccumulator::ShadowAccumulator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kTolerances.dense_qubit_limit) {
    throw std::invalid_argument("ShadowAccumulator: qubit count out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  sum_outer_ = ComplexMatrix::Zero(dim, dim);
}

void ShadowAccumulator::add(const MeasurementRecord& rec) {
  if (rec.basis_column.size() != sum_outer_.rows()) {
    throw std::invalid_argument("ShadowAccumulator::add: record dimension does not match");
  }
  sum_outer_.noalias() += rec.basis_column * rec.basis_column.adjoint();
  ++count_;
}

void ShadowAccumulator::merge(const ShadowAccumulator& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("ShadowAccumulator::merge: qubit counts differ");
  sum_outer_ += other.sum_outer_;
  count_ += other.count_;
}

ComplexMatrix cs_estimate(const ShadowAccumulator& acc) {
  if (acc.count() == 0) throw EmptyAccumulatorError("cs_estimate: no measurements recorded");
  const Eigen::Index dim = acc.sum_outer().rows();
  const double scale = static_cast<double>(dim + 1) / static_cast<double>(acc.count());
  return scale * acc.sum_outer() - ComplexMatrix::Identity(dim, dim);
}

ShadowAccumulator collect_shadow_serial(const ShadowSampler& sampler, std::int64_t shots, const RngStream& stream,
                                        SnapshotLog* log) {
  if (shots < 0) throw std::invalid_argument("collect_shadow_serial: negative shot count");
  ShadowAccumulator acc(sampler.n_qubits());
  if (log != nullptr) log->assign(static_cast<std::size_t>(shots), SnapshotEntry{});
  for (std::int64_t m = 0; m < shots; ++m) {
    RngStream rng = stream.split(static_cast<std::uint64_t>(m));
    double draw = 0.0;
    const MeasurementRecord rec = sampler.measure(rng, &draw);
    if (log != nullptr) (*log)[static_cast<std::size_t>(m)] = SnapshotEntry{m, rec.outcome_index, draw};
    acc.add(rec);
  }
  return acc;
}

ShadowAccumulator collect_shadow(const ShadowSampler& sampler, std::int64_t shots, const RngStream& stream,
                                 SnapshotLog* log, std::int64_t chunk, int threads) {
  if (shots < 0) throw std::invalid_argument("collect_shadow: negative shot count");
  if (chunk < 1) throw std::invalid_argument("collect_shadow: chunk size must be positive");
  const std::int64_t chunks = (shots + chunk - 1) / chunk;
  if (chunks == 0) return ShadowAccumulator(sampler.n_qubits());
  if (log != nullptr) log->assign(static_cast<std::size_t>(shots), SnapshotEntry{});

  std::vector<ShadowAccumulator> parts(static_cast<std::size_t>(chunks), ShadowAccumulator(sampler.n_qubits()));
  std::exception_ptr failure;
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (std::int64_t c = 0; c < chunks; ++c) {
    try {
      ShadowAccumulator& part = parts[static_cast<std::size_t>(c)];
      const std::int64_t end = std::min(shots, (c + 1) * chunk);
      for (std::int64_t m = c * chunk; m < end; ++m) {
        RngStream rng = stream.split(static_cast<std::uint64_t>(m));
        double draw = 0.0;
        const MeasurementRecord rec = sampler.measure(rng, &draw);
        if (log != nullptr) (*log)[static_cast<std::size_t>(m)] = SnapshotEntry{m, rec.outcome_index, draw};
        part.add(rec);
      }
    } catch (...) {
#pragma omp critical(pcs_collect_shadow_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t stride = 1; stride < parts.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < parts.size(); i += 2 * stride) parts[i].merge(parts[i + stride]);
  }
  return std::move(parts.front());
}

bool replay_matches(const ShadowSampler& sampler, const RngStream& stream, const SnapshotLog& log) {
  for (const SnapshotEntry& entry : log) {
    RngStream rng = stream.split(static_cast<std::uint64_t>(entry.m));
    double draw = 0.0;
    const MeasurementRecord rec = sampler.measure(rng, &draw);
    if (rec.outcome_index != entry.outcome_index || draw != entry.uniform_draw) return false;
  }
  return true;
}

void write_snapshot_log(std::ostream& out, const SnapshotLog& log) {
  out << "m,outcome_index,uniform_draw\n";
  for (const SnapshotEntry& e : log) {
    out << e.m << ',' << e.outcome_index << ',' << format_double(e.uniform_draw) << '\n';
  }
}

SnapshotLog read_snapshot_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "m,outcome_index,uniform_draw") {
    throw std::runtime_error("snapshot log: missing or unexpected header");
  }
  SnapshotLog log;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 3) throw std::runtime_error("snapshot log: expected 3 fields in '" + line + "'");
    log.push_back(SnapshotEntry{parse_int64(fields[0]), static_cast<Eigen::Index>(parse_int64(fields[1])),
                                parse_double(fields[2])});
  }
  return log;
}

}  // namespace pcs
