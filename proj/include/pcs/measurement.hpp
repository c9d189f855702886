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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pcs/numerics.hpp"
#include "pcs/rng.hpp"
#include "pcs/states.hpp"

namespace pcs {

/// One single-shot outcome: the observed basis vector phi = U e_j and j.
struct MeasurementRecord {
  ComplexVector basis_column;
  Eigen::Index outcome_index = 0;
};

/// p_k = e_k^dagger (U^dagger rho U) e_k by explicit conjugation.
/// Throws NumericIntegrityError if the raw probabilities sum more than
/// 1e-6 away from one or go more negative than -1e-9. The result is
/// clamped to [0, 1] and renormalized.
RealVector outcome_probabilities(const DensityMatrix& rho, const ComplexMatrix& u);

/// Applies the clamp-and-renormalize rule above to raw probabilities.
RealVector finalize_probabilities(RealVector raw);

/// Inverse-CDF draw: the first k whose cumulative probability exceeds
/// `uniform`, summing in index order.
Eigen::Index sample_outcome(const RealVector& probabilities, double uniform);

/// Deterministic measurement in a given basis with a given uniform draw.
MeasurementRecord measure_with_unitary(const DensityMatrix& rho, const ComplexMatrix& u, double uniform);

/// Simulates Haar-random single-shot measurements of a fixed state. Holds
/// a factor F with rho = F F^dagger (eigenvectors scaled by the square
/// roots of eigenvalues above kTolerances.factor_eigen_floor), so outcome
/// probabilities cost O(4^n rank) once the basis is drawn.
class ShadowSampler {
 public:
  explicit ShadowSampler(const DensityMatrix& rho);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return factor_.rows(); }
  const ComplexMatrix& factor() const { return factor_; }

  RealVector probabilities(const HaarUnitary& u) const;

  /// Draws the outcome uniform, then the Haar basis column by column
  /// (complex normals, real part first, column-major) until the cumulative
  /// outcome probability passes the draw. Only columns 0..j of U are ever
  /// built (by Gram-Schmidt), which in exact arithmetic equal those of the
  /// full sampler.
  MeasurementRecord measure(RngStream& rng, double* uniform_out = nullptr) const;

  /// Same draws, but builds the whole HaarUnitary and every outcome
  /// probability first. Kept as the reference for measure().
  MeasurementRecord measure_reference(RngStream& rng, double* uniform_out = nullptr) const;

 private:
  int n_qubits_;
  ComplexMatrix factor_;
  double trace_ = 1.0;
};

/// One measurement with a freshly sampled Haar basis. Builds a sampler per
/// call; repeated measurement of one state should reuse a ShadowSampler.
MeasurementRecord measure_once(const DensityMatrix& rho, RngStream& rng);

/// (2^n + 1) phi phi^dagger - I.
ComplexMatrix snapshot_matrix(const MeasurementRecord& rec);

/// Running sum of phi phi^dagger over recorded measurements.
class ShadowAccumulator {
 public:
  explicit ShadowAccumulator(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::int64_t count() const { return count_; }
  const ComplexMatrix& sum_outer() const { return sum_outer_; }

  void add(const MeasurementRecord& rec);
  void merge(const ShadowAccumulator& other);

 private:
  int n_qubits_;
  std::int64_t count_ = 0;
  ComplexMatrix sum_outer_;
};

/// (1/M) sum_m [(2^n + 1) phi_m phi_m^dagger - I]. Hermitian with unit
/// trace, generally not positive semidefinite. Throws EmptyAccumulatorError
/// when no measurement was recorded.
ComplexMatrix cs_estimate(const ShadowAccumulator& acc);

struct SnapshotEntry {
  std::int64_t m = 0;
  Eigen::Index outcome_index = 0;
  double uniform_draw = 0.0;

  friend bool operator==(const SnapshotEntry&, const SnapshotEntry&) = default;
};
using SnapshotLog = std::vector<SnapshotEntry>;

/// Measurements per work item in collect_shadow.
inline constexpr std::int64_t kShadowChunk = 64;

/// Reference kernel: measurement m draws from stream.split(m), in order.
ShadowAccumulator collect_shadow_serial(const ShadowSampler& sampler, std::int64_t shots, const RngStream& stream,
                                        SnapshotLog* log = nullptr);

/// OpenMP kernel. Chunks of `chunk` consecutive measurements are summed
/// privately and merged pairwise in a fixed tree, so the result does not
/// depend on the thread count. Records equal the serial kernel's; sums
/// agree to rounding. threads <= 0 uses the OpenMP default team size.
ShadowAccumulator collect_shadow(const ShadowSampler& sampler, std::int64_t shots, const RngStream& stream,
                                 SnapshotLog* log = nullptr, std::int64_t chunk = kShadowChunk, int threads = 0);

/// Re-draws every logged measurement from `stream` and compares outcome and
/// uniform draw exactly.
bool replay_matches(const ShadowSampler& sampler, const RngStream& stream, const SnapshotLog& log);

/// CSV with header m,outcome_index,uniform_draw.
void write_snapshot_log(std::ostream& out, const SnapshotLog& log);
SnapshotLog read_snapshot_log(std::istream& in);

}  // namespace pcs
