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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcs/metrics.hpp"
#include "pcs/states.hpp"

namespace pcs {
namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

TEST(Frobenius, Basics) {
  const ComplexMatrix a = diag2(1, 0);
  EXPECT_EQ(frobenius_distance(a, a), 0.0);
  EXPECT_NEAR(frobenius_distance(a, diag2(0, 1)), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(frobenius_distance(a, ComplexMatrix::Zero(3, 3)), std::invalid_argument);
}

TEST(Frobenius, MatchesNaiveSum) {
  RngStream rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = oracle::random_complex(8, 8, rng);
    const ComplexMatrix b = oracle::random_complex(8, 8, rng);
    const double expected = oracle::frobenius_by_sum(a, b);
    EXPECT_NEAR(frobenius_distance(a, b), expected, 1e-12 * expected);
    EXPECT_EQ(frobenius_distance(a, b), frobenius_distance(b, a));
  }
}

TEST(TraceDistance, Basics) {
  const ComplexMatrix a = diag2(1, 0);
  EXPECT_EQ(trace_distance(a, a), 0.0);
  EXPECT_NEAR(trace_distance(a, diag2(0, 1)), 2.0, 1e-15);
  EXPECT_THROW(trace_distance(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(trace_distance(a, ComplexMatrix::Zero(3, 3)), std::invalid_argument);
}

TEST(TraceDistance, MatchesEigenvaluesForHermitian) {
  RngStream rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = oracle::random_hermitian(8, rng);
    const ComplexMatrix b = oracle::random_hermitian(8, rng);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a - b);
    const double expected = solver.eigenvalues().cwiseAbs().sum();
    EXPECT_NEAR(trace_distance(a, b), expected, 1e-10);
  }
}

TEST(TraceDistance, LowRankBound) {
  RngStream rng(3);
  for (int k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      ComplexMatrix diff = ComplexMatrix::Zero(16, 16);
      for (int j = 0; j < k; ++j) {
        const ComplexVector v = oracle::random_unit_vector(16, rng);
        diff += rng.normal() * v * v.adjoint();
      }
      const ComplexMatrix zero = ComplexMatrix::Zero(16, 16);
      EXPECT_LE(trace_distance(diff, zero), std::sqrt(2.0 * k) * frobenius_distance(diff, zero) + 1e-12);
    }
  }
}

TEST(ErrorRecord, FieldsAgree) {
  const ErrorRecord rec = error_record(diag2(1, 0), diag2(0, 1));
  EXPECT_NEAR(rec.frob_err, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(rec.frob_err_sq, 2.0, 1e-15);
  EXPECT_NEAR(rec.trace_err, 2.0, 1e-15);
}

TEST(PredictedMse, Examples) {
  EXPECT_DOUBLE_EQ(predicted_mse(1, basis_state(1, 0), 4), 1.0);
  EXPECT_DOUBLE_EQ(predicted_mse(2, ghz_state(2), 50), 0.36);
  for (int n = 1; n <= 4; ++n) {
    const double d = std::ldexp(1.0, n);
    EXPECT_DOUBLE_EQ(predicted_mse(n, maximally_mixed_state(n), 7), (d * d + d - 1 - 1 / d) / 7);
  }
  EXPECT_THROW(predicted_mse(1, basis_state(1, 0), 0), std::invalid_argument);
  EXPECT_THROW(predicted_mse(2, basis_state(1, 0), 1), std::invalid_argument);
}

TEST(PredictedMse, HalvesWhenShotsDouble) {
  for (int n = 1; n <= 5; ++n) {
    for (std::int64_t m : {1, 3, 100, 12345}) {
      EXPECT_EQ(predicted_mse(n, basis_state(n, 0), 2 * m) * 2, predicted_mse(n, basis_state(n, 0), m));
    }
  }
}

TEST(Summarize, Examples) {
  const std::vector<double> one{3.0};
  const Summary a = summarize(one);
  EXPECT_EQ(a.mean, 3.0);
  EXPECT_EQ(a.standard_error, 0.0);
  EXPECT_EQ(a.count, 1U);
  const std::vector<double> two{1.0, 3.0};
  const Summary b = summarize(two);
  EXPECT_EQ(b.mean, 2.0);
  EXPECT_DOUBLE_EQ(b.standard_error, 1.0);
  const std::vector<double> same(10, 0.25);
  EXPECT_EQ(summarize(same).standard_error, 0.0);
  EXPECT_THROW(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST(Summarize, NormalDraws) {
  RngStream rng(4);
  std::vector<double> values(10000);
  for (double& v : values) v = rng.normal();
  const Summary s = summarize(values);
  EXPECT_LE(std::abs(s.mean), 0.03);
  EXPECT_NEAR(s.standard_error, 0.01, 0.001);
}

}  // namespace
}  // namespace pcs
