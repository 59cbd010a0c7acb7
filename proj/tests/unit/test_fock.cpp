// Copyright 2026 The qdeform Authors
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
#include <complex>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdeform/error.hpp"
#include "qdeform/fock.hpp"

namespace qdeform {
namespace {

const Complex kI{0.0, 1.0};

// Oracle checks first: independent reference routes.

TEST(FockOracle, CoherentAmplitudesMatchArbitraryPrecision) {
  for (Complex alpha : {Complex(1.0, 0.0), Complex(0.3, -0.7), Complex(-1.5, 1.0), Complex(2.5, 0.0)}) {
    const FockVector v = coherent_state(alpha, 64);
    for (std::size_t n = 0; n < 64; ++n) {
      const Complex ref = oracle::coherent_amplitude(alpha, n);
      EXPECT_NEAR(std::abs(v[n] - ref), 0.0, 1e-14 * std::max(1.0, std::abs(ref))) << "n=" << n;
    }
  }
}

TEST(FockOracle, VacuumAmplitudeOfUnitCoherentState) {
  // e^{-1/2}
  EXPECT_NEAR(coherent_state(1.0, 64)[0].real(), 0.606530659712633423603799534991, 1e-15);
}

TEST(FockOracle, TailMassMatchesPoissonSum) {
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    const FockVector v = coherent_state(a, 64);
    for (std::size_t k : {1u, 4u, 10u, 20u}) {
      const double ref = static_cast<double>(oracle::poisson_tail(a * a, k, 63));
      EXPECT_NEAR(tail_mass(v, k), ref, 1e-14 + 1e-12 * ref) << "a=" << a << " k=" << k;
    }
  }
}

TEST(FockOracle, ExponentialMatchesEigendecompositionRoute) {
  for (std::size_t dim : {8u, 32u, 64u}) {
    const FockOperator a = make_annihilator(dim);
    const Complex alpha(0.8, -0.4);
    const FockOperator m = alpha * a.adjoint() - std::conj(alpha) * a;
    const Eigen::MatrixXcd ref = oracle::expm_antihermitian(m.matrix());
    EXPECT_LT((matrix_exponential(m).matrix() - ref).cwiseAbs().maxCoeff(), 1e-12) << "dim=" << dim;
  }
}

TEST(FockOracle, ExponentialMatchesSeries) {
  Eigen::MatrixXcd m(3, 3);
  m << 0.1, 0.2 * kI, -0.05, 0.3, -0.2, 0.1 * kI, 0.0, 0.25, 0.05;
  const Eigen::MatrixXcd ref = oracle::expm_taylor(m);
  EXPECT_LT((matrix_exponential(FockOperator(m)).matrix() - ref).cwiseAbs().maxCoeff(), 1e-14);
}

// Contract examples.

TEST(FockOperators, LadderEntries) {
  const FockOperator a = make_annihilator(4);
  EXPECT_DOUBLE_EQ(a(1, 2).real(), std::sqrt(2.0));
  EXPECT_EQ(a(2, 1), Complex(0.0));
  EXPECT_DOUBLE_EQ(make_creation(4)(2, 1).real(), std::sqrt(2.0));
  const FockOperator n = make_number(4);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(n(i, i).real(), static_cast<double>(i));
}

TEST(FockOperators, CommutatorIsIdentityAwayFromEdge) {
  const std::size_t dim = 16;
  const FockOperator a = make_annihilator(dim);
  const FockOperator c = a * a.adjoint() - a.adjoint() * a;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    for (std::size_t j = 0; j + 1 < dim; ++j) {
      EXPECT_NEAR(std::abs(c(i, j) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-13) << i << "," << j;
    }
  }
  // Truncation artifact on the last level.
  EXPECT_NEAR(c(dim - 1, dim - 1).real(), 1.0 - static_cast<double>(dim), 1e-13);
}

TEST(FockOperators, CreationIsAdjointOfAnnihilation) {
  const FockOperator a = make_annihilator(9);
  EXPECT_EQ((make_creation(9).matrix() - a.matrix().adjoint()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(FockOperators, ExponentialOfZeroIsIdentity) {
  EXPECT_EQ((matrix_exponential(FockOperator::zero(6)).matrix() - Eigen::MatrixXcd::Identity(6, 6))
                .cwiseAbs()
                .maxCoeff(),
            0.0);
}

TEST(FockOperators, DisplacementIsUnitary) {
  const FockOperator a = make_annihilator(64);
  const Complex alpha(1.0, 0.5);
  const FockOperator d = matrix_exponential(alpha * a.adjoint() - std::conj(alpha) * a);
  const Eigen::MatrixXcd u = d.matrix().adjoint() * d.matrix();
  EXPECT_LT((u - Eigen::MatrixXcd::Identity(64, 64)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FockOperators, DisplacedVacuumIsCoherentState) {
  const std::size_t dim = 64;
  const FockOperator a = make_annihilator(dim);
  const Complex alpha(0.7, 0.2);
  const FockVector v =
      matrix_exponential(alpha * a.adjoint() - std::conj(alpha) * a) * FockVector::basis(dim, 0);
  const FockVector c = coherent_state(alpha, dim);
  EXPECT_LT((v.amplitudes() - c.amplitudes()).norm(), 1e-12);
}

TEST(FockErrors, RejectsBadInput) {
  EXPECT_THROW(make_annihilator(0), InvalidDimension);
  EXPECT_THROW(FockVector::basis(4, 4), OutOfRange);
}

TEST(FockErrors, NonFiniteOperandsAreRejected) {
  Eigen::MatrixXcd nan = Eigen::MatrixXcd::Zero(2, 2);
  nan(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(FockOperator{nan}, InvalidOperand);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
  v(1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(FockVector{v}, InvalidOperand);
}

TEST(FockErrors, MismatchedDimensions) {
  EXPECT_THROW(make_annihilator(3) * make_annihilator(4), DimensionMismatch);
  EXPECT_THROW(inner_product(FockVector(3), FockVector(4)), DimensionMismatch);
  EXPECT_THROW(make_annihilator(3) * FockVector(5), DimensionMismatch);
}

TEST(FockErrors, TailMassPreconditions) {
  EXPECT_THROW(tail_mass(FockVector(4), 1), NullState);
  EXPECT_THROW(tail_mass(coherent_state(1.0, 4), 4), OutOfRange);
}

TEST(FockTruncation, FlagsLargeAmplitude) {
  EXPECT_FALSE(check_truncation(coherent_state(2.0, 64)).flagged);
  EXPECT_TRUE(check_truncation(coherent_state(6.0, 64)).flagged);
  EXPECT_LT(check_truncation(coherent_state(1.0, 64)).tail, kTailTolerance);
}

TEST(FockTwoMode, TensorProductAndInnerProduct) {
  const FockVector u = coherent_state(0.5, 12);
  const FockVector v = coherent_state(Complex(0.0, -0.5), 12);
  const TwoModeVector t = tensor_product(u, v);
  EXPECT_EQ(t.at(2, 3), u[2] * v[3]);
  EXPECT_NEAR(std::abs(inner_product(t, t) - inner_product(u, u) * inner_product(v, v)), 0.0, 1e-15);
  EXPECT_EQ(t.as_matrix()(2, 3), t.at(2, 3));
}

TEST(FockVectorOps, CoherentStateIsNormalized) {
  EXPECT_NEAR(coherent_state(1.3, 64).norm(), 1.0, 1e-13);
  EXPECT_EQ(coherent_state(0.0, 8).amplitudes(), FockVector::basis(8, 0).amplitudes());
}

}  // namespace
}  // namespace qdeform
