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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdeform/entanglement.hpp"
#include "qdeform/error.hpp"

namespace qdeform {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Brute-force concurrence: amplitude matrix mu u_alpha v_beta^T + nu u_gamma v_delta^T
// from independently assembled vectors, purity by explicit loops.
double brute_force_concurrence(const BipartitePairSpec& s, std::size_t dim = 64) {
  const double eps = s.deformation.eps();
  const Eigen::MatrixXcd m =
      s.mu * oracle::perturbative_state(s.alpha, eps, dim) *
          oracle::perturbative_state(s.beta, eps, dim).transpose() +
      s.nu * oracle::perturbative_state(s.gamma, eps, dim) *
          oracle::perturbative_state(s.delta, eps, dim).transpose();
  return oracle::purity_concurrence(m);
}

BipartitePairSpec example_one(double a, double eps) {
  return {1.0, -1.0, a, -a, -a, -3.0 * a, Deformation(eps)};
}
BipartitePairSpec example_two(double a, double eps) {
  return {1.0, -1.0, a, -a, -kI * a, kI * a, Deformation(eps)};
}
BipartitePairSpec example_three(double a, double eps) {
  return {1.0, -1.0, eps * a, -a, -a, eps * a, Deformation(eps)};
}

TEST(EntanglementOracle, FockOracleMatchesBruteForcePurity) {
  for (double a : {0.3, 1.0, 1.5}) {
    for (double theta : {0.0, kPi / 3.0, kPi}) {
      for (double eps : {0.0, 0.2}) {
        const BipartitePairSpec s = psi2_spec(a, theta, Deformation(eps));
        EXPECT_NEAR(concurrence_fock_oracle(s).c, brute_force_concurrence(s), 1e-10)
            << a << " " << theta << " " << eps;
      }
    }
  }
  const BipartitePairSpec s = example_two(0.9, 0.1);
  EXPECT_NEAR(concurrence_fock_oracle(s).c, brute_force_concurrence(s), 1e-10);
}

TEST(EntanglementOracle, ClosedFormMatchesLongDoubleEvaluation) {
  for (double a : {0.1, 0.5, 1.0, 1.3}) {
    for (double theta : {0.0, 1.0, 2.5}) {
      for (double eps : {-0.4, 0.0, 0.3}) {
        // Values beyond 1 (negative overlap factor) are clamped by contract.
        EXPECT_NEAR(concurrence_symmetric(a, theta, Deformation(eps)).c,
                    std::clamp(oracle::psi2_concurrence(a, theta, eps), 0.0, 1.0), 1e-14);
      }
    }
  }
}

TEST(EntanglementOracle, FrozenValues) {
  EXPECT_NEAR(concurrence_symmetric(1.0, 0.0, Deformation(0.0)).c,
              0.964027580075816883946413724101, 1e-15);
  EXPECT_NEAR(concurrence_symmetric(1.0, 0.0, Deformation(0.4)).c,
              0.945366370479741881253052060238, 1e-15);
  EXPECT_NEAR(concurrence_symmetric(1.0, 0.0, Deformation(-0.4)).c,
              0.983050278031043760318459549922, 1e-15);
}

TEST(EntanglementOracle, UndeformedOracleEqualsClosedForm) {
  const BipartitePairSpec s = psi2_spec(1.0, 0.0, Deformation(0.0));
  EXPECT_NEAR(concurrence_fock_oracle(s).c, 0.964027580075816883946413724101, 1e-8);
  EXPECT_NEAR(concurrence_pair(s).c, 0.964027580075816883946413724101, 1e-8);
}

TEST(ConcurrenceGeneral, ContractExamples) {
  EXPECT_DOUBLE_EQ(concurrence_general(1.0, 1.0, 0.0, 0.0).c, 1.0);
  EXPECT_DOUBLE_EQ(concurrence_general(1.0, 0.0, 0.3, 0.3).c, 0.0);
  const double e2 = std::exp(-2.0);
  EXPECT_NEAR(concurrence_general(1.0, std::polar(1.0, kPi), e2, e2).c, 1.0, 1e-15);
}

TEST(ConcurrenceGeneral, NullAndDegenerateStates) {
  EXPECT_THROW(concurrence_general(1.0, -1.0, 1.0, 1.0 - 1e-16), NullState);
  const ConcurrenceValue v = concurrence_general(1.0, 1.0, 1.0, 0.2);
  EXPECT_EQ(v.c, 0.0);
  EXPECT_EQ(v.note, "degenerate-superposition");
}

TEST(ConcurrencePair, AntisymmetricStateIsRobust) {
  for (double a = 0.1; a <= 2.0 + 1e-12; a += 0.3) {
    for (double eps : {-0.4, -0.1, 0.0, 0.2, 0.4}) {
      EXPECT_NEAR(concurrence_pair(psi2_spec(a, kPi, Deformation(eps))).c, 1.0, 1e-12);
    }
  }
}

TEST(ConcurrencePair, ExampleOneIsMaximal) {
  EXPECT_NEAR(concurrence_pair(example_one(0.8, 0.1)).c, 1.0, 2.0 * 0.01);
  const OrthoBasisData o = ortho_basis(example_one(0.8, 0.1));
  EXPECT_NEAR(std::abs(o.p1), std::abs(o.p2), 1e-15);
}

TEST(ConcurrencePair, ProductState) {
  BipartitePairSpec s = psi2_spec(1.0, 0.0, Deformation(0.1));
  s.nu = 0.0;
  EXPECT_EQ(concurrence_pair(s).c, 0.0);
  EXPECT_LE(concurrence_fock_oracle(s).c, 1e-10);
}

TEST(ConcurrencePair, OracleAgreementIsSecondOrder) {
  for (double a : {0.3, 0.9, 1.5}) {
    for (double theta : {0.0, kPi / 2.0, 3.0 * kPi / 4.0}) {
      for (double eps : {0.1, 0.2}) {
        const BipartitePairSpec s = psi2_spec(a, theta, Deformation(eps));
        EXPECT_LE(std::abs(concurrence_pair(s).c - concurrence_fock_oracle(s).c),
                  std::max(1e-8, 2.0 * eps * eps));
      }
    }
  }
}

TEST(ConcurrencePair, OracleAtAntisymmetricPoint) {
  EXPECT_NEAR(concurrence_fock_oracle(psi2_spec(1.0, kPi, Deformation(0.2))).c, 1.0,
              std::max(1e-8, 2.0 * 0.04));
}

TEST(ConcurrenceSymmetric, AntisymmetricIsExactlyOne) {
  for (double a : {0.0, 0.1, 1.0, 2.0}) {
    for (double eps : {-0.4, 0.0, 0.4}) {
      EXPECT_EQ(concurrence_symmetric(a, kPi, Deformation(eps)).c, 1.0);
    }
  }
}

TEST(ConcurrenceSymmetric, ClampedOutsideSeriesRegion) {
  const ConcurrenceValue v = concurrence_symmetric(1.5, 0.0, Deformation(-0.4));
  EXPECT_LE(v.c, 1.0);
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.note.empty());
}

TEST(ConcurrenceSymmetric, RangeInvariant) {
  for (double a = 0.0; a <= 2.5; a += 0.125) {
    for (double theta = 0.0; theta <= 2.0 * kPi; theta += 0.4) {
      for (double eps = -1.0; eps <= 1.0; eps += 0.25) {
        const double c = concurrence_symmetric(a, theta, Deformation(eps)).c;
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0 + 1e-12);
      }
    }
  }
}

TEST(ConcurrenceSymmetric, MonotoneInAlphaWhereValid) {
  for (double eps : {-0.4, -0.2, 0.0, 0.2, 0.4}) {
    double prev = -1.0;
    for (double a = 0.2; a <= 2.5 + 1e-12; a += 0.01) {
      const ConcurrenceValue v = concurrence_symmetric(a, 0.0, Deformation(eps));
      if (!v.valid) break;
      EXPECT_GE(v.c, prev) << "a=" << a << " eps=" << eps;
      prev = v.c;
    }
  }
}

TEST(ConcurrenceSymmetric, DecreasesWithDeformation) {
  for (double a = 0.5; a <= 1.2 + 1e-12; a += 0.1) {
    double prev = 2.0;
    for (double eps = -0.4; eps <= 0.4 + 1e-12; eps += 0.1) {
      const double c = concurrence_symmetric(a, 0.0, Deformation(eps)).c;
      EXPECT_LT(c, prev);
      prev = c;
    }
  }
}

TEST(ConcurrenceSymmetric, PhaseExtremumAtPi) {
  const double h = 1e-5;
  for (double eps : {-0.4, 0.0, 0.4}) {
    const double up = concurrence_symmetric(1.0, kPi + h, Deformation(eps)).c;
    const double dn = concurrence_symmetric(1.0, kPi - h, Deformation(eps)).c;
    EXPECT_NEAR((up - dn) / (2.0 * h), 0.0, 1e-6);
    EXPECT_LT(up, 1.0);
  }
}

TEST(ConcurrenceGeneralSymmetric, Cases) {
  EXPECT_NEAR(concurrence_general_symmetric(3.0, -3.0, 0.0, Deformation(0.1)).c, 1.0, 1e-12);
  EXPECT_NEAR(concurrence_general_symmetric(0.7, 0.2, kPi, Deformation(0.1)).c, 1.0, 1e-15);
  EXPECT_NEAR(concurrence_general_symmetric(1.0, -1.0, 0.0, Deformation(0.1)).c,
              concurrence_symmetric(1.0, 0.0, Deformation(0.1)).c, 2.0 * 0.01);
}

TEST(MaximalEntanglement, CatalogueStates) {
  for (double eps : {0.05, 0.1, 0.2}) {
    for (const BipartitePairSpec& s : {example_one(0.8, eps), example_two(0.8, eps), example_three(0.8, eps)}) {
      const MaximalEntanglementCheck m = is_maximally_entangled(s, 1e-9);
      EXPECT_TRUE(m.maximal);
      EXPECT_GE(m.concurrence.c, 1.0 - 2.0 * eps * eps);
    }
  }
}

TEST(MaximalEntanglement, Rejections) {
  BipartitePairSpec s = example_one(0.8, 0.1);
  s.nu = 0.0;
  EXPECT_FALSE(is_maximally_entangled(s, 1e-9).maximal);
  EXPECT_FALSE(is_maximally_entangled(psi2_spec(1.0, 0.0, Deformation(0.1)), 1e-9).maximal);
  EXPECT_TRUE(is_maximally_entangled(psi2_spec(1.0, kPi, Deformation(0.1)), 1e-9).maximal);
}

TEST(ValidityMargin, Arithmetic) {
  EXPECT_EQ(validity_margin(1.3, Deformation(0.0)), 0.0);
  EXPECT_NEAR(validity_margin(1.0, Deformation(0.1)), 0.1333333333333333, 1e-15);
  EXPECT_NEAR(validity_margin(1.1, Deformation(0.4)), 0.78085333333333333, 1e-14);
  EXPECT_NEAR(validity_margin(1.0, Deformation(-0.1)), 0.1333333333333333, 1e-15);
  EXPECT_FALSE(is_allowed(validity_margin(1.0, Deformation(0.1))));
  EXPECT_TRUE(is_allowed(validity_margin(1.0, Deformation(0.1)), 0.2));
  EXPECT_TRUE(is_allowed(0.0));
}

}  // namespace
}  // namespace qdeform
