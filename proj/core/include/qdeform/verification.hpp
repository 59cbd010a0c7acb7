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

#pragma once

// End-to-end residual checks of the deformed algebra, the deformed coherent
// states and the concurrence formulas over a grid of eps values.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/coherent_states.hpp"

namespace qdeform {

/// Bounds used by run_verification_suite. Constants C multiply the stated
/// eps scaling; they were measured at dim = 64 and carry some headroom.
struct ToleranceProfile {
  double order_ratio_lo = 3.5;
  double order_ratio_hi = 4.5;
  /// Every residual at eps = 0 must stay below this.
  double exact = 1e-10;
  /// Ratios are not formed when the halved-eps residual is below this.
  double ratio_floor = 1e-13;

  Complex alpha{1.0, 0.0};
  /// Levels n <= low_block for the commutator and number-operator checks.
  std::size_t low_block = 8;
  /// BCH residuals carry eps^3 n terms; n <= 3 keeps the eps = 0.2 ratio in range.
  std::size_t bch_block = 3;

  double q_commutator_c = 12.0;       // exact remainder eps^2 n(3n-1)/16
  double number_operator_c = 25.0;    // exact remainder eps^2 n(n-1)^2/16
  double bch_c = 8.0;                 // x max(1, |alpha|^4)
  double normalization_c = 2.0;       // x |alpha|^8
  double method_agreement_c = 0.25;
  double overlap_c = 0.05;            // dd remainder is exactly eps^2 <P_beta^+ P_alpha>
  double concurrence_c = 2.0;         // max(1e-8, C eps^2)
  double unitarity = 1e-11;

  DcsCoefficients coefficients;
};

struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> order_ratio;
  bool pass = false;
};

struct VerificationReport {
  std::string version;
  std::size_t dim = 0;
  std::vector<double> eps_grid;
  std::vector<CheckRecord> checks;
  /// Documented discrepancies that are reported but not pass/fail.
  std::vector<std::string> notes;

  bool pass() const;
  const CheckRecord* find(const std::string& name) const;
};

/// Record names are "<family>/eps=<value>". Requires dim >= 32.
VerificationReport run_verification_suite(std::size_t dim, const std::vector<double>& eps_grid,
                                          const ToleranceProfile& profile = {});

}  // namespace qdeform
