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

// Figure-data sweeps over the closed-form psi2 concurrence and the
// perturbative validity margin.

#include <cstddef>
#include <string>
#include <vector>

#include "qdeform/entanglement.hpp"

namespace qdeform {

enum class SweepKind { alpha_sweep, theta_sweep, region_scan };

struct GridRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;

  /// min + (max - min) * (i / (steps - 1)); the endpoints are hit exactly.
  double at(std::size_t i) const;
  std::vector<double> values() const;
};

struct SweepSpec {
  SweepKind kind = SweepKind::alpha_sweep;
  GridRange alpha_range{0.0, 2.5, 51};
  GridRange theta_range;
  /// eps values; region scans use eps_range instead.
  std::vector<double> eps_list{-0.4, -0.2, 0.0, 0.2, 0.4};
  GridRange eps_range{-1.0, 1.0, 201};
  double theta_fixed = 0.0;
  double alpha_fixed = 1.0;
  std::size_t dim = kDefaultDim;
  double threshold = kDefaultMarginThreshold;
  /// Worker threads for grid evaluation; 0 picks hardware concurrency.
  std::size_t threads = 1;

  /// Throws InvalidSpec on steps < 2, unordered ranges or an empty eps list.
  void validate() const;
};

/// Declared defaults for the figure grids.
SweepSpec default_alpha_sweep();       // |alpha| in [0, 2.5] step 0.05, theta = 0
SweepSpec default_alpha_zoom_sweep();  // |alpha| in [0.9, 1.1] step 0.005
SweepSpec default_theta_sweep();       // theta in [0, 2 pi] step pi/100, |alpha| = 1
SweepSpec default_region_scan();       // |alpha| in [0, 2] x eps in [-1, 1], 201 x 201

struct SweepRow {
  double alpha_abs = 0.0;
  double theta = 0.0;
  double eps = 0.0;
  double concurrence = 0.0;
  double margin = 0.0;
  bool allowed = false;
  /// |eps| > kWeakRegimeLimit.
  bool regime_violated = false;
};

using SweepTable = std::vector<SweepRow>;

/// |alpha| outer, eps inner.
SweepTable run_alpha_sweep(const SweepSpec& spec);
/// theta outer, eps inner, at spec.alpha_fixed.
SweepTable run_theta_sweep(const SweepSpec& spec);
/// |alpha| outer, eps (from eps_range) inner, at spec.theta_fixed.
SweepTable run_region_scan(const SweepSpec& spec);
SweepTable run_sweep(const SweepSpec& spec);

/// 100 (C(eps_lo) - C(eps_hi)) / C(eps_lo) from the psi2 closed form.
double percent_decrease(double alpha_abs, double theta, double eps_lo, double eps_hi);

/// "%.16e" (17 significant digits) in the C locale.
std::string format_double(double x);

inline constexpr const char* kSweepCsvHeader = "alpha_abs,theta,eps,concurrence,margin,allowed";
std::string to_csv(const SweepTable& table);

}  // namespace qdeform
