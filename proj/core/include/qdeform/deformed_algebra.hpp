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

// First-order q-deformed ladder operators b = a + (eps/4) a^+ a^2,
// b^+ = a^+ + (eps/4) a^+2 a, with q = 1 + eps, and residual checks of the
// commutation relations they satisfy up to O(eps^2).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/fock.hpp"

namespace qdeform {

/// |eps| beyond this marks results as outside the weak-deformation regime.
inline constexpr double kWeakRegimeLimit = 0.5;

/// Deformation strength eps; q = 1 + eps.
class Deformation {
 public:
  constexpr Deformation() = default;
  explicit Deformation(double eps);

  double eps() const { return eps_; }
  double q() const { return 1.0 + eps_; }
  bool regime_violated() const;

 private:
  double eps_ = 0.0;
};

FockOperator deformed_annihilator(const Deformation& d, std::size_t dim);
FockOperator deformed_creation(const Deformation& d, std::size_t dim);

/// b^+ b from the representation matrices, diagonal with entries n f(n)^2.
FockOperator deformed_number(const Deformation& d, std::size_t dim);

/// f(n) = 1 + eps (n - 1) / 4, so that b|n> = sqrt(n) f(n) |n-1>.
double deformation_function(const Deformation& d, std::size_t n);

FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// Highest level n for which identities of polynomial degree `margin` are
/// unaffected by truncation: dim - margin, clamped at zero.
std::size_t safe_max_level(std::size_t dim, std::size_t margin);

struct QCommutatorReport {
  double eps = 0.0;
  std::size_t dim = 0;
  /// Levels n <= safe_level are reported in `residual`; the rest are edge rows.
  std::size_t safe_level = 0;
  /// |<n| [b,b^+] - (1 + eps n) |n>| per level.
  std::vector<double> residual;
  /// |<n| [b,b^+] - (1 + eps b^+b) |n>| per level.
  std::vector<double> residual_bdagb;
  /// Max residual (first form) over the excluded truncation-edge rows.
  double edge_residual = 0.0;
  /// Largest off-diagonal entry of [b,b^+] on the safe block (should be 0).
  double offdiag_residual = 0.0;
  bool regime_violated = false;

  double max_residual(std::size_t max_level) const;
  double max_residual_bdagb(std::size_t max_level) const;
};

QCommutatorReport verify_q_commutator(const Deformation& d, std::size_t dim);

struct BchResidual {
  std::string name;
  double max_residual = 0.0;       // max |R_ij| over the block
  double offdiag_residual = 0.0;   // max |R_ij|, i != j
};

/// Residuals of the four nested commutators of X = alpha b^+ - conj(alpha) b
/// and Y = conj(alpha) b against their first-order closed forms:
///   [X,Y]         = -|alpha|^2 (1 + eps b^+b)
///   [X,[X,Y]]     = |alpha|^2 eps (alpha b^+ + conj(alpha) b)
///   [Y,[X,Y]]     = -|alpha|^2 conj(alpha) eps b
///   [Y,[X,[X,Y]]] = |alpha|^4 eps
struct BchReport {
  Complex alpha;
  double eps = 0.0;
  std::size_t max_level = 0;
  std::array<BchResidual, 4> identities;

  double max_residual() const;
};

/// Block defaults to levels n <= dim - 6.
BchReport verify_bch_commutators(Complex alpha, const Deformation& d, std::size_t dim,
                                 std::optional<std::size_t> max_level = std::nullopt);

/// r(eps) / r(eps/2); nullopt when the denominator is below `floor`.
std::optional<double> order_ratio(double residual, double residual_half, double floor = 1e-14);

}  // namespace qdeform
