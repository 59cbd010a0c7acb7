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

// Bipartite concurrence of superpositions
//   mu |alpha>_d (x) |beta>_d + nu |gamma>_d (x) |delta>_d
// from deformed overlaps, plus an independent Fock-space oracle.

#include <cstddef>
#include <string>

#include "qdeform/coherent_states.hpp"

namespace qdeform {

/// Default cutoff for the "allowed" perturbative region, margin < threshold.
inline constexpr double kDefaultMarginThreshold = 0.1;

struct BipartitePairSpec {
  Complex mu{1.0, 0.0};
  Complex nu{1.0, 0.0};
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;
  Deformation deformation;
};

/// |alpha>_d|-alpha>_d + e^{i theta} |-alpha>_d|alpha>_d.
BipartitePairSpec psi2_spec(Complex alpha, double theta, const Deformation& d);
/// |alpha>_d|beta>_d + e^{i theta} |beta>_d|alpha>_d.
BipartitePairSpec psi1_spec(Complex alpha, Complex beta, double theta, const Deformation& d);

/// p1 = _d<alpha|gamma>_d, p2 = _d<beta|delta>_d and the normalizers
/// sqrt(1 - |p|) of the orthogonalized basis (kept as written; the
/// concurrence uses sqrt(1 - |p|^2)).
struct OrthoBasisData {
  Complex p1;
  Complex p2;
  double n1 = 0.0;
  double n2 = 0.0;
};

OrthoBasisData ortho_basis(const BipartitePairSpec& spec);

struct ConcurrenceValue {
  double c = 0.0;
  /// margin < 1, i.e. the first-order series can be trusted.
  bool valid = true;
  double margin = 0.0;
  bool truncated = false;
  std::string note;
};

/// 2|mu||nu| sqrt(1-|p1|^2) sqrt(1-|p2|^2) /
///   (|mu|^2 + |nu|^2 + mu nu* p1* p2 + mu* nu p1 p2*).
/// Throws NullState when the denominator is <= 1e-14.
ConcurrenceValue concurrence_general(Complex mu, Complex nu, Complex p1, Complex p2);

ConcurrenceValue concurrence_pair(const BipartitePairSpec& spec);

/// Closed form for psi2:
///   [1 - (1 + 4/3 |alpha|^4 eps) e^{-4|alpha|^2}] / [1 + cos(theta) (...) e^{-4|alpha|^2}]
/// clamped to [0, 1]; exactly 1 when cos(theta) == -1.
ConcurrenceValue concurrence_symmetric(double alpha_abs, double theta, const Deformation& d);

/// (1 - |_d<alpha|beta>_d|^2) / (1 + cos(theta) |_d<alpha|beta>_d|^2) for psi1.
ConcurrenceValue concurrence_general_symmetric(Complex alpha, Complex beta, double theta,
                                               const Deformation& d);

/// sqrt(2 (1 - Tr rho_1^2)) of the normalized two-mode state built from
/// perturbative vectors. Throws NullState on a vanishing superposition.
ConcurrenceValue concurrence_fock_oracle(const BipartitePairSpec& spec,
                                         std::size_t dim = kDefaultDim);

struct MaximalEntanglementCheck {
  bool maximal = false;
  double amplitude_residual = 0.0;  // ||mu| - |nu||
  double modulus_residual = 0.0;    // ||p1| - |p2||
  double phase_residual = 0.0;      // |e^{i theta} p1* p2 + |p1||p2||
  double theta = 0.0;               // arg(mu / nu)
  ConcurrenceValue concurrence;
};

/// mu = nu e^{i theta} together with the overlap-phase condition read
/// modulo 2 pi i: e^{i theta} p1* p2 = -|p1||p2| and |p1| = |p2|.
MaximalEntanglementCheck is_maximally_entangled(const BipartitePairSpec& spec, double tol);

/// (4/3) |alpha|^4 |eps|.
double validity_margin(double alpha_abs, const Deformation& d);
bool is_allowed(double margin, double threshold = kDefaultMarginThreshold);

}  // namespace qdeform
