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

// Deformed coherent states |alpha>_d, built either from the first-order
// closed form
//   |alpha>_d = [1 + eps (|alpha|^4/24 - |alpha|^2/6 alpha a^+ + alpha^2/8 a^+2)] |alpha>
// or by exponentiating the deformed displacement operator on the vacuum.

#include <cstddef>

#include "qdeform/deformed_algebra.hpp"
#include "qdeform/fock.hpp"

namespace qdeform {

enum class Method { perturbative, numeric };

/// Which overlap: dd = _d<beta|alpha>_d, dn = <beta|alpha>_d,
/// nd = _d<beta|alpha>, standard = <beta|alpha>.
enum class OverlapKind { dd, dn, nd, standard };

struct DeformedStateSpec {
  Complex alpha;
  Deformation deformation;
  std::size_t dim = kDefaultDim;
  Method method = Method::perturbative;
};

/// Coefficients of the first-order correction polynomial. Only overridden by
/// mutation self-tests.
struct DcsCoefficients {
  double scalar = 1.0 / 24.0;     // |alpha|^4
  double linear = -1.0 / 6.0;     // |alpha|^2 alpha a^+
  double quadratic = 1.0 / 8.0;   // alpha^2 a^+2
};

struct DeformedState {
  FockVector vector;
  TruncationCheck truncation;
  bool regime_violated = false;
};

/// exp(alpha b^+ - conj(alpha) b).
FockOperator deformed_displacement(Complex alpha, const Deformation& d, std::size_t dim);

/// D_d(alpha)|0>; the deformed and undeformed vacua coincide.
DeformedState dcs_numeric(const DeformedStateSpec& spec);

/// First-order closed form applied to the truncated coherent vector. Never
/// renormalized: |v|^2 - 1 is O(eps^2). Requires dim >= 3.
DeformedState dcs_perturbative(const DeformedStateSpec& spec,
                               const DcsCoefficients& coefficients = {});

/// Dispatches on spec.method.
DeformedState make_deformed_state(const DeformedStateSpec& spec);

/// Closed-form overlap: prefactor(kind) * exp[(2 alpha conj(beta) - |alpha|^2 - |beta|^2)/2].
/// dd and standard return exactly 1 when alpha == beta.
Complex overlap_closed_form(Complex alpha, Complex beta, const Deformation& d, OverlapKind kind);

struct NumericOverlap {
  Complex value;
  bool truncated = false;
};

/// Inner product of the perturbative / undeformed vectors selected by `kind`.
NumericOverlap overlap_numeric(Complex alpha, Complex beta, const Deformation& d,
                               OverlapKind kind, std::size_t dim,
                               const DcsCoefficients& coefficients = {});

}  // namespace qdeform
