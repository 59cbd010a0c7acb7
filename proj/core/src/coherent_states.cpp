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

#include "qdeform/coherent_states.hpp"

#include <cmath>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

FockVector raise(const FockVector& v) {
  const auto n = static_cast<Eigen::Index>(v.dim());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index k = 1; k < n; ++k) out(k) = std::sqrt(static_cast<double>(k)) * v.amplitudes()(k - 1);
  return FockVector(std::move(out));
}

// conj(beta) * alpha spelled out so that swapping the arguments conjugates
// the result bit for bit.
Complex conj_times(Complex beta, Complex alpha) {
  return {beta.real() * alpha.real() + beta.imag() * alpha.imag(),
          beta.real() * alpha.imag() - beta.imag() * alpha.real()};
}

FockVector state_for(Complex alpha, const Deformation& d, bool deformed, std::size_t dim,
                     const DcsCoefficients& coefficients, bool& truncated) {
  if (deformed) {
    DeformedState s = dcs_perturbative({alpha, d, dim, Method::perturbative}, coefficients);
    truncated = truncated || s.truncation.flagged;
    return std::move(s.vector);
  }
  FockVector v = coherent_state(alpha, dim);
  truncated = truncated || check_truncation(v).flagged;
  return v;
}

}  // namespace

FockOperator deformed_displacement(Complex alpha, const Deformation& d, std::size_t dim) {
  const FockOperator b = deformed_annihilator(d, dim);
  const FockOperator generator = alpha * b.adjoint() - std::conj(alpha) * b;
  return matrix_exponential(generator);
}

DeformedState dcs_numeric(const DeformedStateSpec& spec) {
  const FockOperator disp = deformed_displacement(spec.alpha, spec.deformation, spec.dim);
  FockVector v(Eigen::VectorXcd(disp.matrix().col(0)));
  const TruncationCheck tc = check_truncation(v);
  return {std::move(v), tc, spec.deformation.regime_violated()};
}

DeformedState dcs_perturbative(const DeformedStateSpec& spec, const DcsCoefficients& coefficients) {
  if (spec.dim < 3) throw InvalidDimension("dcs_perturbative needs dim >= 3");
  const Complex alpha = spec.alpha;
  const double eps = spec.deformation.eps();
  const double mod2 = std::norm(alpha);

  const FockVector base = coherent_state(alpha, spec.dim);
  const FockVector once = raise(base);
  const FockVector twice = raise(once);

  Eigen::VectorXcd amp = (1.0 + eps * coefficients.scalar * mod2 * mod2) * base.amplitudes() +
                         (eps * coefficients.linear * mod2 * alpha) * once.amplitudes() +
                         (eps * coefficients.quadratic * alpha * alpha) * twice.amplitudes();
  FockVector v(std::move(amp));
  const TruncationCheck tc = check_truncation(v);
  return {std::move(v), tc, spec.deformation.regime_violated()};
}

DeformedState make_deformed_state(const DeformedStateSpec& spec) {
  return spec.method == Method::numeric ? dcs_numeric(spec) : dcs_perturbative(spec);
}

Complex overlap_closed_form(Complex alpha, Complex beta, const Deformation& d, OverlapKind kind) {
  if (alpha == beta && (kind == OverlapKind::dd || kind == OverlapKind::standard)) {
    return 1.0;
  }
  const double a2 = std::norm(alpha);
  const double b2 = std::norm(beta);
  const Complex z = conj_times(beta, alpha);
  const Complex z2{z.real() * z.real() - z.imag() * z.imag(), 2.0 * z.real() * z.imag()};
  const Complex gaussian = std::polar(std::exp(z.real() - 0.5 * (a2 + b2)), z.imag());

  Complex correction;
  switch (kind) {
    case OverlapKind::standard:
      return gaussian;
    case OverlapKind::dd:
      correction = (a2 * a2 + b2 * b2) / 24.0 - ((a2 + b2) / 6.0) * z + 0.25 * z2;
      break;
    case OverlapKind::dn:
      correction = a2 * a2 / 24.0 - (a2 / 6.0) * z + 0.125 * z2;
      break;
    case OverlapKind::nd:
      correction = b2 * b2 / 24.0 - (b2 / 6.0) * z + 0.125 * z2;
      break;
  }
  return (1.0 + d.eps() * correction) * gaussian;
}

NumericOverlap overlap_numeric(Complex alpha, Complex beta, const Deformation& d,
                               OverlapKind kind, std::size_t dim,
                               const DcsCoefficients& coefficients) {
  const bool bra_deformed = kind == OverlapKind::dd || kind == OverlapKind::nd;
  const bool ket_deformed = kind == OverlapKind::dd || kind == OverlapKind::dn;
  NumericOverlap out;
  const FockVector bra = state_for(beta, d, bra_deformed, dim, coefficients, out.truncated);
  const FockVector ket = state_for(alpha, d, ket_deformed, dim, coefficients, out.truncated);
  out.value = inner_product(bra, ket);
  return out;
}

}  // namespace qdeform
