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

#include "qdeform/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

constexpr double kNullDenominator = 1e-14;
constexpr double kDegenerateOverlap = 1e-12;
constexpr double kConjugateMismatch = 1e-12;

double pair_margin(const BipartitePairSpec& s) {
  const double m = std::max({std::abs(s.alpha), std::abs(s.beta), std::abs(s.gamma),
                             std::abs(s.delta)});
  return validity_margin(m, s.deformation);
}

void attach_margin(ConcurrenceValue& v, double margin) {
  v.margin = margin;
  v.valid = margin < 1.0;
}

}  // namespace

BipartitePairSpec psi2_spec(Complex alpha, double theta, const Deformation& d) {
  return {1.0, std::polar(1.0, theta), alpha, -alpha, -alpha, alpha, d};
}

BipartitePairSpec psi1_spec(Complex alpha, Complex beta, double theta, const Deformation& d) {
  return {1.0, std::polar(1.0, theta), alpha, beta, beta, alpha, d};
}

OrthoBasisData ortho_basis(const BipartitePairSpec& spec) {
  OrthoBasisData o;
  o.p1 = overlap_closed_form(spec.gamma, spec.alpha, spec.deformation, OverlapKind::dd);
  o.p2 = overlap_closed_form(spec.delta, spec.beta, spec.deformation, OverlapKind::dd);
  o.n1 = std::sqrt(std::max(0.0, 1.0 - std::abs(o.p1)));
  o.n2 = std::sqrt(std::max(0.0, 1.0 - std::abs(o.p2)));
  return o;
}

ConcurrenceValue concurrence_general(Complex mu, Complex nu, Complex p1, Complex p2) {
  const Complex cross = mu * std::conj(nu) * std::conj(p1) * p2;
  const Complex cross_conj = std::conj(mu) * nu * p1 * std::conj(p2);
  const Complex denominator = std::norm(mu) + std::norm(nu) + cross + cross_conj;
  if (std::abs(denominator.imag()) > kConjugateMismatch * std::max(1.0, std::abs(denominator))) {
    throw InvalidOperand("concurrence denominator is not real");
  }
  if (denominator.real() <= kNullDenominator) {
    throw NullState("superposition has vanishing norm");
  }

  ConcurrenceValue out;
  const double m1 = std::abs(p1);
  const double m2 = std::abs(p2);
  if (m1 >= 1.0 - kDegenerateOverlap || m2 >= 1.0 - kDegenerateOverlap) {
    out.c = 0.0;
    out.note = "degenerate-superposition";
    return out;
  }
  const double numerator = 2.0 * std::abs(mu) * std::abs(nu) * std::sqrt(1.0 - m1 * m1) *
                           std::sqrt(1.0 - m2 * m2);
  out.c = std::clamp(numerator / denominator.real(), 0.0, 1.0);
  return out;
}

ConcurrenceValue concurrence_pair(const BipartitePairSpec& spec) {
  const OrthoBasisData o = ortho_basis(spec);
  ConcurrenceValue v = concurrence_general(spec.mu, spec.nu, o.p1, o.p2);
  attach_margin(v, pair_margin(spec));
  return v;
}

ConcurrenceValue concurrence_symmetric(double alpha_abs, double theta, const Deformation& d) {
  ConcurrenceValue v;
  attach_margin(v, validity_margin(alpha_abs, d));
  const double c = std::cos(theta);
  if (c == -1.0) {
    v.c = 1.0;
    return v;
  }
  const double a2 = alpha_abs * alpha_abs;
  const double k = (1.0 + (4.0 / 3.0) * a2 * a2 * d.eps()) * std::exp(-4.0 * a2);
  const double raw = (1.0 - k) / (1.0 + c * k);
  if (raw > 1.0 + 1e-12) v.note = "clamped: overlap factor negative";
  v.c = std::clamp(raw, 0.0, 1.0);
  return v;
}

ConcurrenceValue concurrence_general_symmetric(Complex alpha, Complex beta, double theta,
                                               const Deformation& d) {
  ConcurrenceValue v;
  attach_margin(v, validity_margin(std::max(std::abs(alpha), std::abs(beta)), d));
  const double s = std::norm(overlap_closed_form(beta, alpha, d, OverlapKind::dd));
  const double c = std::cos(theta);
  const double denominator = 1.0 + c * s;
  if (denominator <= kNullDenominator) throw NullState("superposition has vanishing norm");
  if (c == -1.0) {
    v.c = 1.0;
    return v;
  }
  v.c = std::clamp((1.0 - s) / denominator, 0.0, 1.0);
  return v;
}

ConcurrenceValue concurrence_fock_oracle(const BipartitePairSpec& spec, std::size_t dim) {
  ConcurrenceValue v;
  attach_margin(v, pair_margin(spec));

  auto state = [&](Complex z) {
    DeformedState s = dcs_perturbative({z, spec.deformation, dim, Method::perturbative});
    v.truncated = v.truncated || s.truncation.flagged;
    return std::move(s.vector);
  };
  const TwoModeVector psi = spec.mu * tensor_product(state(spec.alpha), state(spec.beta)) +
                            spec.nu * tensor_product(state(spec.gamma), state(spec.delta));
  const double nrm = psi.norm();
  if (nrm <= kNullDenominator) throw NullState("superposition has vanishing norm");

  // Schmidt weights s_i^2 are the eigenvalues of rho_1; with sum s_i^2 = 1,
  // 1 - Tr rho_1^2 = (sum s_i^2)^2 - sum s_i^4, accumulated without cancellation.
  const Eigen::MatrixXcd m = psi.as_matrix() / nrm;
  const Eigen::VectorXd s = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  double mixed = 0.0;
  double prefix = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double w = s(i) * s(i);
    mixed += w * prefix;
    prefix += w;
  }
  const double one_minus_purity = 2.0 * mixed / (prefix * prefix);
  v.c = std::sqrt(2.0 * one_minus_purity);
  if (v.truncated) v.note = "truncation tail above tolerance";
  return v;
}

MaximalEntanglementCheck is_maximally_entangled(const BipartitePairSpec& spec, double tol) {
  MaximalEntanglementCheck out;
  if (spec.mu == Complex(0.0) || spec.nu == Complex(0.0)) return out;

  const Complex ratio = spec.mu / spec.nu;
  out.theta = std::arg(ratio);
  const Complex phase = ratio / std::abs(ratio);
  const OrthoBasisData o = ortho_basis(spec);
  const double m1 = std::abs(o.p1);
  const double m2 = std::abs(o.p2);
  out.amplitude_residual = std::abs(std::abs(spec.mu) - std::abs(spec.nu));
  out.modulus_residual = std::abs(m1 - m2);
  out.phase_residual = std::abs(phase * std::conj(o.p1) * o.p2 + m1 * m2);
  try {
    out.concurrence = concurrence_pair(spec);
  } catch (const NullState&) {
    return out;
  }
  out.maximal = out.amplitude_residual <= tol && out.modulus_residual <= tol &&
                out.phase_residual <= tol;
  return out;
}

double validity_margin(double alpha_abs, const Deformation& d) {
  const double a2 = alpha_abs * alpha_abs;
  return (4.0 / 3.0) * a2 * a2 * std::abs(d.eps());
}

bool is_allowed(double margin, double threshold) { return margin < threshold; }

}  // namespace qdeform
