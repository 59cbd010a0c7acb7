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

#include "qdeform/deformed_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

double block_max(const Eigen::MatrixXcd& r, std::size_t max_level, bool offdiag_only) {
  const auto n = std::min<Eigen::Index>(static_cast<Eigen::Index>(max_level) + 1, r.rows());
  double m = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (offdiag_only && i == j) continue;
      m = std::max(m, std::abs(r(i, j)));
    }
  }
  return m;
}

double prefix_max(const std::vector<double>& v, std::size_t max_level) {
  double m = 0.0;
  for (std::size_t n = 0; n < v.size() && n <= max_level; ++n) m = std::max(m, v[n]);
  return m;
}

}  // namespace

Deformation::Deformation(double eps) : eps_(eps) {
  if (!std::isfinite(eps)) throw InvalidOperand("deformation parameter must be finite");
}

bool Deformation::regime_violated() const { return std::abs(eps_) > kWeakRegimeLimit; }

double deformation_function(const Deformation& d, std::size_t n) {
  return 1.0 + 0.25 * d.eps() * (static_cast<double>(n) - 1.0);
}

FockOperator deformed_annihilator(const Deformation& d, std::size_t dim) {
  if (dim == 0) throw InvalidDimension("Fock dimension must be at least 1");
  const auto size = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  // a|n> = sqrt(n)|n-1> and a^+ a^2 |n> = (n-1) sqrt(n) |n-1>.
  for (Eigen::Index n = 1; n < size; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    m(n - 1, n) = root + 0.25 * d.eps() * (static_cast<double>(n) - 1.0) * root;
  }
  return FockOperator(std::move(m));
}

FockOperator deformed_creation(const Deformation& d, std::size_t dim) {
  return deformed_annihilator(d, dim).adjoint();
}

FockOperator deformed_number(const Deformation& d, std::size_t dim) {
  return deformed_creation(d, dim) * deformed_annihilator(d, dim);
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return a * b - b * a;
}

std::size_t safe_max_level(std::size_t dim, std::size_t margin) {
  return dim > margin ? dim - margin : 0;
}

double QCommutatorReport::max_residual(std::size_t max_level) const {
  return prefix_max(residual, max_level);
}

double QCommutatorReport::max_residual_bdagb(std::size_t max_level) const {
  return prefix_max(residual_bdagb, max_level);
}

QCommutatorReport verify_q_commutator(const Deformation& d, std::size_t dim) {
  if (dim < 4) throw InvalidDimension("verify_q_commutator needs dim >= 4");
  const FockOperator b = deformed_annihilator(d, dim);
  const FockOperator bd = b.adjoint();
  const Eigen::MatrixXcd c = commutator(b, bd).matrix();
  const Eigen::MatrixXcd nd = (bd * b).matrix();

  QCommutatorReport report;
  report.eps = d.eps();
  report.dim = dim;
  report.safe_level = safe_max_level(dim, 3);
  report.regime_violated = d.regime_violated();
  for (std::size_t n = 0; n < dim; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    const double first = std::abs(c(i, i) - (1.0 + d.eps() * static_cast<double>(n)));
    if (n <= report.safe_level) {
      report.residual.push_back(first);
      report.residual_bdagb.push_back(std::abs(c(i, i) - (1.0 + d.eps() * nd(i, i))));
    } else {
      report.edge_residual = std::max(report.edge_residual, first);
    }
  }
  report.offdiag_residual = block_max(c, report.safe_level, true);
  return report;
}

double BchReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : identities) m = std::max(m, r.max_residual);
  return m;
}

BchReport verify_bch_commutators(Complex alpha, const Deformation& d, std::size_t dim,
                                 std::optional<std::size_t> max_level) {
  if (dim < 2) throw InvalidDimension("verify_bch_commutators needs dim >= 2");
  const FockOperator b = deformed_annihilator(d, dim);
  const FockOperator bd = b.adjoint();
  const FockOperator id = FockOperator::identity(dim);
  const Complex ca = std::conj(alpha);
  const double mod2 = std::norm(alpha);
  const double eps = d.eps();

  const FockOperator x = alpha * bd - ca * b;
  const FockOperator y = ca * b;
  const FockOperator xy = commutator(x, y);
  const FockOperator x_xy = commutator(x, xy);
  const FockOperator y_xy = commutator(y, xy);
  const FockOperator y_x_xy = commutator(y, x_xy);

  const std::array<FockOperator, 4> residuals = {
      xy - Complex(-mod2) * (id + Complex(eps) * (bd * b)),
      x_xy - Complex(mod2 * eps) * (alpha * bd + ca * b),
      y_xy - (-mod2 * ca * eps) * b,
      y_x_xy - Complex(mod2 * mod2 * eps) * id,
  };
  static const std::array<const char*, 4> names = {"[X,Y]", "[X,[X,Y]]", "[Y,[X,Y]]",
                                                   "[Y,[X,[X,Y]]]"};

  BchReport report;
  report.alpha = alpha;
  report.eps = eps;
  report.max_level = max_level.value_or(safe_max_level(dim, 6));
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    auto& out = report.identities[k];
    out.name = names[k];
    out.max_residual = block_max(residuals[k].matrix(), report.max_level, false);
    out.offdiag_residual = block_max(residuals[k].matrix(), report.max_level, true);
  }
  return report;
}

std::optional<double> order_ratio(double residual, double residual_half, double floor) {
  if (!(residual_half > floor)) return std::nullopt;
  return residual / residual_half;
}

}  // namespace qdeform
