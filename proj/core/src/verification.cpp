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

#include "qdeform/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "qdeform/entanglement.hpp"
#include "qdeform/error.hpp"
#include "qdeform/version.hpp"

namespace qdeform {
namespace {

struct Family {
  std::string name;
  std::function<double(double eps)> residual;
  std::function<double(double eps)> tolerance;
  bool order_checked = true;
};

std::string eps_label(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", eps);
  return buf;
}

std::optional<std::size_t> half_index(const std::vector<double>& grid, std::size_t i) {
  const double target = 0.5 * grid[i];
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (j != i && std::abs(grid[j] - target) <= 1e-12 * std::abs(grid[i])) return j;
  }
  return std::nullopt;
}

double diagonal_block_max(const Eigen::MatrixXcd& m, std::size_t block,
                          const std::function<double(double n)>& expected) {
  double r = 0.0;
  for (std::size_t n = 0; n <= block && n < static_cast<std::size_t>(m.rows()); ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    r = std::max(r, std::abs(m(i, i) - expected(static_cast<double>(n))));
  }
  return r;
}

std::vector<Complex> overlap_labels() { return {1.0, -1.0, {0.0, 1.0}, {0.0, -1.0}, 0.5}; }

std::vector<BipartitePairSpec> concurrence_grid(double eps) {
  std::vector<BipartitePairSpec> specs;
  for (double a : {0.3, 0.6, 0.9, 1.2, 1.5}) {
    for (int k = 0; k <= 4; ++k) {
      specs.push_back(psi2_spec(a, 0.25 * std::numbers::pi * k, Deformation(eps)));
    }
  }
  return specs;
}

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport run_verification_suite(std::size_t dim, const std::vector<double>& eps_grid,
                                          const ToleranceProfile& profile) {
  if (dim < 32) throw InvalidDimension("verification suite needs dim >= 32");
  if (eps_grid.empty()) throw InvalidSpec("verification eps grid must not be empty");

  const Complex alpha = profile.alpha;
  const double mod2 = std::norm(alpha);
  auto sq = [](double e) { return e * e; };

  std::vector<Family> families;
  families.push_back({"q_commutator",
                      [&](double e) {
                        return verify_q_commutator(Deformation(e), dim)
                            .max_residual(profile.low_block);
                      },
                      [&](double e) { return profile.q_commutator_c * sq(e); }});
  families.push_back({"deformed_number",
                      [&](double e) {
                        return diagonal_block_max(
                            deformed_number(Deformation(e), dim).matrix(), profile.low_block,
                            [e](double n) { return n + 0.5 * e * n * (n - 1.0); });
                      },
                      [&](double e) { return profile.number_operator_c * sq(e); }});
  families.push_back({"vacuum_annihilation",
                      [&](double e) {
                        return (deformed_annihilator(Deformation(e), dim) *
                                FockVector::basis(dim, 0))
                            .norm();
                      },
                      [&](double) { return profile.exact; }, false});

  for (std::size_t k = 0; k < 4; ++k) {
    static const std::array<const char*, 4> names = {"bch_xy", "bch_x_xy", "bch_y_xy",
                                                     "bch_y_x_xy"};
    families.push_back({names[k],
                        [&, k](double e) {
                          return verify_bch_commutators(alpha, Deformation(e), dim,
                                                        profile.bch_block)
                              .identities[k]
                              .max_residual;
                        },
                        [&](double e) {
                          return profile.bch_c * sq(e) * std::max(1.0, mod2 * mod2);
                        }});
  }

  families.push_back({"displacement_unitarity",
                      [&](double e) {
                        const Eigen::MatrixXcd u =
                            deformed_displacement(alpha, Deformation(e), dim).matrix();
                        return (u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
                            .cwiseAbs()
                            .maxCoeff();
                      },
                      [&](double) { return profile.unitarity; }, false});

  families.push_back({"normalization",
                      [&](double e) {
                        const DeformedState s = dcs_perturbative(
                            {alpha, Deformation(e), dim, Method::perturbative},
                            profile.coefficients);
                        return std::abs(s.vector.squared_norm() - 1.0);
                      },
                      [&](double e) {
                        return profile.normalization_c * std::pow(mod2, 4) * sq(e);
                      }});

  families.push_back({"method_agreement",
                      [&](double e) {
                        const DeformedStateSpec spec{alpha, Deformation(e), dim, Method::numeric};
                        const DeformedState num = dcs_numeric(spec);
                        const DeformedState pert = dcs_perturbative(spec, profile.coefficients);
                        return (num.vector.amplitudes() - pert.vector.amplitudes()).norm();
                      },
                      [&](double e) { return profile.method_agreement_c * sq(e); }});

  for (auto [kind, name] : {std::pair{OverlapKind::dd, "overlap_dd"},
                            std::pair{OverlapKind::dn, "overlap_dn"},
                            std::pair{OverlapKind::nd, "overlap_nd"}}) {
    families.push_back({name,
                        [&, kind](double e) {
                          const Deformation d(e);
                          double r = 0.0;
                          for (Complex a : overlap_labels()) {
                            for (Complex b : overlap_labels()) {
                              const Complex closed = overlap_closed_form(a, b, d, kind);
                              const Complex num =
                                  overlap_numeric(a, b, d, kind, dim, profile.coefficients).value;
                              r = std::max(r, std::abs(closed - num));
                            }
                          }
                          return r;
                        },
                        [&](double e) { return profile.overlap_c * sq(e); }});
  }

  families.push_back({"concurrence_oracle",
                      [&](double e) {
                        double r = 0.0;
                        for (const auto& spec : concurrence_grid(e)) {
                          r = std::max(r, std::abs(concurrence_pair(spec).c -
                                                   concurrence_fock_oracle(spec, dim).c));
                        }
                        return r;
                      },
                      [&](double e) { return std::max(1e-8, profile.concurrence_c * sq(e)); }});

  VerificationReport report;
  report.version = kVersion;
  report.dim = dim;
  report.eps_grid = eps_grid;

  for (const auto& f : families) {
    std::vector<double> r(eps_grid.size());
    for (std::size_t i = 0; i < eps_grid.size(); ++i) r[i] = f.residual(eps_grid[i]);
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
      const double e = eps_grid[i];
      CheckRecord rec;
      rec.name = f.name + "/eps=" + eps_label(e);
      rec.residual = r[i];
      rec.tolerance = e == 0.0 ? profile.exact : f.tolerance(e);
      rec.pass = rec.residual <= rec.tolerance;
      if (f.order_checked && e != 0.0) {
        if (auto j = half_index(eps_grid, i)) {
          rec.order_ratio = order_ratio(r[i], r[*j], profile.ratio_floor);
          if (rec.order_ratio) {
            rec.pass = rec.pass && *rec.order_ratio >= profile.order_ratio_lo &&
                       *rec.order_ratio <= profile.order_ratio_hi;
          }
        }
      }
      report.checks.push_back(std::move(rec));
    }
  }

  // Reported, not gated.
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double e = eps_grid[i];
    if (e == 0.0) continue;
    const QCommutatorReport q = verify_q_commutator(Deformation(e), dim);
    const double printed =
        diagonal_block_max(deformed_number(Deformation(e), dim).matrix(), profile.low_block,
                           [e](double n) { return n + e * (n + 0.5 * n * n); });
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "eps=%g: [b,b+] - (1 + eps b+b) max residual n<=%zu is %.6e "
                  "(against 1 + eps n: %.6e)",
                  e, profile.low_block, q.max_residual_bdagb(profile.low_block),
                  q.max_residual(profile.low_block));
    report.notes.emplace_back(buf);
    std::snprintf(buf, sizeof buf,
                  "eps=%g: b+b differs from the expansion n + eps(n + n^2/2) by %.6e on n<=%zu "
                  "(first order; b+b = n + (eps/2)(n^2 - n) + O(eps^2))",
                  e, printed, profile.low_block);
    report.notes.emplace_back(buf);
  }
  return report;
}

}  // namespace qdeform
