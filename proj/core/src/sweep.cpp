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

#include "qdeform/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <thread>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

void validate_range(const GridRange& r, const char* name) {
  if (r.steps < 2) throw InvalidSpec(std::string(name) + ": steps must be >= 2");
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max)) {
    throw InvalidSpec(std::string(name) + ": range must be finite with min < max");
  }
}

std::size_t worker_count(std::size_t requested, std::size_t work) {
  std::size_t n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(work, 1));
}

// Each row is written at its own index, so the table is independent of the
// number of workers and of scheduling.
SweepTable evaluate(std::size_t rows, std::size_t threads,
                    const std::function<SweepRow(std::size_t)>& row_at) {
  SweepTable table(rows);
  const std::size_t workers = worker_count(threads, rows);
  if (workers == 1) {
    for (std::size_t i = 0; i < rows; ++i) table[i] = row_at(i);
    return table;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows; i += workers) table[i] = row_at(i);
    });
  }
  pool.clear();
  return table;
}

SweepRow row_for(double alpha_abs, double theta, double eps, double threshold) {
  const Deformation d(eps);
  const ConcurrenceValue c = concurrence_symmetric(alpha_abs, theta, d);
  SweepRow row;
  row.alpha_abs = alpha_abs;
  row.theta = theta;
  row.eps = eps;
  row.concurrence = c.c;
  row.margin = c.margin;
  row.allowed = is_allowed(c.margin, threshold);
  row.regime_violated = d.regime_violated();
  return row;
}

void require_kind(const SweepSpec& spec, SweepKind kind) {
  if (spec.kind != kind) throw InvalidSpec("sweep kind does not match the requested sweep");
  spec.validate();
}

}  // namespace

double GridRange::at(std::size_t i) const {
  if (i + 1 == steps) return max;
  return min + (max - min) * (static_cast<double>(i) / static_cast<double>(steps - 1));
}

std::vector<double> GridRange::values() const {
  std::vector<double> v(steps);
  for (std::size_t i = 0; i < steps; ++i) v[i] = at(i);
  return v;
}

void SweepSpec::validate() const {
  switch (kind) {
    case SweepKind::alpha_sweep:
      validate_range(alpha_range, "alpha_range");
      break;
    case SweepKind::theta_sweep:
      validate_range(theta_range, "theta_range");
      break;
    case SweepKind::region_scan:
      validate_range(alpha_range, "alpha_range");
      validate_range(eps_range, "eps_range");
      break;
  }
  if (kind != SweepKind::region_scan && eps_list.empty()) {
    throw InvalidSpec("eps_list must not be empty");
  }
  for (double e : eps_list) {
    if (!std::isfinite(e)) throw InvalidSpec("eps_list entries must be finite");
  }
  if (!std::isfinite(threshold) || threshold <= 0.0) {
    throw InvalidSpec("threshold must be positive");
  }
  if (!std::isfinite(theta_fixed) || !std::isfinite(alpha_fixed) || alpha_fixed < 0.0) {
    throw InvalidSpec("fixed theta / alpha must be finite, alpha >= 0");
  }
  if (alpha_range.min < 0.0) throw InvalidSpec("alpha_range must be non-negative");
}

SweepSpec default_alpha_sweep() { return {}; }

SweepSpec default_alpha_zoom_sweep() {
  SweepSpec s;
  s.alpha_range = {0.9, 1.1, 41};
  return s;
}

SweepSpec default_theta_sweep() {
  SweepSpec s;
  s.kind = SweepKind::theta_sweep;
  s.theta_range = {0.0, 2.0 * std::numbers::pi, 201};
  s.alpha_fixed = 1.0;
  return s;
}

SweepSpec default_region_scan() {
  SweepSpec s;
  s.kind = SweepKind::region_scan;
  s.alpha_range = {0.0, 2.0, 201};
  s.eps_range = {-1.0, 1.0, 201};
  return s;
}

SweepTable run_alpha_sweep(const SweepSpec& spec) {
  require_kind(spec, SweepKind::alpha_sweep);
  const std::size_t ne = spec.eps_list.size();
  return evaluate(spec.alpha_range.steps * ne, spec.threads, [&](std::size_t i) {
    return row_for(spec.alpha_range.at(i / ne), spec.theta_fixed, spec.eps_list[i % ne],
                   spec.threshold);
  });
}

SweepTable run_theta_sweep(const SweepSpec& spec) {
  require_kind(spec, SweepKind::theta_sweep);
  const std::size_t ne = spec.eps_list.size();
  return evaluate(spec.theta_range.steps * ne, spec.threads, [&](std::size_t i) {
    return row_for(spec.alpha_fixed, spec.theta_range.at(i / ne), spec.eps_list[i % ne],
                   spec.threshold);
  });
}

SweepTable run_region_scan(const SweepSpec& spec) {
  require_kind(spec, SweepKind::region_scan);
  const std::size_t ne = spec.eps_range.steps;
  return evaluate(spec.alpha_range.steps * ne, spec.threads, [&](std::size_t i) {
    return row_for(spec.alpha_range.at(i / ne), spec.theta_fixed, spec.eps_range.at(i % ne),
                   spec.threshold);
  });
}

SweepTable run_sweep(const SweepSpec& spec) {
  switch (spec.kind) {
    case SweepKind::alpha_sweep:
      return run_alpha_sweep(spec);
    case SweepKind::theta_sweep:
      return run_theta_sweep(spec);
    case SweepKind::region_scan:
      return run_region_scan(spec);
  }
  throw InvalidSpec("unknown sweep kind");
}

double percent_decrease(double alpha_abs, double theta, double eps_lo, double eps_hi) {
  if (!(eps_lo < eps_hi)) throw InvalidSpec("percent_decrease needs eps_lo < eps_hi");
  const double lo = concurrence_symmetric(alpha_abs, theta, Deformation(eps_lo)).c;
  const double hi = concurrence_symmetric(alpha_abs, theta, Deformation(eps_hi)).c;
  if (lo == 0.0) throw InvalidSpec("percent_decrease undefined for zero concurrence");
  return 100.0 * (lo - hi) / lo;
}

std::string format_double(double x) {
  // printf ignores the global C++ locale; the C locale is never changed here.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string to_csv(const SweepTable& table) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const auto& r : table) {
    out += format_double(r.alpha_abs);
    out += ',';
    out += format_double(r.theta);
    out += ',';
    out += format_double(r.eps);
    out += ',';
    out += format_double(r.concurrence);
    out += ',';
    out += format_double(r.margin);
    out += ',';
    out += r.allowed ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace qdeform
