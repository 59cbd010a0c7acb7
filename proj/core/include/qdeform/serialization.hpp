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

// Wire formats: state records, verification reports, pair-spec files, and
// the textual enum / complex-number forms used on the command line.

#include <string>
#include <string_view>
#include <vector>

#include "qdeform/coherent_states.hpp"
#include "qdeform/entanglement.hpp"
#include "qdeform/sweep.hpp"
#include "qdeform/verification.hpp"

namespace qdeform {

std::string to_string(Method m);
std::string to_string(OverlapKind k);
std::string to_string(SweepKind k);
Method parse_method(std::string_view s);
/// Accepts dd, dn, nd, std and standard.
OverlapKind parse_overlap_kind(std::string_view s);
SweepKind parse_sweep_kind(std::string_view s);

/// "1.5", "-0.5i", "1+0.5i", "1-2j", "(1,0.5)" or "1,0.5".
Complex parse_complex(std::string_view s);

/// {alpha_re, alpha_im, eps, dim, method, amp: [[re, im], ...]}
struct StateRecord {
  Complex alpha;
  double eps = 0.0;
  std::size_t dim = 0;
  Method method = Method::perturbative;
  Eigen::VectorXcd amp;
};

StateRecord make_state_record(const DeformedStateSpec& spec, const FockVector& v);
std::string state_to_json(const StateRecord& r, int indent = -1);
/// A JSON array of records.
std::string states_to_json(const std::vector<StateRecord>& rs, int indent = -1);
/// Accepts a single record or an array (returns every record).
std::vector<StateRecord> parse_states_json(const std::string& text);

/// {version, dim, eps_grid, checks: [{name, residual, tolerance, order_ratio, pass}], pass, notes}
std::string report_to_json(const VerificationReport& r, int indent = 2);

/// {"mu": z, "nu": z, "alpha": z, "beta": z, "gamma": z, "delta": z, "eps": x}
/// where z is a number, [re, im] or a complex string.
BipartitePairSpec parse_pair_spec_json(const std::string& text);
std::string pair_spec_to_json(const BipartitePairSpec& s, int indent = -1);

}  // namespace qdeform
