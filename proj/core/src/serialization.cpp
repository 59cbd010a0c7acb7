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

#include "qdeform/serialization.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

using nlohmann::json;

double parse_real(std::string_view s) {
  // from_chars is locale independent.
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw InvalidSpec("not a number: '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) throw InvalidSpec("not a finite number: '" + std::string(s) + "'");
  return v;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Complex complex_from_json(const json& j, const char* key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_string()) return parse_complex(j.get<std::string>());
  throw InvalidSpec(std::string("field '") + key + "' must be a number, [re, im] or a string");
}

double require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw InvalidSpec(std::string(what) + " must be finite");
  return x;
}

json record_json(const StateRecord& r) {
  json amp = json::array();
  for (Eigen::Index i = 0; i < r.amp.size(); ++i) amp.push_back({r.amp(i).real(), r.amp(i).imag()});
  return json{{"alpha_re", r.alpha.real()}, {"alpha_im", r.alpha.imag()}, {"eps", r.eps},
              {"dim", r.dim},            {"method", to_string(r.method)},  {"amp", std::move(amp)}};
}

StateRecord record_from_json(const json& j) {
  try {
    StateRecord r;
    r.alpha = {j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>()};
    r.eps = j.at("eps").get<double>();
    r.dim = j.at("dim").get<std::size_t>();
    r.method = parse_method(j.at("method").get<std::string>());
    const json& amp = j.at("amp");
    if (!amp.is_array() || amp.size() != r.dim) {
      throw InvalidSpec("state record amp must have dim entries");
    }
    r.amp.resize(static_cast<Eigen::Index>(r.dim));
    for (std::size_t i = 0; i < r.dim; ++i) {
      const json& z = amp[i];
      if (!z.is_array() || z.size() != 2) throw InvalidSpec("amp entries must be [re, im]");
      r.amp(static_cast<Eigen::Index>(i)) = {z[0].get<double>(), z[1].get<double>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed state record: ") + e.what());
  }
}

}  // namespace

std::string to_string(Method m) { return m == Method::numeric ? "numeric" : "perturbative"; }

std::string to_string(OverlapKind k) {
  switch (k) {
    case OverlapKind::dd:
      return "dd";
    case OverlapKind::dn:
      return "dn";
    case OverlapKind::nd:
      return "nd";
    case OverlapKind::standard:
      return "std";
  }
  return "std";
}

std::string to_string(SweepKind k) {
  switch (k) {
    case SweepKind::alpha_sweep:
      return "alpha";
    case SweepKind::theta_sweep:
      return "theta";
    case SweepKind::region_scan:
      return "region";
  }
  return "alpha";
}

Method parse_method(std::string_view s) {
  if (s == "perturbative") return Method::perturbative;
  if (s == "numeric") return Method::numeric;
  throw InvalidSpec("unknown method '" + std::string(s) + "'");
}

OverlapKind parse_overlap_kind(std::string_view s) {
  if (s == "dd") return OverlapKind::dd;
  if (s == "dn") return OverlapKind::dn;
  if (s == "nd") return OverlapKind::nd;
  if (s == "std" || s == "standard") return OverlapKind::standard;
  throw InvalidSpec("unknown overlap kind '" + std::string(s) + "'");
}

SweepKind parse_sweep_kind(std::string_view s) {
  if (s == "alpha") return SweepKind::alpha_sweep;
  if (s == "theta") return SweepKind::theta_sweep;
  if (s == "region") return SweepKind::region_scan;
  throw InvalidSpec("unknown sweep kind '" + std::string(s) + "'");
}

Complex parse_complex(std::string_view input) {
  std::string s = trim(input);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw InvalidSpec("empty complex number");

  if (auto comma = s.find(','); comma != std::string::npos) {
    return {parse_real(std::string_view(s).substr(0, comma)),
            parse_real(std::string_view(s).substr(comma + 1))};
  }
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s), 0.0};

  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(std::string_view(body).substr(0, split)),
          imag_part(std::string_view(body).substr(split))};
}

StateRecord make_state_record(const DeformedStateSpec& spec, const FockVector& v) {
  return {spec.alpha, spec.deformation.eps(), v.dim(), spec.method, v.amplitudes()};
}

std::string state_to_json(const StateRecord& r, int indent) { return record_json(r).dump(indent); }

std::string states_to_json(const std::vector<StateRecord>& rs, int indent) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(record_json(r));
  return arr.dump(indent);
}

std::vector<StateRecord> parse_states_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("invalid JSON: ") + e.what());
  }
  std::vector<StateRecord> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(record_from_json(item));
  } else {
    out.push_back(record_from_json(j));
  }
  return out;
}

std::string report_to_json(const VerificationReport& r, int indent) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"order_ratio", c.order_ratio ? json(*c.order_ratio) : json(nullptr)},
                      {"pass", c.pass}});
  }
  json out{{"version", r.version}, {"dim", r.dim},      {"eps_grid", r.eps_grid},
           {"checks", checks},     {"pass", r.pass()}, {"notes", r.notes}};
  return out.dump(indent);
}

BipartitePairSpec parse_pair_spec_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    BipartitePairSpec s;
    s.mu = complex_from_json(j.at("mu"), "mu");
    s.nu = complex_from_json(j.at("nu"), "nu");
    s.alpha = complex_from_json(j.at("alpha"), "alpha");
    s.beta = complex_from_json(j.at("beta"), "beta");
    s.gamma = complex_from_json(j.at("gamma"), "gamma");
    s.delta = complex_from_json(j.at("delta"), "delta");
    s.deformation = Deformation(require_finite(j.value("eps", 0.0), "eps"));
    if (s.mu == Complex(0.0) && s.nu == Complex(0.0)) {
      throw InvalidSpec("mu and nu must not both be zero");
    }
    return s;
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed pair spec: ") + e.what());
  }
}

std::string pair_spec_to_json(const BipartitePairSpec& s, int indent) {
  auto z = [](Complex c) { return json::array({c.real(), c.imag()}); };
  return json{{"mu", z(s.mu)},       {"nu", z(s.nu)},       {"alpha", z(s.alpha)},
              {"beta", z(s.beta)},   {"gamma", z(s.gamma)}, {"delta", z(s.delta)},
              {"eps", s.deformation.eps()}}
      .dump(indent);
}

}  // namespace qdeform
