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

// qdeform: deformed coherent states, overlaps, concurrence sweeps and the
// verification report from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdeform/coherent_states.hpp"
#include "qdeform/entanglement.hpp"
#include "qdeform/error.hpp"
#include "qdeform/serialization.hpp"
#include "qdeform/sweep.hpp"
#include "qdeform/verification.hpp"
#include "qdeform/version.hpp"

namespace {

using nlohmann::json;
using qdeform::Complex;

struct Globals {
  double threshold = qdeform::kDefaultMarginThreshold;
  bool seedless = false;
  std::size_t threads = 1;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qdeform::InvalidSpec("cannot open '" + path + "' for writing");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdeform::InvalidSpec("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json concurrence_json(const char* label, const qdeform::ConcurrenceValue& c, double threshold) {
  json j{{"c", c.c},
         {"margin", c.margin},
         {"valid", c.valid},
         {"allowed", qdeform::is_allowed(c.margin, threshold)}};
  if (c.truncated) j["truncated"] = true;
  if (!c.note.empty()) {
    j["note"] = c.note;
    std::cerr << label << ": " << c.note << '\n';
  }
  if (c.truncated) std::cerr << label << ": truncation flagged\n";
  return j;
}

// --- state -----------------------------------------------------------------

struct StateArgs {
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double eps = 0.0;
  std::size_t dim = qdeform::kDefaultDim;
  std::string method = "perturbative";
  std::string out = "-";
};

int run_state(const StateArgs& a) {
  const qdeform::Deformation d(a.eps);
  std::vector<qdeform::Method> methods;
  if (a.method == "both") {
    methods = {qdeform::Method::perturbative, qdeform::Method::numeric};
  } else {
    methods = {qdeform::parse_method(a.method)};
  }
  std::vector<qdeform::StateRecord> records;
  for (auto m : methods) {
    const qdeform::DeformedStateSpec spec{{a.alpha_re, a.alpha_im}, d, a.dim, m};
    const qdeform::DeformedState s = qdeform::make_deformed_state(spec);
    std::cerr << qdeform::to_string(m) << ": norm^2 - 1 = " << s.vector.squared_norm() - 1.0
              << ", tail = " << s.truncation.tail
              << (s.truncation.flagged ? " [truncation flagged]" : "")
              << (s.regime_violated ? " [outside weak-deformation regime]" : "") << '\n';
    records.push_back(qdeform::make_state_record(spec, s.vector));
  }
  if (records.size() == 2) {
    std::cerr << "|numeric - perturbative| = " << (records[1].amp - records[0].amp).norm() << '\n';
    write_output(a.out, qdeform::states_to_json(records) + "\n");
  } else {
    write_output(a.out, qdeform::state_to_json(records.front()) + "\n");
  }
  return 0;
}

// --- overlap ---------------------------------------------------------------

struct OverlapArgs {
  std::string a = "0";
  std::string b = "0";
  double eps = 0.0;
  std::string kind = "dd";
  std::size_t dim = qdeform::kDefaultDim;
};

int run_overlap(const OverlapArgs& a) {
  const Complex alpha = qdeform::parse_complex(a.a);
  const Complex beta = qdeform::parse_complex(a.b);
  const qdeform::OverlapKind kind = qdeform::parse_overlap_kind(a.kind);
  const qdeform::Deformation d(a.eps);
  const Complex closed = qdeform::overlap_closed_form(alpha, beta, d, kind);
  const qdeform::NumericOverlap num = qdeform::overlap_numeric(alpha, beta, d, kind, a.dim);
  json j{{"a", complex_json(alpha)},
         {"b", complex_json(beta)},
         {"eps", a.eps},
         {"kind", qdeform::to_string(kind)},
         {"closed_form", complex_json(closed)},
         {"numeric", complex_json(num.value)},
         {"difference", std::abs(closed - num.value)},
         {"truncated", num.truncated}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

// --- concurrence -----------------------------------------------------------

struct ConcurrenceArgs {
  std::string spec_file;
  bool psi2 = false;
  std::string alpha = "1";
  double theta = 0.0;
  double eps = 0.0;
  std::size_t dim = qdeform::kDefaultDim;
  double tol = 1e-9;
};

int run_concurrence(const ConcurrenceArgs& a, const Globals& g) {
  qdeform::BipartitePairSpec spec;
  json j;
  if (!a.spec_file.empty()) {
    spec = qdeform::parse_pair_spec_json(read_file(a.spec_file));
  } else if (a.psi2) {
    const Complex alpha = qdeform::parse_complex(a.alpha);
    spec = qdeform::psi2_spec(alpha, a.theta, qdeform::Deformation(a.eps));
    j["symmetric_closed_form"] = concurrence_json(
        "symmetric_closed_form",
        qdeform::concurrence_symmetric(std::abs(alpha), a.theta, spec.deformation), g.threshold);
  } else {
    throw qdeform::InvalidSpec("concurrence needs --spec FILE or --psi2");
  }
  j["spec"] = json::parse(qdeform::pair_spec_to_json(spec));
  const qdeform::OrthoBasisData o = qdeform::ortho_basis(spec);
  j["p1"] = complex_json(o.p1);
  j["p2"] = complex_json(o.p2);
  j["pair"] = concurrence_json("pair", qdeform::concurrence_pair(spec), g.threshold);
  j["oracle"] = concurrence_json("oracle", qdeform::concurrence_fock_oracle(spec, a.dim), g.threshold);
  const qdeform::MaximalEntanglementCheck m = qdeform::is_maximally_entangled(spec, a.tol);
  j["maximally_entangled"] = {{"maximal", m.maximal},
                              {"theta", m.theta},
                              {"amplitude_residual", m.amplitude_residual},
                              {"modulus_residual", m.modulus_residual},
                              {"phase_residual", m.phase_residual}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string kind = "alpha";
  std::optional<double> alpha_min, alpha_max, theta_min, theta_max, eps_min, eps_max;
  std::optional<std::size_t> alpha_steps, theta_steps, eps_steps;
  std::vector<double> eps;
  std::optional<double> theta, alpha;
  bool zoom = false;
  std::string out = "-";
};

int run_sweep(const SweepArgs& a, const Globals& g) {
  const qdeform::SweepKind kind = qdeform::parse_sweep_kind(a.kind);
  qdeform::SweepSpec spec;
  switch (kind) {
    case qdeform::SweepKind::alpha_sweep:
      spec = a.zoom ? qdeform::default_alpha_zoom_sweep() : qdeform::default_alpha_sweep();
      break;
    case qdeform::SweepKind::theta_sweep:
      spec = qdeform::default_theta_sweep();
      break;
    case qdeform::SweepKind::region_scan:
      spec = qdeform::default_region_scan();
      break;
  }
  auto set = [](auto& field, const auto& opt) {
    if (opt) field = *opt;
  };
  set(spec.alpha_range.min, a.alpha_min);
  set(spec.alpha_range.max, a.alpha_max);
  set(spec.alpha_range.steps, a.alpha_steps);
  set(spec.theta_range.min, a.theta_min);
  set(spec.theta_range.max, a.theta_max);
  set(spec.theta_range.steps, a.theta_steps);
  set(spec.eps_range.min, a.eps_min);
  set(spec.eps_range.max, a.eps_max);
  set(spec.eps_range.steps, a.eps_steps);
  set(spec.theta_fixed, a.theta);
  set(spec.alpha_fixed, a.alpha);
  if (!a.eps.empty()) spec.eps_list = a.eps;
  spec.threshold = g.threshold;
  spec.threads = g.threads;

  const qdeform::SweepTable table = qdeform::run_sweep(spec);
  std::size_t stretched = 0;
  for (const auto& r : table) stretched += r.regime_violated ? 1 : 0;
  if (stretched > 0) {
    std::cerr << stretched << " rows have |eps| > " << qdeform::kWeakRegimeLimit
              << " (outside the weak-deformation regime)\n";
  }
  write_output(a.out, qdeform::to_csv(table));
  return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::size_t dim = qdeform::kDefaultDim;
  std::vector<double> eps_grid{0.2, 0.1, 0.05, 0.0};
  std::string report = "-";
  bool strict = false;
};

int run_verify(const VerifyArgs& a) {
  const qdeform::VerificationReport r = qdeform::run_verification_suite(a.dim, a.eps_grid);
  write_output(a.report, qdeform::report_to_json(r) + "\n");
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    if (!c.pass) {
      ++failed;
      std::cerr << "FAIL " << c.name << ": residual " << c.residual << " tolerance "
                << c.tolerance << '\n';
    }
  }
  std::cerr << (r.pass() ? "verification passed" : "verification FAILED") << " ("
            << r.checks.size() - failed << "/" << r.checks.size() << " checks)\n";
  return a.strict && !r.pass() ? 1 : 0;
}

// --- decrease --------------------------------------------------------------

struct DecreaseArgs {
  std::vector<double> alpha{0.9, 1.0, 1.1};
  double theta = 0.0;
  double eps_lo = -0.4;
  double eps_hi = 0.4;
};

// Published values of the relative decrease over eps in [-0.4, 0.4] at theta = 0.
std::optional<double> published_decrease(double alpha_abs, double theta, double lo, double hi) {
  if (theta != 0.0 || lo != -0.4 || hi != 0.4) return std::nullopt;
  if (alpha_abs == 0.9) return 6.3;
  if (alpha_abs == 1.0) return 4.7;
  if (alpha_abs == 1.1) return 3.0;
  return std::nullopt;
}

int run_decrease(const DecreaseArgs& a) {
  std::printf("%-8s %-12s %-12s %s\n", "|alpha|", "computed[%]", "published[%]", "difference");
  for (double x : a.alpha) {
    const double pct = qdeform::percent_decrease(x, a.theta, a.eps_lo, a.eps_hi);
    if (auto pub = published_decrease(x, a.theta, a.eps_lo, a.eps_hi)) {
      std::printf("%-8.3f %-12.4f %-12.1f %+.4f  (computed from the closed form; differs)\n", x,
                  pct, *pub, pct - *pub);
    } else {
      std::printf("%-8.3f %-12.4f %-12s\n", x, pct, "-");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed coherent states and their bipartite entanglement"};
  app.set_version_flag("--version", std::string(qdeform::kVersion));
  app.set_config("--config", "", "Read options from a TOML/INI file (command line overrides)");
  app.require_subcommand(1);

  Globals g;
  app.add_option("--threshold", g.threshold, "Validity-margin cutoff for the allowed region")
      ->check(CLI::PositiveNumber);
  app.add_flag("--seedless", g.seedless, "Accepted for compatibility; no RNG is used anywhere");
  app.add_option("--threads", g.threads, "Worker threads for sweeps (0 = hardware)");

  StateArgs state;
  auto* st = app.add_subcommand("state", "Build a deformed coherent state");
  st->add_option("--alpha-re", state.alpha_re, "Re(alpha)");
  st->add_option("--alpha-im", state.alpha_im, "Im(alpha)");
  st->add_option("--eps", state.eps, "Deformation eps (q = 1 + eps)");
  st->add_option("--dim", state.dim, "Fock truncation")->check(CLI::Range(3, 4096));
  st->add_option("--method", state.method, "perturbative | numeric | both")
      ->check(CLI::IsMember({"perturbative", "numeric", "both"}));
  st->add_option("--out", state.out, "Output JSON file ('-' = stdout)");

  OverlapArgs overlap;
  auto* ov = app.add_subcommand("overlap", "Closed-form and numeric overlap of two states");
  ov->add_option("--a", overlap.a, "Ket label alpha (e.g. 1, -0.5i, 1+0.5i, 1,0.5)");
  ov->add_option("--b", overlap.b, "Bra label beta");
  ov->add_option("--eps", overlap.eps, "Deformation eps");
  ov->add_option("--kind", overlap.kind, "dd | dn | nd | std")
      ->check(CLI::IsMember({"dd", "dn", "nd", "std", "standard"}));
  ov->add_option("--dim", overlap.dim, "Fock truncation for the numeric overlap")
      ->check(CLI::Range(3, 4096));

  ConcurrenceArgs conc;
  auto* cc = app.add_subcommand("concurrence", "Concurrence of a two-mode superposition");
  auto* spec_opt = cc->add_option("--spec", conc.spec_file, "Pair-spec JSON file")
                       ->check(CLI::ExistingFile);
  auto* psi2_opt = cc->add_flag("--psi2", conc.psi2,
                                "Use |a>|-a> + e^{i theta}|-a>|a> with --alpha --theta --eps");
  spec_opt->excludes(psi2_opt);
  cc->add_option("--alpha", conc.alpha, "Coherence label for --psi2");
  cc->add_option("--theta", conc.theta, "Relative phase for --psi2");
  cc->add_option("--eps", conc.eps, "Deformation eps for --psi2");
  cc->add_option("--dim", conc.dim, "Fock truncation for the oracle")->check(CLI::Range(3, 4096));
  cc->add_option("--tol", conc.tol, "Tolerance of the maximal-entanglement predicate");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Emit figure data as CSV");
  sw->add_option("kind", sweep.kind, "alpha | theta | region")
      ->required()
      ->check(CLI::IsMember({"alpha", "theta", "region"}));
  sw->add_option("--alpha-min", sweep.alpha_min);
  sw->add_option("--alpha-max", sweep.alpha_max);
  sw->add_option("--alpha-steps", sweep.alpha_steps);
  sw->add_option("--theta-min", sweep.theta_min);
  sw->add_option("--theta-max", sweep.theta_max);
  sw->add_option("--theta-steps", sweep.theta_steps);
  sw->add_option("--eps-min", sweep.eps_min, "Region scan eps axis");
  sw->add_option("--eps-max", sweep.eps_max);
  sw->add_option("--eps-steps", sweep.eps_steps);
  sw->add_option("--eps", sweep.eps, "eps values for alpha/theta sweeps")->delimiter(',');
  sw->add_option("--theta", sweep.theta, "Fixed theta (alpha sweeps, region scans)");
  sw->add_option("--alpha", sweep.alpha, "Fixed |alpha| (theta sweeps)");
  sw->add_flag("--zoom", sweep.zoom, "Alpha sweep over [0.9, 1.1] step 0.005");
  sw->add_option("--out", sweep.out, "Output CSV file ('-' = stdout)");

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Run the residual verification suite");
  vf->add_option("--dim", verify.dim, "Fock truncation (>= 32)")->check(CLI::Range(32, 1024));
  vf->add_option("--eps-grid", verify.eps_grid, "Comma-separated eps values")->delimiter(',');
  vf->add_option("--report", verify.report, "Output JSON report ('-' = stdout)");
  vf->add_flag("--strict", verify.strict, "Exit with status 1 when any check fails");

  DecreaseArgs decrease;
  auto* dc = app.add_subcommand("decrease", "Relative concurrence decrease over an eps interval");
  dc->add_option("--alpha", decrease.alpha, "|alpha| values")->delimiter(',');
  dc->add_option("--theta", decrease.theta);
  dc->add_option("--eps-lo", decrease.eps_lo);
  dc->add_option("--eps-hi", decrease.eps_hi);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*st) return run_state(state);
    if (*ov) return run_overlap(overlap);
    if (*cc) return run_concurrence(conc, g);
    if (*sw) return run_sweep(sweep, g);
    if (*vf) return run_verify(verify);
    if (*dc) return run_decrease(decrease);
  } catch (const qdeform::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
