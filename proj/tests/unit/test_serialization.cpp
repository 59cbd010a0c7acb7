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

#include <cmath>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qdeform/error.hpp"
#include "qdeform/serialization.hpp"

namespace qdeform {
namespace {

using nlohmann::json;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1.5"), Complex(1.5, 0.0));
  EXPECT_EQ(parse_complex("-0.5i"), Complex(0.0, -0.5));
  EXPECT_EQ(parse_complex("1+0.5i"), Complex(1.0, 0.5));
  EXPECT_EQ(parse_complex("1-2j"), Complex(1.0, -2.0));
  EXPECT_EQ(parse_complex("(1,0.5)"), Complex(1.0, 0.5));
  EXPECT_EQ(parse_complex("1,0.5"), Complex(1.0, 0.5));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("1e-3+2e-1i"), Complex(1e-3, 0.2));
}

TEST(ParseComplex, Rejections) {
  for (const char* bad : {"", "abc", "1+", "(1,", "1,2,3", "nan"}) {
    EXPECT_THROW(parse_complex(bad), InvalidSpec) << bad;
  }
}

TEST(Enums, RoundTrip) {
  for (Method m : {Method::perturbative, Method::numeric}) EXPECT_EQ(parse_method(to_string(m)), m);
  for (OverlapKind k : {OverlapKind::dd, OverlapKind::dn, OverlapKind::nd, OverlapKind::standard}) {
    EXPECT_EQ(parse_overlap_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_overlap_kind("standard"), OverlapKind::standard);
  for (SweepKind k : {SweepKind::alpha_sweep, SweepKind::theta_sweep, SweepKind::region_scan}) {
    EXPECT_EQ(parse_sweep_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_method("exact"), InvalidSpec);
}

TEST(StateJson, SchemaAndRoundTrip) {
  const DeformedStateSpec spec{Complex(0.3, -0.7), Deformation(0.15), 16, Method::numeric};
  const StateRecord rec = make_state_record(spec, make_deformed_state(spec).vector);
  const json j = json::parse(state_to_json(rec));
  for (const char* k : {"alpha_re", "alpha_im", "eps", "dim", "method", "amp"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["method"], "numeric");
  EXPECT_EQ(j["amp"].size(), 16u);

  const std::vector<StateRecord> back = parse_states_json(state_to_json(rec));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].alpha, rec.alpha);
  EXPECT_EQ(back[0].eps, rec.eps);
  EXPECT_EQ(back[0].dim, rec.dim);
  EXPECT_EQ(back[0].method, rec.method);
  EXPECT_EQ(back[0].amp, rec.amp);  // shortest round-trip formatting is exact
}

TEST(StateJson, ArrayRoundTripOverManyStates) {
  std::vector<StateRecord> recs;
  for (int k = 0; k < 12; ++k) {
    const DeformedStateSpec spec{std::polar(0.2 * k, 0.7 * k), Deformation(-0.3 + 0.05 * k),
                                 static_cast<std::size_t>(3 + k), Method::perturbative};
    recs.push_back(make_state_record(spec, make_deformed_state(spec).vector));
  }
  const std::vector<StateRecord> back = parse_states_json(states_to_json(recs));
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t k = 0; k < recs.size(); ++k) {
    EXPECT_EQ(back[k].amp, recs[k].amp);
    EXPECT_EQ(back[k].alpha, recs[k].alpha);
  }
}

TEST(StateJson, Rejections) {
  EXPECT_THROW(parse_states_json("{"), InvalidSpec);
  EXPECT_THROW(parse_states_json(R"({"alpha_re":0,"alpha_im":0,"eps":0,"dim":2,"method":"numeric","amp":[[1,0]]})"),
               InvalidSpec);
}

TEST(ReportJson, Schema) {
  VerificationReport r;
  r.version = "x";
  r.dim = 64;
  r.eps_grid = {0.1};
  r.checks.push_back({"a/eps=0.1", 1e-3, 2e-3, 4.0, true});
  r.checks.push_back({"b/eps=0.1", 1e-3, 2e-3, std::nullopt, true});
  const json j = json::parse(report_to_json(r));
  EXPECT_EQ(j["version"], "x");
  EXPECT_EQ(j["dim"], 64);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["checks"][0]["order_ratio"], 4.0);
  EXPECT_TRUE(j["checks"][1]["order_ratio"].is_null());
  for (const char* k : {"name", "residual", "tolerance", "order_ratio", "pass"}) {
    EXPECT_TRUE(j["checks"][0].contains(k)) << k;
  }
}

TEST(PairSpecJson, ParseForms) {
  const BipartitePairSpec s = parse_pair_spec_json(
      R"({"mu": 1, "nu": [-1, 0], "alpha": "0.8", "beta": -0.8, "gamma": "-0.8i", "delta": "1+2i", "eps": 0.1})");
  EXPECT_EQ(s.mu, Complex(1.0));
  EXPECT_EQ(s.nu, Complex(-1.0));
  EXPECT_EQ(s.gamma, Complex(0.0, -0.8));
  EXPECT_EQ(s.delta, Complex(1.0, 2.0));
  EXPECT_EQ(s.deformation.eps(), 0.1);
  const BipartitePairSpec back = parse_pair_spec_json(pair_spec_to_json(s));
  EXPECT_EQ(back.delta, s.delta);
  EXPECT_EQ(back.nu, s.nu);
}

TEST(PairSpecJson, Rejections) {
  EXPECT_THROW(parse_pair_spec_json(R"({"mu": 0, "nu": 0, "alpha": 1, "beta": 1, "gamma": 1, "delta": 1, "eps": 0})"),
               InvalidSpec);
  EXPECT_THROW(parse_pair_spec_json(R"({"mu": 1})"), InvalidSpec);
  EXPECT_THROW(parse_pair_spec_json(R"({"mu": true, "nu": 1, "alpha": 1, "beta": 1, "gamma": 1, "delta": 1, "eps": 0})"),
               InvalidSpec);
}

}  // namespace
}  // namespace qdeform
