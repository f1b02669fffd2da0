// Copyright 2026 The locinfo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locinfo/json_io.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

namespace locinfo {
namespace {

TEST(DistributionJsonTest, AllForms) {
  EXPECT_EQ(DistributionFromJson(Json::parse(R"({"type":"uniform","k":3})")), UniformDist(3));
  const Distribution p = DistributionFromJson(
      Json::parse(R"({"type":"paninski","k":2,"eps":0.1,"z":[1,-1]})"));
  EXPECT_EQ(p, PaninskiDist(PerturbationSign({1, -1}, 0.05)));
  EXPECT_NEAR(TotalVariation(p, UniformDist(2)), 0.1, 1e-15);
  const Distribution e =
      DistributionFromJson(Json::parse(R"({"type":"explicit","probs":[0.25,0.75]})"));
  EXPECT_EQ(e[1], 0.75);
  EXPECT_EQ(DistributionFromJson(ToJson(p)), p);
}

TEST(DistributionJsonTest, Malformed) {
  for (const char* text : {R"({"type":"uniform"})", R"({"type":"cauchy","k":2})",
                           R"({"type":"paninski","k":3,"eps":0.1,"z":[1,-1]})",
                           R"({"type":"explicit","probs":[0.5,0.6]})",
                           R"({"type":"uniform","k":"two"})", R"([1,2])"}) {
    EXPECT_THROW(DistributionFromJson(Json::parse(text)), std::invalid_argument) << text;
  }
}

TEST(ChannelJsonTest, AllForms) {
  const Channel rr = ChannelFromJson(Json::parse(R"({"type":"rr","k":2,"rho":1.0})"));
  EXPECT_EQ(rr.num_labels(), 4);
  const Channel pe = ChannelFromJson(
      Json::parse(R"({"type":"partial_erasure","k":2,"eta":0.5,"x_star":1})"));
  EXPECT_EQ(pe.Prob(1, 1), 1.0);
  const Channel lq = ChannelFromJson(
      Json::parse(R"({"type":"leaky_query","k":1,"eta":0.25,"u":[1,0]})"));
  EXPECT_EQ(lq.label(2), "1*");
  EXPECT_DOUBLE_EQ(lq.Prob(0, 2), 0.75);
  const Channel m = ChannelFromJson(Json::parse(
      R"({"type":"matrix","k":1,"labels":["a","b"],"rows":[[1,0],[0.5,0.5]]})"));
  EXPECT_EQ(m.label(1), "b");
  EXPECT_THROW(ChannelFromJson(Json::parse(
                   R"({"type":"matrix","k":1,"labels":["a","b"],"rows":[[1,0],[0.5,0.6]]})")),
               std::invalid_argument);
  EXPECT_THROW(ChannelFromJson(Json::parse(R"({"type":"bsc","k":1})")),
               std::invalid_argument);
}

TEST(ConstantsJsonTest, RoundTrip) {
  TesterConstants c;
  c.preset = "calibrated";
  c.heavy_coeff = 44;
  c.c = 1.75;
  c.repeats = 3;
  c.threshold_margin = 1.25;
  c.c_ni = 0.9;
  c.calibrated = true;
  c.calibration_seed = 123456789012345ULL;
  c.calibration_eps = 0.3;
  c.calibration_ks = {256};
  c.safety_factor = 1.25;
  const Json j = ToJson(c);
  EXPECT_EQ(j["stage1_count_threshold"], 6);
  const TesterConstants back = ConstantsFromJson(Json::parse(j.dump()));
  EXPECT_EQ(ToJson(back), j);
  EXPECT_EQ(back.calibration_seed, c.calibration_seed);

  const Json proof = ToJson(TesterConstants::Proof());
  EXPECT_TRUE(proof["c_ni"].is_null());
  EXPECT_FALSE(ConstantsFromJson(proof).c_ni.has_value());

  Json bad = j;
  bad["repeats"] = 4;
  EXPECT_THROW(ConstantsFromJson(bad), std::invalid_argument);
  bad = j;
  bad["version"] = 99;
  EXPECT_THROW(ConstantsFromJson(bad), std::invalid_argument);
}

TEST(ProtocolSpecJsonTest, PresetsAndOverrides) {
  const ProtocolSpec proof = ProtocolSpecFromJson(Json::parse(
      R"({"protocol":"interactive_leaky","k":256,"eps":0.3,"n":900,"preset":"proof","seed":4})"));
  EXPECT_EQ(proof.kind, ProtocolKind::kInteractiveLeaky);
  EXPECT_EQ(proof.constants.repeats, 43);
  EXPECT_EQ(proof.seed, 4u);
  const ProtocolSpec cal = ProtocolSpecFromJson(Json::parse(
      R"({"protocol":"noninteractive_leaky","k":256,"eps":0.3,"n":900,"preset":"calibrated"})"));
  EXPECT_TRUE(cal.constants.calibrated);
  EXPECT_EQ(ProtocolSpecFromJson(ToJson(cal)).constants.c, cal.constants.c);
  EXPECT_THROW(ProtocolSpecFromJson(Json::parse(
                   R"({"protocol":"telepathy","k":2,"eps":0.3,"n":9})")),
               std::invalid_argument);
  EXPECT_THROW(ProtocolSpecFromJson(Json::parse(
                   R"({"protocol":"erasure_sim","k":2,"eps":0.3,"n":9,"preset":"lucky"})")),
               std::invalid_argument);
  EXPECT_THROW(ProtocolSpecFromJson(Json::parse(
                   R"({"protocol":"erasure_sim","k":2,"eps":0,"n":9})")),
               std::invalid_argument);
}

TEST(DecisionJsonTest, Fields) {
  Decision d;
  d.verdict = Verdict::kFar;
  d.statistics = {{"b", 2.0}, {"a", 1.0}};
  const Json j = ToJson(d);
  EXPECT_EQ(j["verdict"], "far");
  EXPECT_EQ(j["statistics"]["a"], 1.0);
  EXPECT_EQ(j["statistics"].begin().key(), "a");
}

TEST(ReportJsonTest, DetailOnlyWhenPresent) {
  VerificationReport r = VerificationReport::Make("case", 1.0, 2.0);
  EXPECT_FALSE(ToJson(r).contains("detail"));
  r.detail = "table";
  EXPECT_EQ(ToJson(r)["detail"], "table");
  const Json e = ToJson(WilsonEstimate(10, 100));
  EXPECT_NEAR(e["half_width"].get<double>(),
              (e["upper"].get<double>() - e["lower"].get<double>()) / 2, 1e-15);
}

}  // namespace
}  // namespace locinfo
