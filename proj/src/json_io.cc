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

#include <stdexcept>
#include <string>
#include <vector>

namespace locinfo {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw std::invalid_argument(message);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) Fail(std::string("missing field '") + key + "'");
  return *it;
}

// nlohmann throws its own exception types on a type mismatch; fold them
// into std::invalid_argument with the field name.
template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T GetOr(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return Get<T>(j, key);
}

}  // namespace

Distribution DistributionFromJson(const Json& j) {
  const std::string type = Get<std::string>(j, "type");
  if (type == "uniform") return UniformDist(Get<int>(j, "k"));
  if (type == "paninski") {
    const int k = Get<int>(j, "k");
    std::vector<int> z = Get<std::vector<int>>(j, "z");
    if (static_cast<int>(z.size()) != k) Fail("paninski z must have k entries");
    // eps is the distance to uniform; the perturbation is half of it.
    return PaninskiDist(PerturbationSign(std::move(z), Get<double>(j, "eps") / 2));
  }
  if (type == "explicit") return Distribution(Get<std::vector<double>>(j, "probs"));
  Fail("unknown distribution type '" + type + "'");
}

Channel ChannelFromJson(const Json& j) {
  const std::string type = Get<std::string>(j, "type");
  const int k = Get<int>(j, "k");
  if (k < 1) Fail("channel needs k >= 1");
  if (type == "rr") return RandomizedResponse(k, Get<double>(j, "rho"));
  if (type == "partial_erasure") {
    return PartialErasure(k, Get<double>(j, "eta"), Get<int>(j, "x_star"));
  }
  if (type == "leaky_query") {
    const auto u = Get<std::vector<double>>(j, "u");
    return LeakyQuery(k, Get<double>(j, "eta"), u);
  }
  if (type == "matrix") {
    auto labels = Get<std::vector<std::string>>(j, "labels");
    auto rows = Get<std::vector<std::vector<double>>>(j, "rows");
    return Channel::FromRows(k, std::make_shared<const Alphabet>(std::move(labels)),
                             rows);
  }
  Fail("unknown channel type '" + type + "'");
}

Json ToJson(const TesterConstants& c) {
  Json j;
  j["version"] = kConstantsVersion;
  j["preset"] = c.preset;
  j["heavy_coeff"] = c.heavy_coeff;
  j["stage1_count_threshold"] = c.Stage1CountThreshold();
  j["c"] = c.c;
  j["repeats"] = c.repeats;
  j["threshold_margin"] = c.threshold_margin;
  j["c_ni"] = c.c_ni ? Json(*c.c_ni) : Json(nullptr);
  j["calibrated"] = c.calibrated;
  j["calibration_seed"] = c.calibration_seed;
  j["calibration_eps"] = c.calibration_eps;
  j["calibration_ks"] = c.calibration_ks;
  j["safety_factor"] = c.safety_factor;
  return j;
}

TesterConstants ConstantsFromJson(const Json& j) {
  if (GetOr<int>(j, "version", kConstantsVersion) != kConstantsVersion) {
    Fail("unsupported constants version");
  }
  TesterConstants c;
  c.preset = Get<std::string>(j, "preset");
  c.heavy_coeff = Get<double>(j, "heavy_coeff");
  c.c = Get<double>(j, "c");
  c.repeats = Get<int>(j, "repeats");
  c.threshold_margin = Get<double>(j, "threshold_margin");
  if (j.contains("c_ni") && !j["c_ni"].is_null()) c.c_ni = Get<double>(j, "c_ni");
  c.calibrated = GetOr<bool>(j, "calibrated", false);
  c.calibration_seed = GetOr<uint64_t>(j, "calibration_seed", 0);
  c.calibration_eps = GetOr<double>(j, "calibration_eps", 0.0);
  c.calibration_ks = GetOr<std::vector<int>>(j, "calibration_ks", {});
  c.safety_factor = GetOr<double>(j, "safety_factor", 1.0);
  if (!(c.heavy_coeff > 0 && c.c > 0 && c.threshold_margin > 0) || c.repeats < 1 ||
      c.repeats % 2 == 0) {
    Fail("constants out of range");
  }
  return c;
}

ProtocolSpec ProtocolSpecFromJson(const Json& j) {
  ProtocolSpec spec;
  spec.kind = ParseProtocolKind(Get<std::string>(j, "protocol"));
  spec.k = Get<int>(j, "k");
  spec.eps = Get<double>(j, "eps");
  spec.n = Get<int>(j, "n");
  spec.seed = GetOr<uint64_t>(j, "seed", 0);
  if (spec.k < 1 || spec.n < 0) Fail("protocol spec needs k >= 1 and n >= 0");
  if (!(spec.eps > 0.0 && spec.eps <= 0.5)) Fail("protocol spec needs eps in (0, 1/2]");
  if (j.contains("eta")) spec.eta = Get<double>(j, "eta");
  const std::string preset = GetOr<std::string>(j, "preset", "proof");
  if (preset == "proof") {
    spec.constants = TesterConstants::Proof();
  } else if (preset == "calibrated") {
    spec.constants = CalibratedPreset();
  } else {
    Fail("unknown preset '" + preset + "'");
  }
  if (j.contains("constants")) spec.constants = ConstantsFromJson(j["constants"]);
  return spec;
}

Json ToJson(const ProtocolSpec& spec) {
  Json j;
  j["protocol"] = ProtocolKindName(spec.kind);
  j["k"] = spec.k;
  j["eps"] = spec.eps;
  j["n"] = spec.n;
  j["preset"] = spec.constants.preset;
  j["seed"] = spec.seed;
  if (spec.eta) j["eta"] = *spec.eta;
  j["constants"] = ToJson(spec.constants);
  return j;
}

Json ToJson(const Decision& decision) {
  Json j;
  j["verdict"] = VerdictName(decision.verdict);
  j["statistics"] = Json::object();
  for (const auto& [key, value] : decision.statistics) j["statistics"][key] = value;
  return j;
}

Json ToJson(const Distribution& p) {
  Json j;
  j["type"] = "explicit";
  j["probs"] = std::vector<double>(p.probs().begin(), p.probs().end());
  return j;
}

Json ToJson(const FamilyNorms& norms) {
  Json j;
  j["op"] = norms.op;
  j["nuclear"] = norms.nuclear;
  j["frobenius"] = norms.frobenius;
  return j;
}

Json ToJson(const VerificationReport& report) {
  Json j;
  j["instance"] = report.instance;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["holds"] = report.holds;
  j["slack"] = report.slack;
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

Json ToJson(const BoundRow& row) {
  Json j;
  j["task"] = TaskName(row.task);
  j["model"] = ModeName(row.model);
  j["family"] = row.family;
  j["formula"] = row.formula;
  j["bound"] = row.bound;
  return j;
}

Json ToJson(const ErrorEstimate& e) {
  Json j;
  j["errors"] = e.errors;
  j["trials"] = e.trials;
  j["rate"] = e.rate;
  j["lower"] = e.lower;
  j["upper"] = e.upper;
  j["half_width"] = (e.upper - e.lower) / 2.0;
  return j;
}

}  // namespace locinfo
