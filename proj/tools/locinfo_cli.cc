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

// Command-line front end. Every subcommand writes JSON lines to stdout
// (scaling also writes a CSV file) and exits nonzero on any failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "locinfo/harness.h"
#include "locinfo/json_io.h"
#include "locinfo/suites.h"

namespace locinfo {
namespace {

// Accepts inline JSON, "@path", or a path to an existing file.
Json LoadJson(const std::string& text) {
  std::string body = text;
  std::string path;
  if (!text.empty() && text.front() == '@') {
    path = text.substr(1);
  } else if (!text.empty() && text.front() != '{' && std::ifstream(text).good()) {
    path = text;
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    body = buffer.str();
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void Emit(const Json& j) { std::cout << j.dump() << "\n"; }

int RunNorms(const std::string& channel_json) {
  const Json spec = LoadJson(channel_json);
  const Channel channel = ChannelFromJson(spec);
  const InfoMatrix h = ComputeInfoMatrix(channel);
  const FamilyNorms norms = ComputeNorms(h);
  Json out;
  out["channel"] = spec;
  out["k"] = channel.k();
  out["labels"] = channel.num_labels();
  out["norms"] = ToJson(norms);
  out["holder_chain"] = norms.SatisfiesHolderChain();
  std::vector<double> eig(h.eigenvalues().data(),
                          h.eigenvalues().data() + h.eigenvalues().size());
  out["eigenvalues"] = eig;
  Emit(out);
  return 0;
}

int RunBounds(int k, double eps, const std::string& family_spec) {
  const ChannelFamily family = ChannelFamily::Parse(family_spec);
  for (const BoundRow& row : LowerBoundTable(k, eps, family)) {
    Json j = ToJson(row);
    j["k"] = k;
    j["eps"] = eps;
    Emit(j);
  }
  return 0;
}

int RunSimulate(const std::string& spec_json) {
  const Json doc = LoadJson(spec_json);
  const ProtocolSpec spec = ProtocolSpecFromJson(doc);
  const Distribution input =
      doc.contains("input") ? DistributionFromJson(doc["input"]) : UniformDist(spec.k);
  if (input.k() != spec.k) throw std::invalid_argument("input domain does not match k");
  const ProtocolStrategy strategy = MakeStrategy(spec);
  const Transcript transcript = RunTranscript(strategy, input, spec.n, spec.seed);
  const Outcome outcome = strategy.finalize(transcript);

  Json out;
  out["spec"] = ToJson(spec);
  out["git_describe"] = GitDescribe();
  if (const auto* decision = std::get_if<Decision>(&outcome)) {
    const Json d = ToJson(*decision);
    out["verdict"] = d["verdict"];
    out["statistics"] = d["statistics"];
    if (doc.contains("trials")) {
      const int trials = doc["trials"].get<int>();
      out["error"] = ToJson(McError(strategy, input, spec.n, trials, spec.seed));
    }
  } else {
    const Distribution& estimate = std::get<Distribution>(outcome);
    out["estimate"] = ToJson(estimate);
    out["tv_to_input"] = TotalVariation(estimate, input);
  }
  Emit(out);
  return 0;
}

int RunVerify(const std::string& suite, int cases, uint64_t seed) {
  const std::vector<VerificationReport> reports = RunSuite(suite, cases, seed);
  for (const VerificationReport& r : reports) Emit(ToJson(r));
  const SuiteSummary s = Summarize(suite, cases, reports);
  Json summary;
  summary["summary"] = s.suite;
  summary["cases"] = s.cases;
  summary["checks"] = s.checks;
  summary["violations"] = s.violations;
  summary["min_slack"] = s.min_slack;
  summary["median_slack"] = s.median_slack;
  summary["max_slack"] = s.max_slack;
  Emit(summary);
  return s.violations == 0 ? 0 : 1;
}

int RunCalibrate(const std::vector<int>& ks, double eps, uint64_t seed, int trials,
                 const std::string& out_path) {
  CalibrationOptions options;
  options.trials = trials;
  const TesterConstants c = CalibrateConstants(ks, eps, seed, options);
  Json j = ToJson(c);
  j["git_describe"] = GitDescribe();
  j["trials"] = trials;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  }
  Emit(j);
  return 0;
}

int RunScaling(const std::vector<int>& ks, double eps, uint64_t seed, int trials,
               const std::string& preset, const std::string& constants_path,
               const std::string& out_path) {
  TesterConstants constants;
  if (!constants_path.empty()) {
    constants = ConstantsFromJson(LoadJson("@" + constants_path));
  } else if (preset == "calibrated") {
    constants = CalibratedPreset();
  } else if (preset == "proof") {
    constants = TesterConstants::Proof();
  } else {
    throw std::invalid_argument("unknown preset '" + preset + "'");
  }
  ScalingOptions options;
  options.trials = trials;
  const ScalingResult result = ScalingExperiment(ks, eps, seed, constants, options);

  Json spec;
  spec["protocols"] = {"interactive_leaky", "noninteractive_leaky"};
  spec["ks"] = ks;
  spec["eps"] = eps;
  spec["trials"] = trials;
  spec["target"] = options.target;
  spec["adversary_signs"] = options.search.adversary_count + 1;
  spec["bisection_steps"] = options.search.bisection_steps;
  const std::vector<std::string> metadata = {
      std::string("git_describe=") + GitDescribe(),
      "spec=" + spec.dump(),
      "seed=" + std::to_string(seed),
      "preset=" + constants.preset,
      "constants=" + ToJson(constants).dump(),
  };
  const std::string csv = ScalingCsv(result, eps, metadata);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    out << csv;
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  } else {
    std::cout << csv;
  }
  for (const SlopeFit& fit : result.fits) {
    Json j;
    j["protocol"] = fit.protocol;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["residuals"] = fit.residuals;
    Emit(j);
  }
  return 0;
}

}  // namespace
}  // namespace locinfo

int main(int argc, char** argv) {
  using namespace locinfo;
  CLI::App app{"Local information-constrained distribution learning and testing"};
  app.require_subcommand(1);

  std::string channel_json;
  auto* norms = app.add_subcommand("norms", "Norms of the channel information matrix");
  norms->add_option("--channel", channel_json, "Channel JSON, @file or path")->required();

  int k = 0;
  double eps = 0.0;
  std::string family;
  auto* bounds = app.add_subcommand("bounds", "Lower-bound table for a channel family");
  bounds->add_option("--k", k, "Half the domain size")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--eps", eps, "Accuracy")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--family", family,
                     "ldp:<rho> | comm:<bits> | leaky | erasure | custom:<op>,<nuc>,<frob>")
      ->required();

  std::string spec_json;
  auto* simulate = app.add_subcommand("simulate", "Run one protocol transcript");
  simulate->add_option("--spec", spec_json, "Protocol spec JSON, @file or path")->required();

  std::string suite;
  int cases = 0;
  uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Exact verification suites");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames),
                                                     std::end(kSuiteNames))));
  verify->add_option("--cases", cases, "Random instances")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed")->required();

  std::vector<int> ks;
  int trials = 200;
  std::string out_path;
  auto* calibrate = app.add_subcommand("calibrate", "Fit the tester constants");
  calibrate->add_option("--ks", ks, "Values of k")->required()->delimiter(',');
  calibrate->add_option("--eps", eps, "Accuracy")->required()->check(CLI::PositiveNumber);
  calibrate->add_option("--seed", seed, "Seed")->required();
  calibrate->add_option("--trials", trials, "Trials per error estimate")->check(CLI::Range(100, 1 << 20));
  calibrate->add_option("--out", out_path, "Also write the constants file here");

  std::string preset = "calibrated";
  std::string constants_path;
  auto* scaling = app.add_subcommand("scaling", "Interactive vs noninteractive n* across k");
  scaling->add_option("--ks", ks, "Values of k")->required()->delimiter(',');
  scaling->add_option("--eps", eps, "Accuracy")->required()->check(CLI::PositiveNumber);
  scaling->add_option("--seed", seed, "Seed")->required();
  scaling->add_option("--trials", trials, "Trials per error estimate")->check(CLI::Range(100, 1 << 20));
  scaling->add_option("--preset", preset, "proof | calibrated");
  scaling->add_option("--constants", constants_path, "Constants file (overrides --preset)");
  scaling->add_option("--out", out_path, "CSV destination (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norms) return RunNorms(channel_json);
    if (*bounds) return RunBounds(k, eps, family);
    if (*simulate) return RunSimulate(spec_json);
    if (*verify) return RunVerify(suite, cases, seed);
    if (*calibrate) return RunCalibrate(ks, eps, seed, trials, out_path);
    if (*scaling) {
      return RunScaling(ks, eps, seed, trials, preset, constants_path, out_path);
    }
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 1;
}
