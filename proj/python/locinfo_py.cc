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


// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the locinfo package; matrices come back as numpy arrays.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "locinfo/channel.h"
#include "locinfo/harness.h"
#include "locinfo/json_io.h"
#include "locinfo/protocol.h"
#include "locinfo/suites.h"
#include "pybind11/eigen.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;

namespace locinfo {
namespace {

Eigen::MatrixXd InfoMatrixOf(const std::string& channel_json) {
  const Channel channel = ChannelFromJson(Json::parse(channel_json));
  return ComputeInfoMatrix(channel).entries();
}

std::string NormsOf(const std::string& channel_json) {
  const Channel channel = ChannelFromJson(Json::parse(channel_json));
  const FamilyNorms norms = ComputeNorms(ComputeInfoMatrix(channel));
  Json out = ToJson(norms);
  out["holder_chain"] = norms.SatisfiesHolderChain();
  return out.dump();
}

std::string Bounds(int k, double eps, const std::string& family) {
  Json out = Json::array();
  for (const BoundRow& row : LowerBoundTable(k, eps, ChannelFamily::Parse(family))) {
    out.push_back(ToJson(row));
  }
  return out.dump();
}

std::string Simulate(const std::string& spec_json) {
  const ProtocolSpec spec = ProtocolSpecFromJson(Json::parse(spec_json));
  const Distribution input = UniformDist(spec.k);
  const ProtocolStrategy strategy = MakeStrategy(spec);
  const Outcome outcome = strategy.finalize(RunTranscript(strategy, input, spec.n, spec.seed));
  if (const auto* decision = std::get_if<Decision>(&outcome)) return ToJson(*decision).dump();
  return ToJson(std::get<Distribution>(outcome)).dump();
}

std::string Verify(const std::string& suite, int cases, uint64_t seed) {
  const std::vector<VerificationReport> reports = RunSuite(suite, cases, seed);
  const SuiteSummary s = Summarize(suite, cases, reports);
  Json out;
  out["suite"] = s.suite;
  out["cases"] = s.cases;
  out["checks"] = s.checks;
  out["violations"] = s.violations;
  out["min_slack"] = s.min_slack;
  out["median_slack"] = s.median_slack;
  out["max_slack"] = s.max_slack;
  return out.dump();
}

std::string WorstCase(const std::string& spec_json, int trials, uint64_t seed) {
  const ProtocolSpec spec = ProtocolSpecFromJson(Json::parse(spec_json));
  const WorstCaseResult r = WorstCaseError(spec, trials, seed);
  Json out;
  out["worst"] = ToJson(r.worst);
  out["uniform"] = ToJson(r.uniform);
  out["worst_index"] = r.worst_index;
  return out.dump();
}

std::string Preset(const std::string& name) {
  if (name == "proof") return ToJson(TesterConstants::Proof()).dump();
  if (name == "calibrated") return ToJson(CalibratedPreset()).dump();
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace
}  // namespace locinfo

PYBIND11_MODULE(_locinfo, m) {
  m.doc() = "Bindings for the locinfo channel and protocol toolkit";
  m.def("info_matrix", &locinfo::InfoMatrixOf, py::arg("channel_json"));
  m.def("norms", &locinfo::NormsOf, py::arg("channel_json"));
  m.def("bounds", &locinfo::Bounds, py::arg("k"), py::arg("eps"), py::arg("family"));
  m.def("simulate", &locinfo::Simulate, py::arg("spec_json"));
  m.def("verify", &locinfo::Verify, py::arg("suite"), py::arg("cases"), py::arg("seed"));
  m.def("worst_case_error", &locinfo::WorstCase, py::arg("spec_json"), py::arg("trials"),
        py::arg("seed"));
  m.def("preset", &locinfo::Preset, py::arg("name"));
  m.def("wilson", [](int errors, int trials) {
    const locinfo::ErrorEstimate e = locinfo::WilsonEstimate(errors, trials);
    return std::vector<double>{e.rate, e.lower, e.upper};
  });
  m.attr("git_describe") = locinfo::GitDescribe();
}
