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

#ifndef LOCINFO_SUITES_H_
#define LOCINFO_SUITES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locinfo/channel.h"
#include "locinfo/exact_oracle.h"

namespace locinfo {

// Dirichlet(1) rows over labels "y0".."y{num_labels-1}", seeded from
// DeriveKey(seed, kStrategy, 0).
Channel RandomChannel(int k, int num_labels, uint64_t seed);

// Random instances for the verification suites. Case j draws from
// DeriveKey(seed, kStrategy, j), so a case can be replayed alone.
struct StrategyCase {
  EnumerableStrategy strategy;
  double eps;
};
// k = 2, |Y| in {2, 3}, depth in {1, 2, 3}; eps cycles through
// 0.05, 0.1, 0.25.
StrategyCase RandomStrategyCase(uint64_t seed, int index);

inline constexpr std::string_view kSuiteNames[] = {
    "avg-info", "per-round", "info-loss-hamming", "info-loss-mse",
    "lecam",    "gershgorin", "holder",          "closed-form"};

// Runs `cases` random instances of the named suite and returns every
// report. avg-info and per-round emit one report per round; the
// information-loss suites emit per-coordinate and averaged reports.
// Throws std::invalid_argument for an unknown suite.
std::vector<VerificationReport> RunSuite(std::string_view suite, int cases,
                                         uint64_t seed);

struct SuiteSummary {
  std::string suite;
  int cases = 0;
  int checks = 0;
  int violations = 0;
  double min_slack = 0.0;
  double median_slack = 0.0;
  double max_slack = 0.0;
};

SuiteSummary Summarize(std::string_view suite, int cases,
                       std::span<const VerificationReport> reports);

}  // namespace locinfo

#endif  // LOCINFO_SUITES_H_
