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

#ifndef LOCINFO_TESTERS_H_
#define LOCINFO_TESTERS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locinfo/distribution.h"
#include "locinfo/protocol.h"

namespace locinfo {

// Constants of the three-stage interactive tester and of the sizing rules
// n = c * k^{3/4} / eps^2 (interactive) and n = c_ni * k / eps^2
// (noninteractive).
struct TesterConstants {
  std::string preset = "proof";
  // Stage-1 heaviness coefficient: the tester exits when some leaked symbol
  // shows up Stage1CountThreshold() times.
  double heavy_coeff = 22.0;
  double c = 4840.0;
  // Odd number of independent groups combined by majority vote.
  int repeats = 43;
  // Stage 3 rejects when the estimate of p(S) exceeds
  // (1 + threshold_margin * eps^2) * E_u[u(S)].
  double threshold_margin = 0.75;
  // Unset for the proof preset, whose analysis fixes only the k / eps^2 rate.
  std::optional<double> c_ni;
  bool calibrated = false;
  // Calibration provenance (zero for the proof preset).
  uint64_t calibration_seed = 0;
  double calibration_eps = 0.0;
  std::vector<int> calibration_ks;
  double safety_factor = 1.0;

  // The constants of the worst-case analysis: c = 4840, 43 groups,
  // heavy_coeff 22 and threshold margin 3/4.
  static TesterConstants Proof();

  // ceil(3 * heavy_coeff / 22), at least 2; equals 3 for heavy_coeff = 22.
  int Stage1CountThreshold() const;
  // ceil(c * k^{3/4} / eps^2).
  int InteractiveUsers(int k, double eps) const;
  // ceil(c_ni * k / eps^2); throws std::logic_error if c_ni is unset.
  int NoninteractiveUsers(int k, double eps) const;
};

inline constexpr int kConstantsVersion = 1;

// eta = 1 / sqrt(k), the leak probability used by every tester here.
double TesterEta(int k);

// Counts pairwise collisions T among the samples and declares "far" iff
// T > C(m,2) (1 + 2 eps^2) / 2k, the midpoint between the uniform mean and
// the lower bound C(m,2) (1 + 4 eps^2) / 2k on the mean when TV >= eps.
// Throws std::invalid_argument for fewer than two samples.
Decision CentralizedCollisionTester(std::span<const int> samples, int k,
                                    double eps);

// Private-coin tester for partial-erasure constraints. Every user applies
// the channel that passes symbol 0 exactly; the server thins messages equal
// to 0 with probability 1 - eta, which leaves i.i.d. draws from p, and runs
// the collision tester on them.
ProtocolStrategy ErasureSimulationTester(int k, double eps);

// Private-coin tester for leaky-query constraints: a fixed query (the
// indicator of the even symbols) whose binary answers are discarded.
ProtocolStrategy NoninteractiveLeakyTester(int k, double eps);

// Three-stage sequentially interactive tester for leaky-query constraints.
// Users are split into `repeats` groups (reduced to the largest odd count
// that leaves three users per group) and each group runs
//   stage 1: pure-erasure channel; exit "far" on a heavy symbol,
//   stage 2: pure-erasure channel; collect the leaked set S,
//   stage 3: membership query for S; compare the 1* rate with E_u[u(S)].
// Throws std::invalid_argument for n < 3.
ProtocolStrategy InteractiveLeakyTester(int k, double eps, int n,
                                        const TesterConstants& constants);

// Learner: the thinned partial-erasure channel for every user and the
// empirical distribution of the survivors (uniform when none survive).
ProtocolStrategy ErasureHistogramLearner(int k, double eta);

// Labels < 2k of the transcript after thinning symbol 0 with probability
// 1 - eta on the server substream (when `thin_symbol_zero`).
std::vector<int> SurvivingSamples(const Transcript& transcript, int k,
                                  double eta, bool thin_symbol_zero);

struct HammingDecode {
  PerturbationSign z_hat;
  int distance;
};

// z_hat_i = sign(estimate(2i) - estimate(2i+1)), ties to +1; this is the
// TV-closest member of the perturbation family.
HammingDecode DecodeToHamming(const Distribution& estimate,
                              const PerturbationSign& sign);

}  // namespace locinfo

#endif  // LOCINFO_TESTERS_H_
