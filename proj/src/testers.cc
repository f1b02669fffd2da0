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

#include "locinfo/testers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace locinfo {
namespace {

std::vector<double> EvenIndicator(int k) {
  std::vector<double> u(2 * k, 0.0);
  for (int i = 0; i < k; ++i) u[2 * i] = 1.0;
  return u;
}

void CheckTesterArgs(int k, double eps) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
}

Decision CollisionDecision(std::span<const int> survivors, int k, double eps,
                           int users) {
  Decision decision;
  if (survivors.size() >= 2) {
    decision = CentralizedCollisionTester(survivors, k, eps);
    decision.statistics["insufficient_samples"] = 0.0;
  } else {
    decision.verdict = Verdict::kUniform;
    decision.statistics = {{"collisions", 0.0},
                           {"m", static_cast<double>(survivors.size())},
                           {"threshold", 0.0},
                           {"insufficient_samples", 1.0}};
  }
  decision.statistics["users"] = users;
  return decision;
}

// Layout of users into groups and stages for the interactive tester.
struct GroupLayout {
  int groups;
  int group_size;
  int stage_size;

  GroupLayout(int n, int repeats) {
    groups = std::max(1, repeats);
    if (groups % 2 == 0) --groups;
    while (groups > 1 && n / groups < 3) groups -= 2;
    group_size = n / groups;
    stage_size = group_size / 3;
  }
  int Begin(int g, int stage) const { return g * group_size + stage * stage_size; }
};

struct GroupResult {
  bool stage1_exit = false;
  int stage1_max_count = 0;
  int leaks = 0;
  std::vector<int> set;
};

// Stage 1 and stage 2 summary of group g from the messages of users before
// the group's third stage.
GroupResult SummarizeGroup(std::span<const Message> messages,
                           const GroupLayout& layout, int g, int k,
                           int count_threshold) {
  GroupResult result;
  std::unordered_map<int, int> counts;
  for (int t = layout.Begin(g, 0); t < layout.Begin(g, 1); ++t) {
    const int y = messages[t].label;
    if (y < 2 * k) result.stage1_max_count = std::max(result.stage1_max_count, ++counts[y]);
  }
  result.stage1_exit = result.stage1_max_count >= count_threshold;
  for (int t = layout.Begin(g, 1); t < layout.Begin(g, 2); ++t) {
    const int y = messages[t].label;
    if (y < 2 * k) {
      ++result.leaks;
      result.set.push_back(y);
    }
  }
  std::sort(result.set.begin(), result.set.end());
  result.set.erase(std::unique(result.set.begin(), result.set.end()),
                   result.set.end());
  return result;
}

class InteractiveLeakySelector : public ChannelSelector {
 public:
  InteractiveLeakySelector(int k, double eta, GroupLayout layout,
                           int count_threshold, ChannelPtr erasure)
      : k_(k),
        eta_(eta),
        layout_(layout),
        count_threshold_(count_threshold),
        erasure_(std::move(erasure)) {}

  ChannelPtr Select(uint64_t, int user, std::span<const Message> prefix) override {
    const int g = user / std::max(1, layout_.group_size);
    if (g >= layout_.groups || layout_.stage_size == 0) return erasure_;
    const int offset = user - g * layout_.group_size;
    if (offset < 2 * layout_.stage_size || offset >= 3 * layout_.stage_size) {
      return erasure_;
    }
    if (cached_group_ != g) {
      GroupResult summary = SummarizeGroup(prefix, layout_, g, k_, count_threshold_);
      cached_group_ = g;
      cached_ = summary.stage1_exit
                    ? erasure_
                    : std::make_shared<const Channel>(
                          LeakyMembershipQuery(k_, eta_, summary.set));
    }
    return cached_;
  }

 private:
  int k_;
  double eta_;
  GroupLayout layout_;
  int count_threshold_;
  ChannelPtr erasure_;
  int cached_group_ = -1;
  ChannelPtr cached_;
};

}  // namespace

TesterConstants TesterConstants::Proof() { return TesterConstants{}; }

int TesterConstants::Stage1CountThreshold() const {
  return std::max(2, static_cast<int>(std::ceil(3.0 * heavy_coeff / 22.0 - 1e-12)));
}

int TesterConstants::InteractiveUsers(int k, double eps) const {
  return static_cast<int>(std::ceil(c * std::pow(k, 0.75) / (eps * eps)));
}

int TesterConstants::NoninteractiveUsers(int k, double eps) const {
  if (!c_ni) throw std::logic_error("preset has no noninteractive constant");
  return static_cast<int>(std::ceil(*c_ni * k / (eps * eps)));
}

double TesterEta(int k) { return 1.0 / std::sqrt(static_cast<double>(k)); }

Decision CentralizedCollisionTester(std::span<const int> samples, int k,
                                    double eps) {
  if (samples.size() < 2) {
    throw std::invalid_argument("collision tester needs at least two samples");
  }
  std::vector<int> counts(2 * k, 0);
  for (int x : samples) {
    if (x < 0 || x >= 2 * k) throw std::invalid_argument("sample outside domain");
    ++counts[x];
  }
  double collisions = 0.0;
  for (int c : counts) collisions += 0.5 * c * (c - 1.0);
  const double m = static_cast<double>(samples.size());
  const double pairs = 0.5 * m * (m - 1.0);
  const double threshold = pairs * (1.0 + 2.0 * eps * eps) / (2.0 * k);
  Decision decision;
  decision.verdict = collisions > threshold ? Verdict::kFar : Verdict::kUniform;
  decision.statistics = {
      {"collisions", collisions}, {"m", m}, {"threshold", threshold}};
  return decision;
}

std::vector<int> SurvivingSamples(const Transcript& transcript, int k,
                                  double eta, bool thin_symbol_zero) {
  std::vector<int> survivors;
  for (const Message& msg : transcript.messages) {
    if (msg.label >= 2 * k) continue;
    if (thin_symbol_zero && msg.label == 0) {
      RandomStream rng(transcript.public_seed, StreamId::kServer, msg.user);
      if (rng.Uniform() >= eta) continue;
    }
    survivors.push_back(msg.label);
  }
  return survivors;
}

ProtocolStrategy ErasureSimulationTester(int k, double eps) {
  CheckTesterArgs(k, eps);
  const double eta = TesterEta(k);
  auto channel = std::make_shared<const Channel>(PartialErasure(k, eta, 0));
  ProtocolStrategy strategy;
  strategy.name = "erasure_sim";
  strategy.k = k;
  strategy.mode = ProtocolMode::kPrivateCoin;
  strategy.new_selector = [channel] {
    return MakeSelector([channel](uint64_t, int, std::span<const Message>) {
      return channel;
    });
  };
  strategy.finalize = [k, eps, eta](const Transcript& transcript) -> Outcome {
    return CollisionDecision(SurvivingSamples(transcript, k, eta, true), k, eps,
                             transcript.n);
  };
  return strategy;
}

ProtocolStrategy NoninteractiveLeakyTester(int k, double eps) {
  CheckTesterArgs(k, eps);
  const double eta = TesterEta(k);
  auto channel = std::make_shared<const Channel>(LeakyQuery(k, eta, EvenIndicator(k)));
  ProtocolStrategy strategy;
  strategy.name = "noninteractive_leaky";
  strategy.k = k;
  strategy.mode = ProtocolMode::kPrivateCoin;
  strategy.new_selector = [channel] {
    return MakeSelector([channel](uint64_t, int, std::span<const Message>) {
      return channel;
    });
  };
  strategy.finalize = [k, eps, eta](const Transcript& transcript) -> Outcome {
    return CollisionDecision(SurvivingSamples(transcript, k, eta, false), k, eps,
                             transcript.n);
  };
  return strategy;
}

ProtocolStrategy InteractiveLeakyTester(int k, double eps, int n,
                                        const TesterConstants& constants) {
  CheckTesterArgs(k, eps);
  if (n < 3) throw std::invalid_argument("interactive tester needs n >= 3");
  if (constants.repeats < 1 || constants.repeats % 2 == 0) {
    throw std::invalid_argument("repeats must be a positive odd count");
  }
  const double eta = TesterEta(k);
  const GroupLayout layout(n, constants.repeats);
  const int count_threshold = constants.Stage1CountThreshold();
  const double ratio = 1.0 + constants.threshold_margin * eps * eps;
  auto erasure = std::make_shared<const Channel>(
      LeakyQuery(k, eta, std::vector<double>(2 * k, 0.0)));

  ProtocolStrategy strategy;
  strategy.name = "interactive_leaky";
  strategy.k = k;
  strategy.mode = ProtocolMode::kInteractive;
  strategy.new_selector = [=] {
    return std::make_unique<InteractiveLeakySelector>(k, eta, layout,
                                                      count_threshold, erasure);
  };
  strategy.finalize = [=](const Transcript& transcript) -> Outcome {
    if (transcript.n != n) {
      throw std::invalid_argument("transcript length does not match the tester");
    }
    const int one_label = 2 * k;
    int votes_far = 0, exits = 0, empty = 0, max_count = 0;
    double leaks = 0, set_size = 0, set_mass = 0, expected_mass = 0;
    double stage3_users = 0, stage3_ones = 0, estimate_sum = 0;
    for (int g = 0; g < layout.groups; ++g) {
      GroupResult summary = SummarizeGroup(transcript.messages, layout, g, k,
                                           count_threshold);
      max_count = std::max(max_count, summary.stage1_max_count);
      if (summary.stage1_exit) {
        ++exits;
        ++votes_far;
        continue;
      }
      const double expected =
          -std::expm1(summary.leaks * std::log1p(-1.0 / (2.0 * k)));
      leaks += summary.leaks;
      set_size += static_cast<double>(summary.set.size());
      set_mass += summary.set.size() / (2.0 * k);
      expected_mass += expected;
      int ones = 0;
      for (int t = layout.Begin(g, 2); t < layout.Begin(g, 3); ++t) {
        ones += transcript.messages[t].label == one_label;
      }
      stage3_users += layout.stage_size;
      stage3_ones += ones;
      if (summary.set.empty()) {
        // No leaks means nothing to query; vote uniform and flag it.
        ++empty;
        continue;
      }
      const double estimate = ones / (layout.stage_size * (1.0 - eta));
      estimate_sum += estimate;
      if (estimate > ratio * expected) ++votes_far;
    }
    Decision decision;
    decision.verdict = 2 * votes_far > layout.groups ? Verdict::kFar : Verdict::kUniform;
    decision.statistics = {
        {"groups", static_cast<double>(layout.groups)},
        {"votes_far", static_cast<double>(votes_far)},
        {"stage1_exits", static_cast<double>(exits)},
        {"stage1_max_count", static_cast<double>(max_count)},
        {"stage1_count_threshold", static_cast<double>(count_threshold)},
        {"stage2_leaks", leaks},
        {"set_size", set_size},
        {"set_uniform_mass", set_mass},
        {"expected_uniform_mass", expected_mass},
        {"stage3_users", stage3_users},
        {"stage3_ones", stage3_ones},
        {"estimate_sum", estimate_sum},
        {"threshold_ratio", ratio},
        {"empty_set_groups", static_cast<double>(empty)},
        {"low_confidence", empty > 0 ? 1.0 : 0.0},
    };
    return decision;
  };
  return strategy;
}

ProtocolStrategy ErasureHistogramLearner(int k, double eta) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto channel = std::make_shared<const Channel>(PartialErasure(k, eta, 0));
  ProtocolStrategy strategy;
  strategy.name = "erasure_learner";
  strategy.k = k;
  strategy.mode = ProtocolMode::kPrivateCoin;
  strategy.new_selector = [channel] {
    return MakeSelector([channel](uint64_t, int, std::span<const Message>) {
      return channel;
    });
  };
  strategy.finalize = [k, eta](const Transcript& transcript) -> Outcome {
    std::vector<int> survivors = SurvivingSamples(transcript, k, eta, true);
    if (survivors.empty()) return UniformDist(k);
    std::vector<double> probs(2 * k, 0.0);
    for (int x : survivors) probs[x] += 1.0;
    for (double& v : probs) v /= static_cast<double>(survivors.size());
    // Keep the total within the constructor's tolerance despite rounding.
    double total = 0.0;
    for (double v : probs) total += v;
    for (double& v : probs) v /= total;
    return Distribution(std::move(probs));
  };
  return strategy;
}

HammingDecode DecodeToHamming(const Distribution& estimate,
                              const PerturbationSign& sign) {
  if (estimate.k() != sign.k()) throw std::invalid_argument("domain mismatch");
  std::vector<int> z_hat(sign.k());
  for (int i = 0; i < sign.k(); ++i) {
    z_hat[i] = estimate[2 * i] >= estimate[2 * i + 1] ? 1 : -1;
  }
  PerturbationSign decoded(std::move(z_hat), sign.eps());
  const int distance = HammingDistance(decoded.z(), sign.z());
  return {std::move(decoded), distance};
}

}  // namespace locinfo
