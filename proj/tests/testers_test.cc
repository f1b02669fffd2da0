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
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "locinfo/channel.h"
#include "locinfo/random.h"

namespace locinfo {
namespace {

const Decision& AsDecision(const Outcome& o) { return std::get<Decision>(o); }

int CountWrong(const ProtocolStrategy& s, const Distribution& p, int n, int trials,
               bool truth_far) {
  int wrong = 0;
  for (int j = 0; j < trials; ++j) {
    const Outcome o = s.finalize(RunTranscript(s, p, n, 1000 + j));
    wrong += (AsDecision(o).verdict == Verdict::kFar) != truth_far;
  }
  return wrong;
}

// A relabeling of [2k] that maps pairs to pairs, optionally swapping
// inside a pair; `fix_zero` keeps symbol 0 in place.
std::vector<int> PairPermutation(int k, std::mt19937_64& gen, bool fix_zero) {
  std::vector<int> pairs(k);
  std::iota(pairs.begin(), pairs.end(), 0);
  std::shuffle(pairs.begin() + (fix_zero ? 1 : 0), pairs.end(), gen);
  std::vector<int> perm(2 * k);
  for (int i = 0; i < k; ++i) {
    const bool swap = (fix_zero && i == 0) ? false : (gen() & 1);
    perm[2 * i] = 2 * pairs[i] + (swap ? 1 : 0);
    perm[2 * i + 1] = 2 * pairs[i] + (swap ? 0 : 1);
  }
  return perm;
}

TEST(CollisionTesterTest, CountsAndThreshold) {
  const std::vector<int> samples = {0, 0, 0, 0, 1, 2};
  const Decision d = CentralizedCollisionTester(samples, 2, 0.25);
  EXPECT_EQ(d.statistics.at("collisions"), 6.0);
  EXPECT_EQ(d.statistics.at("m"), 6.0);
  EXPECT_DOUBLE_EQ(d.statistics.at("threshold"), 15.0 * (1 + 2 * 0.0625) / 4.0);
  EXPECT_EQ(d.verdict, Verdict::kFar);
  EXPECT_EQ(CentralizedCollisionTester(std::vector<int>{0, 1, 2, 3}, 2, 0.25).verdict,
            Verdict::kUniform);
  EXPECT_THROW(CentralizedCollisionTester(std::vector<int>{0}, 2, 0.25),
               std::invalid_argument);
  EXPECT_THROW(CentralizedCollisionTester(std::vector<int>{0, 4}, 2, 0.25),
               std::invalid_argument);
}

// E[T] = C(m,2) ||p||^2; under uniform that is C(m,2) / 2k and under p_z
// at perturbation a it is C(m,2) (1 + 16 a^2) / 2k.
TEST(CollisionTesterTest, MeanCollisionsMatchSquaredNorm) {
  const int k = 8, m = 40, trials = 4000;
  for (double a : {0.0, 0.1}) {
    const Distribution p =
        a == 0.0 ? UniformDist(k) : PaninskiDist(PerturbationSign::AllPlus(k, a));
    double sum = 0;
    for (int j = 0; j < trials; ++j) {
      sum += CentralizedCollisionTester(DrawSamples(p, m, j), k, 0.1)
                 .statistics.at("collisions");
    }
    const double expected = m * (m - 1) / 2.0 * (1 + 16 * a * a) / (2.0 * k);
    EXPECT_NEAR(sum / trials, expected, 0.05 * expected);
  }
}

TEST(ErasureSimulationTest, SurvivorsAreDrawsFromP) {
  const int k = 4;
  const double eta = TesterEta(k);
  const Distribution p({0.05, 0.2, 0.1, 0.15, 0.1, 0.1, 0.2, 0.1});
  const ProtocolStrategy s = ErasureSimulationTester(k, 0.3);
  std::vector<double> counts(2 * k, 0.0);
  double total = 0;
  for (int j = 0; j < 20; ++j) {
    for (int x : SurvivingSamples(RunTranscript(s, p, 5000, j), k, eta, true)) {
      ++counts[x];
      ++total;
    }
  }
  EXPECT_NEAR(total / (20 * 5000.0), eta, 0.01);
  for (int x = 0; x < 2 * k; ++x) {
    const double sd = std::sqrt(p[x] * (1 - p[x]) / total);
    EXPECT_NEAR(counts[x] / total, p[x], 5 * sd) << "symbol " << x;
  }
}

TEST(TesterTest, StatisticsKeysAreStable) {
  for (const ProtocolStrategy& s :
       {ErasureSimulationTester(16, 0.3), NoninteractiveLeakyTester(16, 0.3),
        InteractiveLeakyTester(16, 0.3, 300, TesterConstants::Proof())}) {
    std::set<std::string> keys;
    for (int n : {300}) {
      for (uint64_t seed = 0; seed < 5; ++seed) {
        const Decision d = AsDecision(s.finalize(RunTranscript(s, UniformDist(16), n, seed)));
        std::set<std::string> these;
        for (const auto& [key, v] : d.statistics) these.insert(key);
        if (keys.empty()) keys = these;
        EXPECT_EQ(keys, these) << s.name;
      }
    }
  }
  // Too few survivors still yields the same keys.
  const ProtocolStrategy ni = NoninteractiveLeakyTester(64, 0.3);
  const Decision tiny = AsDecision(ni.finalize(RunTranscript(ni, UniformDist(64), 1, 0)));
  EXPECT_EQ(tiny.statistics.at("insufficient_samples"), 1.0);
  EXPECT_EQ(tiny.verdict, Verdict::kUniform);
  EXPECT_TRUE(tiny.statistics.contains("users"));
}

TEST(TesterTest, LargeSamplesSeparate) {
  const int k = 16;
  const double eps = 0.3;
  const Distribution far = PaninskiDist(PerturbationSign::AllPlus(k, eps / 2));
  const ProtocolStrategy ni = NoninteractiveLeakyTester(k, eps);
  EXPECT_LE(CountWrong(ni, UniformDist(k), 6000, 60, false), 6);
  EXPECT_LE(CountWrong(ni, far, 6000, 60, true), 6);
  // Stage 1 is tuned for n near k^{3/4} / eps^2; far above that, uniform
  // leaks collide three times, so the count threshold is raised here.
  TesterConstants constants;
  constants.repeats = 5;
  constants.heavy_coeff = 220;
  const ProtocolStrategy in = InteractiveLeakyTester(k, eps, 30000, constants);
  EXPECT_LE(CountWrong(in, UniformDist(k), 30000, 40, false), 4);
  EXPECT_LE(CountWrong(in, far, 30000, 40, true), 4);
}

TEST(InteractiveTesterTest, RejectsBadArguments) {
  TesterConstants even;
  even.repeats = 4;
  EXPECT_THROW(InteractiveLeakyTester(16, 0.3, 2, TesterConstants::Proof()),
               std::invalid_argument);
  EXPECT_THROW(InteractiveLeakyTester(16, 0.3, 300, even), std::invalid_argument);
  EXPECT_THROW(InteractiveLeakyTester(0, 0.3, 300, TesterConstants::Proof()),
               std::invalid_argument);
  EXPECT_THROW(NoninteractiveLeakyTester(16, 0.0), std::invalid_argument);
}

TEST(InteractiveTesterTest, GroupCountShrinksToOddFeasible) {
  const ProtocolStrategy s = InteractiveLeakyTester(4, 0.3, 10, TesterConstants::Proof());
  const Decision d = AsDecision(s.finalize(RunTranscript(s, UniformDist(4), 10, 1)));
  EXPECT_EQ(d.statistics.at("groups"), 3.0);
  const ProtocolStrategy big = InteractiveLeakyTester(4, 0.3, 1000, TesterConstants::Proof());
  const Decision e = AsDecision(big.finalize(RunTranscript(big, UniformDist(4), 1000, 1)));
  EXPECT_EQ(e.statistics.at("groups"), 43.0);
  EXPECT_EQ(e.statistics.at("stage1_count_threshold"), 3.0);
}

TEST(InteractiveTesterTest, HeavySymbolTriggersStageOneExit) {
  TesterConstants constants;
  constants.repeats = 1;
  const int n = 300;
  const ProtocolStrategy s = InteractiveLeakyTester(4, 0.3, n, constants);
  const std::vector<int> samples(n, 0);
  const Decision d = AsDecision(s.finalize(RunTranscriptOnSamples(s, samples, 3)));
  EXPECT_EQ(d.verdict, Verdict::kFar);
  EXPECT_EQ(d.statistics.at("stage1_exits"), 1.0);
  EXPECT_GE(d.statistics.at("stage1_max_count"), 3.0);
}

TEST(InteractiveTesterTest, EmptyLeakSetVotesUniformAndFlags) {
  TesterConstants constants;
  constants.repeats = 1;
  // k = 4096 leaks w.p. 1/64; 6 stage-2 users leave S empty for most seeds.
  const ProtocolStrategy s = InteractiveLeakyTester(4096, 0.3, 18, constants);
  bool seen = false;
  for (uint64_t seed = 0; seed < 20 && !seen; ++seed) {
    const Decision d = AsDecision(s.finalize(RunTranscript(s, UniformDist(4096), 18, seed)));
    if (d.statistics.at("set_size") == 0.0 && d.statistics.at("stage1_exits") == 0.0) {
      seen = true;
      EXPECT_EQ(d.verdict, Verdict::kUniform);
      EXPECT_EQ(d.statistics.at("empty_set_groups"), 1.0);
      EXPECT_EQ(d.statistics.at("low_confidence"), 1.0);
    }
  }
  EXPECT_TRUE(seen);
}

// E_u[u(S)] = 1 - (1 - 1/2k)^N for N stage-2 leaks; check the recorded
// expectation against the recorded leak count.
TEST(InteractiveTesterTest, ExpectedUniformMassFormula) {
  TesterConstants constants;
  constants.repeats = 1;
  constants.heavy_coeff = 220;
  const int k = 64;
  const ProtocolStrategy s = InteractiveLeakyTester(k, 0.3, 3000, constants);
  const Decision d = AsDecision(s.finalize(RunTranscript(s, UniformDist(k), 3000, 8)));
  const double leaks = d.statistics.at("stage2_leaks");
  EXPECT_GT(leaks, 0.0);
  EXPECT_NEAR(d.statistics.at("expected_uniform_mass"),
              1 - std::pow(1 - 1.0 / (2 * k), leaks), 1e-12);
  EXPECT_LE(d.statistics.at("set_size"), leaks);
}

TEST(EquivarianceTest, PairRespectingRelabelingKeepsVerdicts) {
  const int k = 16;
  const int n = 2400;
  std::mt19937_64 gen(31);
  TesterConstants constants;
  constants.repeats = 3;
  const Distribution far = PaninskiDist(PerturbationSign::AllPlus(k, 0.15));
  struct Case {
    ProtocolStrategy strategy;
    bool fix_zero;
  };
  const Case cases[] = {
      {NoninteractiveLeakyTester(k, 0.3), false},
      {InteractiveLeakyTester(k, 0.3, n, constants), false},
      {ErasureSimulationTester(k, 0.3), true},
  };
  for (const Case& c : cases) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<int> perm = PairPermutation(k, gen, c.fix_zero);
      const auto samples = DrawSamples(trial % 2 ? far : UniformDist(k), n, trial);
      std::vector<int> relabeled(samples.size());
      for (size_t t = 0; t < samples.size(); ++t) relabeled[t] = perm[samples[t]];
      const Decision a =
          AsDecision(c.strategy.finalize(RunTranscriptOnSamples(c.strategy, samples, trial)));
      const Decision b = AsDecision(
          c.strategy.finalize(RunTranscriptOnSamples(c.strategy, relabeled, trial)));
      EXPECT_EQ(a.verdict, b.verdict) << c.strategy.name;
      EXPECT_EQ(a.statistics, b.statistics) << c.strategy.name;
    }
  }
}

TEST(LearnerTest, ConvergesInTotalVariation) {
  const int k = 8;
  const ProtocolStrategy s = ErasureHistogramLearner(k, TesterEta(k));
  const Distribution p = PaninskiDist(PerturbationSign({1, -1, 1, 1, -1, 1, -1, -1}, 0.2));
  const Transcript t = RunTranscript(s, p, 200000, 5);
  const Distribution est = std::get<Distribution>(s.finalize(t));
  EXPECT_LT(TotalVariation(est, p), 0.02);
  const Distribution empty = std::get<Distribution>(
      s.finalize(RunTranscriptOnSamples(s, std::vector<int>{}, 1)));
  EXPECT_EQ(empty, UniformDist(k));
}

TEST(HammingDecodeTest, ExactTiesAndTriangle) {
  const PerturbationSign z({1, -1, -1, 1}, 0.1);
  EXPECT_EQ(DecodeToHamming(PaninskiDist(z), z).distance, 0);
  const HammingDecode tie = DecodeToHamming(UniformDist(4), z);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(tie.z_hat[i], 1);
  EXPECT_EQ(tie.distance, 2);

  std::mt19937_64 gen(2);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> probs(8);
    double total = 0;
    for (double& v : probs) total += (v = gamma(gen));
    for (double& v : probs) v /= total;
    const Distribution est(probs);
    const HammingDecode h = DecodeToHamming(est, z);
    EXPECT_LE(TotalVariation(PaninskiDist(h.z_hat), PaninskiDist(z)),
              2 * TotalVariation(est, PaninskiDist(z)) + 1e-12);
  }
}

TEST(ConstantsTest, DefaultPresetAndSizing) {
  const TesterConstants c = TesterConstants::Proof();
  EXPECT_EQ(c.preset, "proof");
  EXPECT_EQ(c.Stage1CountThreshold(), 3);
  EXPECT_EQ(c.c, 4840.0);
  EXPECT_EQ(c.repeats, 43);
  EXPECT_FALSE(c.c_ni.has_value());
  EXPECT_THROW(c.NoninteractiveUsers(16, 0.3), std::logic_error);
  EXPECT_EQ(c.InteractiveUsers(16, 0.5), static_cast<int>(std::ceil(4840.0 * 8 / 0.25)));
  TesterConstants heavy;
  heavy.heavy_coeff = 44;
  EXPECT_EQ(heavy.Stage1CountThreshold(), 6);
  heavy.heavy_coeff = 1;
  EXPECT_EQ(heavy.Stage1CountThreshold(), 2);
}

}  // namespace
}  // namespace locinfo
