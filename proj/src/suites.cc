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

#include "locinfo/suites.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "locinfo/random.h"

namespace locinfo {
namespace {

std::mt19937_64 CaseEngine(uint64_t seed, int index) {
  return std::mt19937_64(DeriveKey(seed, StreamId::kStrategy, index));
}

int UniformInt(std::mt19937_64& gen, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

std::string Tag(std::string_view suite, int index) {
  return std::string(suite) + " case=" + std::to_string(index);
}

void GershgorinCase(uint64_t seed, int index, std::vector<VerificationReport>& out) {
  auto gen = CaseEngine(seed, index);
  const int k = std::array{2, 4, 8}[UniformInt(gen, 0, 2)];
  const int labels = UniformInt(gen, 2, 3 * k);
  const Channel channel = RandomChannel(k, labels, gen());
  const FamilyNorms norms = ComputeNorms(ComputeInfoMatrix(channel));
  out.push_back(VerificationReport::Make(
      Tag("gershgorin", index) + " k=" + std::to_string(k) +
          " labels=" + std::to_string(labels),
      norms.op, 2.0));
}

void HolderCase(uint64_t seed, int index, std::vector<VerificationReport>& out) {
  auto gen = CaseEngine(seed, index);
  const int k = std::array{2, 4, 8}[UniformInt(gen, 0, 2)];
  const int labels = UniformInt(gen, 2, 3 * k);
  const FamilyNorms n =
      ComputeNorms(ComputeInfoMatrix(RandomChannel(k, labels, gen())));
  const std::string tag = Tag("holder", index) + " k=" + std::to_string(k);
  const double rk = std::sqrt(static_cast<double>(k));
  out.push_back(VerificationReport::Make(tag + " op<=frob", n.op, n.frobenius));
  out.push_back(VerificationReport::Make(tag + " frob<=nuc", n.frobenius, n.nuclear));
  out.push_back(VerificationReport::Make(tag + " nuc<=sqrt(k)frob", n.nuclear,
                                         rk * n.frobenius));
  out.push_back(VerificationReport::Make(tag + " sqrt(k)frob<=k op", rk * n.frobenius,
                                         k * n.op));
}

void ClosedFormCase(uint64_t seed, int index, std::vector<VerificationReport>& out) {
  auto gen = CaseEngine(seed, index);
  const int k = std::array{4, 16, 64}[UniformInt(gen, 0, 2)];
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double eta = unit(gen);
  std::vector<double> u(2 * k);
  for (double& v : u) v = unit(gen);
  const InfoMatrix generic = ComputeInfoMatrix(LeakyQuery(k, eta, u));
  const InfoMatrix closed = LeakyQueryInfoClosedForm(k, eta, u);
  const double diff = (generic.entries() - closed.entries()).cwiseAbs().maxCoeff();
  out.push_back(VerificationReport::Make(
      Tag("closed-form", index) + " k=" + std::to_string(k), diff, 0.0));
}

}  // namespace

Channel RandomChannel(int k, int num_labels, uint64_t seed) {
  if (k < 1 || num_labels < 1) throw std::invalid_argument("need k, labels >= 1");
  std::mt19937_64 gen(DeriveKey(seed, StreamId::kStrategy, 0));
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<std::string> labels;
  for (int y = 0; y < num_labels; ++y) labels.push_back("y" + std::to_string(y));
  std::vector<std::vector<double>> rows(2 * k, std::vector<double>(num_labels));
  for (auto& row : rows) {
    double total = 0.0;
    for (double& v : row) total += (v = gamma(gen));
    for (double& v : row) v /= total;
  }
  return Channel::FromRows(k, std::make_shared<const Alphabet>(std::move(labels)),
                           rows);
}

StrategyCase RandomStrategyCase(uint64_t seed, int index) {
  auto gen = CaseEngine(seed, index);
  const int labels = UniformInt(gen, 2, 3);
  const int depth = UniformInt(gen, 1, 3);
  constexpr double kEps[] = {0.05, 0.1, 0.25};
  return {RandomEnumerableStrategy(2, labels, depth, gen()), kEps[index % 3]};
}

std::vector<VerificationReport> RunSuite(std::string_view suite, int cases,
                                         uint64_t seed) {
  if (cases < 0) throw std::invalid_argument("cases must be nonnegative");
  std::vector<VerificationReport> out;
  for (int j = 0; j < cases; ++j) {
    if (suite == "avg-info") {
      const StrategyCase c = RandomStrategyCase(seed, j);
      for (int t = 1; t <= c.strategy.depth(); ++t) {
        out.push_back(CheckAvgInfoBound(c.strategy, c.eps, t));
      }
    } else if (suite == "per-round") {
      const StrategyCase c = RandomStrategyCase(seed, j);
      for (int t = 0; t < c.strategy.depth(); ++t) {
        out.push_back(CheckPerRoundBound(c.strategy, c.eps, t));
      }
    } else if (suite == "lecam") {
      const StrategyCase c = RandomStrategyCase(seed, j);
      out.push_back(LeCamKlCheck(c.strategy, c.eps, c.strategy.depth()));
    } else if (suite == "info-loss-hamming" || suite == "info-loss-mse") {
      auto gen = CaseEngine(seed, j);
      const int k = UniformInt(gen, 1, 3);
      const int num_y = UniformInt(gen, 2, 4);
      const FiniteJoint joint = RandomFiniteJoint(k, num_y, gen());
      auto reports = suite == "info-loss-hamming" ? CheckHammingInfoLoss(joint)
                                                  : CheckMseInfoLoss(joint);
      out.insert(out.end(), reports.begin(), reports.end());
    } else if (suite == "gershgorin") {
      GershgorinCase(seed, j, out);
    } else if (suite == "holder") {
      HolderCase(seed, j, out);
    } else if (suite == "closed-form") {
      ClosedFormCase(seed, j, out);
    } else {
      throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
  }
  return out;
}

SuiteSummary Summarize(std::string_view suite, int cases,
                       std::span<const VerificationReport> reports) {
  SuiteSummary s;
  s.suite = suite;
  s.cases = cases;
  s.checks = static_cast<int>(reports.size());
  if (reports.empty()) return s;
  std::vector<double> slacks;
  for (const VerificationReport& r : reports) {
    s.violations += r.holds ? 0 : 1;
    slacks.push_back(r.slack);
  }
  std::sort(slacks.begin(), slacks.end());
  s.min_slack = slacks.front();
  s.max_slack = slacks.back();
  const size_t m = slacks.size();
  s.median_slack = m % 2 ? slacks[m / 2] : 0.5 * (slacks[m / 2 - 1] + slacks[m / 2]);
  return s;
}

}  // namespace locinfo
