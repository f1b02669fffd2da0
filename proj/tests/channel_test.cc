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

#include "locinfo/channel.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "locinfo/suites.h"

namespace locinfo {
namespace {

// Straight triple loop over dense rows, kept separate from the sparse
// production path.
Eigen::MatrixXd BruteInfoMatrix(const Channel& ch) {
  const auto rows = ch.DenseRows();
  const int k = ch.k();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
  for (int y = 0; y < ch.num_labels(); ++y) {
    double col = 0;
    for (int x = 0; x < 2 * k; ++x) col += rows[x][y];
    if (col == 0) continue;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        h(a, b) += (rows[2 * a][y] - rows[2 * a + 1][y]) *
                   (rows[2 * b][y] - rows[2 * b + 1][y]) / col;
      }
    }
  }
  return h;
}

std::vector<double> RandomQuery(int k, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> u(2 * k);
  for (double& v : u) v = unit(gen);
  return u;
}

TEST(ChannelTest, RejectsMalformedRows) {
  auto two = std::make_shared<const Alphabet>(std::vector<std::string>{"a", "b"});
  EXPECT_THROW(Channel::FromRows(1, two, {{1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(Channel::FromRows(1, two, {{1.0, 0.0}, {0.6, 0.6}}),
               std::invalid_argument);
  EXPECT_THROW(Channel::FromRows(1, two, {{1.0, 0.0}, {1.5, -0.5}}),
               std::invalid_argument);
  EXPECT_THROW(Channel::FromRows(1, two, {{1.0}, {1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(Channel::FromRows(1, two, {{1.0, 0.0}, {0.3, 0.7}}));
  EXPECT_THROW(Alphabet({"a", "a"}), std::invalid_argument);
}

TEST(ChannelTest, OutputDistAndSampling) {
  const Channel ch = RandomChannel(2, 3, 5);
  const Distribution u = UniformDist(2);
  const std::vector<double> q = ch.OutputDist(u);
  EXPECT_NEAR(std::accumulate(q.begin(), q.end(), 0.0), 1.0, 1e-12);

  RandomStream rng(1, StreamId::kChannel, 0);
  std::vector<int> counts(3, 0);
  constexpr int kDraws = 100000;
  for (int t = 0; t < kDraws; ++t) ++counts[ch.Apply(1, rng)];
  for (int y = 0; y < 3; ++y) {
    const double p = ch.Prob(1, y);
    EXPECT_NEAR(counts[y] / double{kDraws}, p, 5 * std::sqrt(p * (1 - p) / kDraws));
  }
}

TEST(InfoMatrixTest, IdentityIsTwiceIdentity) {
  for (int k : {1, 3, 8}) {
    const InfoMatrix h = ComputeInfoMatrix(IdentityChannel(k));
    EXPECT_TRUE(h.entries().isApprox(2.0 * Eigen::MatrixXd::Identity(k, k)));
    const FamilyNorms n = ComputeNorms(h);
    EXPECT_NEAR(n.op, 2.0, 1e-12);
    EXPECT_NEAR(n.nuclear, 2.0 * k, 1e-12);
    EXPECT_NEAR(n.frobenius, 2.0 * std::sqrt(k), 1e-12);
  }
}

TEST(InfoMatrixTest, ConstantChannelCarriesNothing) {
  const FamilyNorms n = ComputeNorms(ComputeInfoMatrix(ConstantChannel(5)));
  EXPECT_EQ(n.op, 0.0);
  EXPECT_EQ(n.nuclear, 0.0);
  EXPECT_EQ(n.frobenius, 0.0);
}

// Only labels 2i and 2i+1 separate pair i, each contributing
// (e^rho - 1)^2 / D^2 with D = e^rho + 2k - 1.
TEST(InfoMatrixTest, RandomizedResponseDiagonal) {
  for (int k : {2, 5}) {
    for (double rho : {0.1, 1.0, 3.0}) {
      const InfoMatrix h = ComputeInfoMatrix(RandomizedResponse(k, rho));
      const double d = std::exp(rho) + 2 * k - 1;
      const double diag = 2 * std::pow(std::expm1(rho), 2) / (d * d);
      EXPECT_TRUE(h.entries().isApprox(diag * Eigen::MatrixXd::Identity(k, k), 1e-12));
    }
  }
}

TEST(InfoMatrixTest, MatchesBruteForceOnRandomChannels) {
  for (int seed = 0; seed < 50; ++seed) {
    const int k = 1 + seed % 5;
    const Channel ch = RandomChannel(k, 1 + seed % 7, seed);
    EXPECT_LT((ComputeInfoMatrix(ch).entries() - BruteInfoMatrix(ch)).cwiseAbs().maxCoeff(),
              1e-13);
  }
}

TEST(InfoMatrixTest, ZeroColumnsContributeNothing) {
  auto labels = std::make_shared<const Alphabet>(std::vector<std::string>{"a", "b", "z"});
  const Channel ch = Channel::FromRows(1, labels, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
  EXPECT_NEAR(ComputeInfoMatrix(ch)(0, 0), 2.0, 1e-15);
}

// Relabeling pairs permutes H; swapping inside a pair flips the signs of
// that row and column. Norms are unchanged either way.
TEST(InfoMatrixTest, PairRespectingPermutations) {
  const Channel ch = RandomChannel(3, 4, 17);
  const Eigen::MatrixXd h = ComputeInfoMatrix(ch).entries();
  const std::vector<int> perm = {4, 5, 0, 1, 3, 2};
  const Eigen::MatrixXd hp = ComputeInfoMatrix(ch, perm).entries();
  EXPECT_NEAR(hp(0, 0), h(2, 2), 1e-14);
  EXPECT_NEAR(hp(1, 1), h(0, 0), 1e-14);
  EXPECT_NEAR(hp(0, 1), h(2, 0), 1e-14);
  EXPECT_NEAR(hp(2, 0), -h(1, 2), 1e-14);
  const FamilyNorms a = ComputeNorms(InfoMatrix(h));
  const FamilyNorms b = ComputeNorms(InfoMatrix(hp));
  EXPECT_NEAR(a.op, b.op, 1e-12);
  EXPECT_NEAR(a.nuclear, b.nuclear, 1e-12);
  EXPECT_NEAR(a.frobenius, b.frobenius, 1e-12);
}

TEST(InfoMatrixTest, GershgorinAndHolderOnRandomChannels) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = std::array{2, 4, 8}[gen() % 3];
    const int labels = 2 + static_cast<int>(gen() % (3 * k - 1));
    const FamilyNorms n = ComputeNorms(ComputeInfoMatrix(RandomChannel(k, labels, gen())));
    EXPECT_LE(n.op, 2.0 + 1e-9);
    EXPECT_TRUE(n.SatisfiesHolderChain());
    EXPECT_LE(n.nuclear, std::sqrt(k) * n.frobenius + 1e-9);
    EXPECT_LE(n.frobenius, std::sqrt(k) * n.op + 1e-9);
  }
}

TEST(InfoMatrixTest, RejectsAsymmetricOrIndefinite) {
  Eigen::MatrixXd a(2, 2);
  a << 1, 0.5, 0.4, 1;
  EXPECT_THROW(InfoMatrix{a}, std::invalid_argument);
  Eigen::MatrixXd b(2, 2);
  b << 1, 2, 2, 1;
  EXPECT_THROW(InfoMatrix{b}, std::invalid_argument);
}

TEST(PartialErasureTest, DiagonalByDirectEvaluation) {
  for (int k : {2, 4, 16}) {
    for (double eta : {0.1, 0.5, 0.9}) {
      for (int x_star : {0, 3, 2 * k - 1}) {
        const InfoMatrix h = ComputeInfoMatrix(PartialErasure(k, eta, x_star));
        for (int i = 0; i < k; ++i) {
          const double expected =
              i == x_star / 2 ? 1 + eta + (1 - eta) / (2 * k - 1) : 2 * eta;
          EXPECT_NEAR(h(i, i), expected, 1e-12);
          for (int j = 0; j < k; ++j) {
            if (j != i) EXPECT_NEAR(h(i, j), 0.0, 1e-15);
          }
        }
      }
    }
  }
}

TEST(PartialErasureTest, NormsAtInverseSqrtEta) {
  for (int k : {4, 16, 64, 256}) {
    const double eta = 1 / std::sqrt(k);
    const FamilyNorms n = ComputeNorms(ComputeInfoMatrix(PartialErasure(k, eta, 0)));
    EXPECT_GE(n.frobenius, 2.0 - 1e-9);
    EXPECT_LE(n.frobenius, 2 * std::sqrt(2.0) + 1e-9);
    EXPECT_GE(n.nuclear, 2 * std::sqrt(k) - 1e-9);
    EXPECT_LE(n.nuclear, 2 * std::sqrt(k) + 2 + 1e-9);
    EXPECT_GE(n.op, 1.0 - 1e-9);
    EXPECT_LE(n.op, 2.0 + 1e-9);
  }
}

TEST(PartialErasureTest, RejectsBadArguments) {
  EXPECT_THROW(PartialErasure(4, 0.0, 0), std::invalid_argument);
  EXPECT_THROW(PartialErasure(4, 1.5, 0), std::invalid_argument);
  EXPECT_THROW(PartialErasure(4, 0.5, 8), std::invalid_argument);
  EXPECT_THROW(PartialErasure(4, 0.5, -1), std::invalid_argument);
}

TEST(LeakyQueryTest, ClosedFormMatchesGeneric) {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = std::array{4, 16, 64}[trial % 3];
    const double eta = unit(gen);
    const auto u = RandomQuery(k, gen);
    const Eigen::MatrixXd generic = ComputeInfoMatrix(LeakyQuery(k, eta, u)).entries();
    const Eigen::MatrixXd closed = LeakyQueryInfoClosedForm(k, eta, u).entries();
    EXPECT_LT((generic - closed).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(LeakyQueryTest, DegenerateQueriesLeakOnly) {
  const int k = 4;
  const std::vector<double> zeros(2 * k, 0.0);
  const std::vector<double> ones(2 * k, 1.0);
  for (const auto& u : {zeros, ones}) {
    EXPECT_TRUE(LeakyQueryDelta(k, u).isZero());
    const Eigen::MatrixXd h = ComputeInfoMatrix(LeakyQuery(k, 0.3, u)).entries();
    EXPECT_TRUE(h.isApprox(0.6 * Eigen::MatrixXd::Identity(k, k), 1e-12));
  }
}

TEST(LeakyQueryTest, EvenIndicatorIsOptimal) {
  for (int k : {4, 16, 64}) {
    const double eta = 1 / std::sqrt(k);
    std::vector<double> u(2 * k, 0.0);
    for (int x = 0; x < 2 * k; x += 2) u[x] = 1.0;
    const FamilyNorms n = ComputeNorms(ComputeInfoMatrix(LeakyQuery(k, eta, u)));
    EXPECT_NEAR(n.op, 2.0, 1e-9);
    EXPECT_GE(n.nuclear, 2 * std::sqrt(k) - 1e-9);
    EXPECT_LE(n.nuclear, 2 * std::sqrt(k) + 2 + 1e-9);
    // Any other query has op at most that of the indicator.
    std::mt19937_64 gen(k);
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = RandomQuery(k, gen);
      EXPECT_LE(ComputeNorms(ComputeInfoMatrix(LeakyQuery(k, eta, v))).op, 2.0 + 1e-9);
    }
  }
}

TEST(ChannelPredicatesTest, LdpAndBits) {
  EXPECT_TRUE(IsLdp(RandomizedResponse(4, 1.0), 1.0));
  EXPECT_FALSE(IsLdp(RandomizedResponse(4, 1.0), 0.9));
  EXPECT_FALSE(IsLdp(IdentityChannel(2), 5.0));
  EXPECT_TRUE(IsLdp(ConstantChannel(2), 0.01));
  EXPECT_THROW(IsLdp(ConstantChannel(2), 0.0), std::invalid_argument);
  EXPECT_TRUE(IsBBit(IdentityChannel(2), 2));
  EXPECT_FALSE(IsBBit(IdentityChannel(3), 2));
  EXPECT_THROW(IsBBit(IdentityChannel(2), 0), std::invalid_argument);
}

}  // namespace
}  // namespace locinfo
