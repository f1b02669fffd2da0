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

#ifndef LOCINFO_EXACT_ORACLE_H_
#define LOCINFO_EXACT_ORACLE_H_

// Exact transcript laws and information quantities for small
// deterministic interactive protocols, by full enumeration.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "locinfo/channel.h"
#include "locinfo/distribution.h"
#include "locinfo/protocol.h"

namespace locinfo {

struct EnumerationCaps {
  int max_k = 3;
  int max_labels = 4;
  int max_depth = 4;
};

// A deterministic protocol given as a table from every message prefix of
// length < depth to the channel the next user applies. Prefixes of length
// t are stored at TableOffset(t) + code, where code reads the prefix as a
// base-|Y| number with the first message most significant.
class EnumerableStrategy {
 public:
  // Throws std::invalid_argument when a cap is exceeded, the table has the
  // wrong size, or a channel has the wrong domain or alphabet size.
  EnumerableStrategy(int k, int num_labels, int depth,
                     std::vector<ChannelPtr> table, EnumerationCaps caps = {});

  int k() const { return k_; }
  int num_labels() const { return num_labels_; }
  int depth() const { return depth_; }
  std::span<const ChannelPtr> table() const { return table_; }

  int TableOffset(int t) const;
  const Channel& ChannelAt(int t, int code) const {
    return *table_[TableOffset(t) + code];
  }
  const Channel& ChannelFor(std::span<const int> prefix) const;

  // Maximum norms of H(W) over every channel in the table.
  FamilyNorms MaxNorms() const;

  // Human-readable dump of the whole table, for violation reports.
  std::string Describe() const;

 private:
  int k_;
  int num_labels_;
  int depth_;
  std::vector<ChannelPtr> table_;
};

// Every prefix gets an independent Dirichlet(1, ..., 1) channel.
EnumerableStrategy RandomEnumerableStrategy(int k, int num_labels, int depth,
                                            uint64_t seed,
                                            EnumerationCaps caps = {});
// The same channel after every prefix.
EnumerableStrategy FixedChannelStrategy(const Channel& channel, int depth,
                                        EnumerationCaps caps = {});
// Tabulates a runtime strategy at a fixed public seed. Every selected
// channel must use the same alphabet size.
EnumerableStrategy TabulateStrategy(const ProtocolStrategy& strategy,
                                    uint64_t public_seed, int depth,
                                    EnumerationCaps caps = {});

// Exact law of Y^n under i.i.d. inputs from p, indexed by prefix code.
std::vector<double> TranscriptDist(const EnumerableStrategy& s,
                                   const Distribution& p, int n);
// 2^{-k} sum_z law of Y^n under p_z.
std::vector<double> MixtureTranscriptDist(const EnumerableStrategy& s, double eps,
                                          int n);
// Law of Y^n when Z_i is pinned to `sign` and the other coordinates are
// uniform.
std::vector<double> PinnedTranscriptDist(const EnumerableStrategy& s, double eps,
                                         int n, int i, int sign);

// I(Z_i ; Y^n) in bits under a uniform prior on Z.
double CoordinateMutualInfo(const EnumerableStrategy& s, double eps, int n, int i);

// E_{q^{Y^t}}[ KL(q^{Y_{t+1} | Y^t} || u^{Y_{t+1} | Y^t}) ] in bits.
double ExpectedConditionalKl(const EnumerableStrategy& s, double eps, int t);

struct VerificationReport {
  std::string instance;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
  double slack = 0.0;
  // Filled only on violation.
  std::string detail;

  static constexpr double kTolerance = 1e-9;
  static VerificationReport Make(std::string instance, double lhs, double rhs);
};

// The checks below take eps = TV(p_z, u) in (0, 1/4] and build p_z with
// perturbation eps / 2 (entries (1 +- 2 eps z_i) / 2k), so that
// P_z(y) - P_{z^i}(y) = (2 eps z_i / k) (W(y|2i) - W(y|2i+1)).

// (1/k) sum_i I(Z_i ; Y^t) <= (8 t eps^2 / k^2) max_W ||H(W)||_*.
VerificationReport CheckAvgInfoBound(const EnumerableStrategy& s, double eps, int t);
// Expected conditional KL of message t+1 <=
//   (4 ln2 eps^2 / k) max_W ||H(W)||_op sum_i I(Z_i ; Y^t).
VerificationReport CheckPerRoundBound(const EnumerableStrategy& s, double eps, int t);
// I(Z_i ; Y^t) <= (8 eps^2 / k) sum_{s<t} E_q[ H(W^{Y^s})_{ii} ].
VerificationReport CheckCoordinateInfoBound(const EnumerableStrategy& s, double eps,
                                            int t, int i);
// KL(q^{Y^n} || u^{Y^n}) <= 16 ln2 eps^4 n^2 / k^2 * max op * max nuclear.
VerificationReport LeCamKlCheck(const EnumerableStrategy& s, double eps, int n);

// A joint law of (Z, Y) with Z in {-1,+1}^k, stored as P(z, y) at
// z_code * num_y + y (bit i of z_code set means z_i = -1).
class FiniteJoint {
 public:
  // Throws std::invalid_argument unless the masses are a distribution whose
  // Z-marginal is uniform on {-1,+1}^k (within 1e-9).
  FiniteJoint(int k, int num_y, std::vector<double> probs);

  int k() const { return k_; }
  int num_y() const { return num_y_; }
  double operator()(uint64_t z_code, int y) const { return probs_[z_code * num_y_ + y]; }

  // P(Z_i = sign, Y = y).
  double CoordinateJoint(int i, int sign, int y) const;
  double MarginalY(int y) const;
  // I(Z_i ; Y) in bits.
  double CoordinateInfo(int i) const;

 private:
  int k_;
  int num_y_;
  std::vector<double> probs_;
};

// Uniform Z and an independent Dirichlet(1) conditional law of Y per z.
FiniteJoint RandomFiniteJoint(int k, int num_y, uint64_t seed);

// Boundary joints: Y independent of Z and uniform on num_y labels; Y = Z;
// and Y = Z_1 with k = 2 (coordinate 0 revealed, coordinate 1 hidden).
FiniteJoint IndependentJoint(int k, int num_y);
FiniteJoint RevealingJoint(int k);
FiniteJoint FirstCoordinateJoint();

// Per coordinate: 1 - h(P[Z_i != MAP_i(Y)]) <= I(Z_i ; Y); then the
// averaged form. Reports are ordered by coordinate, averaged last.
std::vector<VerificationReport> CheckHammingInfoLoss(const FiniteJoint& joint);
// Per coordinate: E[E[Z_i|Y]^2] / (2 ln 2) <= I(Z_i ; Y); then
// (1 - mmse(Z|Y)/k) / (2 ln 2) <= (1/k) sum_i I(Z_i ; Y).
std::vector<VerificationReport> CheckMseInfoLoss(const FiniteJoint& joint);

}  // namespace locinfo

#endif  // LOCINFO_EXACT_ORACLE_H_
