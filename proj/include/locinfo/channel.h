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

#ifndef LOCINFO_CHANNEL_H_
#define LOCINFO_CHANNEL_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "locinfo/distribution.h"
#include "locinfo/random.h"

namespace locinfo {

inline constexpr double kRowTolerance = 1e-12;
inline constexpr int kMaxLabels = 1 << 16;

inline constexpr std::string_view kErasureLabel = "⊥";
inline constexpr std::string_view kQueryOneLabel = "1*";
inline constexpr std::string_view kQueryZeroLabel = "0*";

// A finite message alphabet with unique labels.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  // Labels "0", ..., "2k-1" followed by `extra`.
  static std::shared_ptr<const Alphabet> Domain(
      int k, std::span<const std::string_view> extra = {});

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& operator[](int y) const { return labels_[y]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<int> Find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// A channel W from inputs {0, ..., 2k-1} to a labelled alphabet, stored as
// compressed sparse rows. Immutable once built.
class Channel {
 public:
  struct Entry {
    int label;
    double prob;
  };

  // Throws std::invalid_argument on a malformed matrix: wrong shape,
  // entries outside [0, 1], or rows not summing to one within
  // kRowTolerance.
  static Channel FromRows(int k, std::shared_ptr<const Alphabet> alphabet,
                          const std::vector<std::vector<double>>& rows);
  static Channel FromSparseRows(int k, std::shared_ptr<const Alphabet> alphabet,
                                std::vector<std::vector<Entry>> rows);

  int k() const { return k_; }
  int num_inputs() const { return 2 * k_; }
  int num_labels() const { return alphabet_->size(); }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& shared_alphabet() const {
    return alphabet_;
  }
  const std::string& label(int y) const { return (*alphabet_)[y]; }

  // Nonzero entries of row x, sorted by label.
  std::span<const Entry> Row(int x) const {
    return {entries_.data() + offsets_[x], entries_.data() + offsets_[x + 1]};
  }
  double Prob(int x, int y) const;
  std::vector<std::vector<double>> DenseRows() const;

  // Samples a label index from row x.
  int Apply(int x, RandomStream& rng) const;

  // q(y) = sum_x p(x) W(y|x), indexed like the alphabet.
  std::vector<double> OutputDist(std::span<const double> p) const;
  std::vector<double> OutputDist(const Distribution& p) const {
    return OutputDist(p.probs());
  }

 private:
  Channel() = default;
  void Validate() const;

  int k_ = 0;
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<int> offsets_;
  std::vector<Entry> entries_;
};

using ChannelPtr = std::shared_ptr<const Channel>;

// The k x k channel information matrix and its spectrum.
class InfoMatrix {
 public:
  // Throws std::invalid_argument if `entries` is not square, not symmetric
  // within 1e-10, or has an eigenvalue below -1e-9.
  explicit InfoMatrix(Eigen::MatrixXd entries);

  int k() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }
  // Nonincreasing.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::MatrixXd entries_;
  Eigen::VectorXd eigenvalues_;
};

struct FamilyNorms {
  double op = 0.0;
  double nuclear = 0.0;
  double frobenius = 0.0;

  // frobenius^2 <= op * nuclear and op <= frobenius <= nuclear, each up to
  // `tol`.
  bool SatisfiesHolderChain(double tol = 1e-9) const;
};

// H(W)_{i1,i2} = sum_y (W(y|2i1) - W(y|2i1+1)) (W(y|2i2) - W(y|2i2+1))
//                      / sum_x W(y|x).
// Labels with zero column mass contribute 0. If `permutation` is nonempty,
// position j of the paired domain holds original input permutation[j].
InfoMatrix ComputeInfoMatrix(const Channel& channel,
                             std::span<const int> permutation = {});

// op = largest eigenvalue, nuclear = trace, frobenius = entrywise 2-norm.
// Throws std::logic_error if op exceeds the Gershgorin row-sum bound.
FamilyNorms ComputeNorms(const InfoMatrix& h);

bool IsLdp(const Channel& channel, double rho);
bool IsBBit(const Channel& channel, int bits);

// Canonical channel families. Domain symbols occupy labels 0..2k-1.
Channel IdentityChannel(int k);
Channel ConstantChannel(int k, std::string label = "c");
// W(x|x) = e^rho / (e^rho + 2k - 1), W(y|x) = 1 / (e^rho + 2k - 1).
Channel RandomizedResponse(int k, double rho);
// Passes x_star exactly; any other x survives w.p. eta, else becomes ⊥.
Channel PartialErasure(int k, double eta, int x_star);
// Outputs x w.p. eta, else 1* w.p. u_x and 0* w.p. 1 - u_x.
Channel LeakyQuery(int k, double eta, std::span<const double> u);
// Leaky query whose u is the indicator of `set` (sorted or not).
Channel LeakyMembershipQuery(int k, double eta, std::span<const int> set);

// delta(u)_i = (u_{2i} - u_{2i+1}) sqrt(2k / (|u|_1 (2k - |u|_1))), and 0
// when |u|_1 is 0 or 2k.
Eigen::VectorXd LeakyQueryDelta(int k, std::span<const double> u);
// 2 eta I + (1 - eta) delta(u) delta(u)^T.
InfoMatrix LeakyQueryInfoClosedForm(int k, double eta, std::span<const double> u);

}  // namespace locinfo

#endif  // LOCINFO_CHANNEL_H_
