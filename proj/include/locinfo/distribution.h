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

#ifndef LOCINFO_DISTRIBUTION_H_
#define LOCINFO_DISTRIBUTION_H_

#include <cstdint>
#include <span>
#include <vector>

namespace locinfo {

// Tolerance on the total mass of a probability vector. Inputs that miss it
// are rejected, never renormalized.
inline constexpr double kMassTolerance = 1e-12;

// A probability mass function over the even-sized domain {0, ..., 2k-1}.
// Inputs 2i and 2i+1 form the i-th pair of the perturbation family.
class Distribution {
 public:
  // Throws std::invalid_argument unless `probs` has even, nonzero length,
  // entries in [0, 1] and total mass within kMassTolerance of one.
  explicit Distribution(std::vector<double> probs);

  int k() const { return static_cast<int>(probs_.size() / 2); }
  int domain_size() const { return static_cast<int>(probs_.size()); }
  double operator[](int x) const { return probs_[x]; }
  std::span<const double> probs() const { return probs_; }

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> probs_;
};

// A sign vector z in {-1,+1}^k together with the perturbation size.
class PerturbationSign {
 public:
  // Throws std::invalid_argument if z is empty, holds a value other than
  // +-1, or eps is outside (0, 1/4].
  PerturbationSign(std::vector<int> z, double eps);

  // All-(+1) signs.
  static PerturbationSign AllPlus(int k, double eps);
  // The sign vector whose i-th bit (LSB first) of `code` set means z_i = -1.
  static PerturbationSign FromCode(int k, uint64_t code, double eps);

  int k() const { return static_cast<int>(z_.size()); }
  double eps() const { return eps_; }
  int operator[](int i) const { return z_[i]; }
  std::span<const int> z() const { return z_; }

  // z with coordinate i flipped.
  PerturbationSign Flipped(int i) const;

 private:
  std::vector<int> z_;
  double eps_;
};

Distribution UniformDist(int k);

// Entry 2i is (1 + 4 eps z_i) / 2k and entry 2i+1 is (1 - 4 eps z_i) / 2k.
Distribution PaninskiDist(const PerturbationSign& sign);

// Divergences over raw mass vectors of equal length. KL is in bits.
// KL and chi-square throw std::invalid_argument when q(x) = 0 < p(x).
double TotalVariation(std::span<const double> p, std::span<const double> q);
double KlDivergence(std::span<const double> p, std::span<const double> q);
double ChiSquare(std::span<const double> p, std::span<const double> q);

double TotalVariation(const Distribution& p, const Distribution& q);
double KlDivergence(const Distribution& p, const Distribution& q);
double ChiSquare(const Distribution& p, const Distribution& q);

// h(t) = -t log t - (1-t) log(1-t) in bits, with 0 log 0 = 0.
double BinaryEntropy(double t);

int HammingDistance(std::span<const int> a, std::span<const int> b);

}  // namespace locinfo

#endif  // LOCINFO_DISTRIBUTION_H_
