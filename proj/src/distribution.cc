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

#include "locinfo/distribution.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace locinfo {
namespace {

void CheckSameSize(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("domain mismatch: " + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()));
  }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty() || probs_.size() % 2 != 0) {
    throw std::invalid_argument("distribution domain must have even size 2k");
  }
  double total = 0.0;
  for (double v : probs_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("probability mass outside [0, 1]");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw std::invalid_argument("probability masses sum to " +
                                std::to_string(total));
  }
}

PerturbationSign::PerturbationSign(std::vector<int> z, double eps)
    : z_(std::move(z)), eps_(eps) {
  if (z_.empty()) throw std::invalid_argument("sign vector must be nonempty");
  for (int v : z_) {
    if (v != 1 && v != -1) throw std::invalid_argument("sign entries must be +-1");
  }
  if (!(eps > 0.0 && eps <= 0.25)) {
    throw std::invalid_argument("perturbation eps must lie in (0, 1/4]");
  }
}

PerturbationSign PerturbationSign::AllPlus(int k, double eps) {
  return PerturbationSign(std::vector<int>(k, 1), eps);
}

PerturbationSign PerturbationSign::FromCode(int k, uint64_t code, double eps) {
  std::vector<int> z(k);
  for (int i = 0; i < k; ++i) z[i] = ((code >> i) & 1) ? -1 : 1;
  return PerturbationSign(std::move(z), eps);
}

PerturbationSign PerturbationSign::Flipped(int i) const {
  std::vector<int> z = z_;
  z.at(i) = -z[i];
  return PerturbationSign(std::move(z), eps_);
}

Distribution UniformDist(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return Distribution(std::vector<double>(2 * k, 1.0 / (2.0 * k)));
}

Distribution PaninskiDist(const PerturbationSign& sign) {
  const int k = sign.k();
  std::vector<double> probs(2 * k);
  for (int i = 0; i < k; ++i) {
    const double shift = 4.0 * sign.eps() * sign[i];
    probs[2 * i] = (1.0 + shift) / (2.0 * k);
    probs[2 * i + 1] = (1.0 - shift) / (2.0 * k);
  }
  return Distribution(std::move(probs));
}

double TotalVariation(std::span<const double> p, std::span<const double> q) {
  CheckSameSize(p, q);
  double l1 = 0.0;
  for (size_t x = 0; x < p.size(); ++x) l1 += std::abs(p[x] - q[x]);
  return 0.5 * l1;
}

double KlDivergence(std::span<const double> p, std::span<const double> q) {
  CheckSameSize(p, q);
  double kl = 0.0;
  for (size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) {
      throw std::invalid_argument("KL divergence: p not absolutely continuous wrt q");
    }
    kl += p[x] * std::log2(p[x] / q[x]);
  }
  // Rounding can push an exact zero slightly negative.
  return kl < 0.0 ? 0.0 : kl;
}

double ChiSquare(std::span<const double> p, std::span<const double> q) {
  CheckSameSize(p, q);
  double chi2 = 0.0;
  for (size_t x = 0; x < p.size(); ++x) {
    if (q[x] == 0.0) {
      if (p[x] != 0.0) {
        throw std::invalid_argument("chi-square: p not absolutely continuous wrt q");
      }
      continue;
    }
    const double d = p[x] - q[x];
    chi2 += d * d / q[x];
  }
  return chi2;
}

double TotalVariation(const Distribution& p, const Distribution& q) {
  return TotalVariation(p.probs(), q.probs());
}
double KlDivergence(const Distribution& p, const Distribution& q) {
  return KlDivergence(p.probs(), q.probs());
}
double ChiSquare(const Distribution& p, const Distribution& q) {
  return ChiSquare(p.probs(), q.probs());
}

double BinaryEntropy(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("binary entropy argument outside [0, 1]");
  }
  if (t == 0.0 || t == 1.0) return 0.0;
  return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

int HammingDistance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace locinfo
