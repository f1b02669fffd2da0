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

#include "locinfo/exact_oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace locinfo {
namespace {

int IntPow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<double> DirichletRow(int size, std::mt19937_64& gen) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> row(size);
  double total = 0.0;
  for (double& v : row) {
    v = gamma(gen);
    total += v;
  }
  for (double& v : row) v /= total;
  return row;
}

// I(B ; Y) in bits for a uniform bit B whose conditional laws are `plus`
// and `minus`.
double BinaryInfo(std::span<const double> plus, std::span<const double> minus) {
  std::vector<double> mix(plus.size());
  for (size_t y = 0; y < plus.size(); ++y) mix[y] = 0.5 * (plus[y] + minus[y]);
  return 0.5 * KlDivergence(plus, mix) + 0.5 * KlDivergence(minus, mix);
}

void CheckEps(double eps) {
  if (!(eps > 0.0 && eps <= 0.25)) {
    throw std::invalid_argument("perturbation eps must lie in (0, 1/4]");
  }
}

std::string InstanceName(const char* check, const EnumerableStrategy& s, double eps,
                         int t) {
  std::ostringstream os;
  os << check << " k=" << s.k() << " labels=" << s.num_labels()
     << " depth=" << s.depth() << " eps=" << eps << " t=" << t;
  return os.str();
}

// The bound checks take the distance eps = TV(p_z, u) and evaluate p_z at
// perturbation eps / 2, i.e. entries (1 +- 2 eps z_i) / 2k.
void CheckDistance(double eps) {
  if (!(eps > 0.0 && eps <= 0.25)) {
    throw std::invalid_argument("distance eps must lie in (0, 1/4]");
  }
}

double PerturbationFor(double eps) { return eps / 2.0; }

VerificationReport WithDetail(VerificationReport report, const EnumerableStrategy& s) {
  if (!report.holds) report.detail = s.Describe();
  return report;
}

}  // namespace

EnumerableStrategy::EnumerableStrategy(int k, int num_labels, int depth,
                                       std::vector<ChannelPtr> table,
                                       EnumerationCaps caps)
    : k_(k), num_labels_(num_labels), depth_(depth), table_(std::move(table)) {
  if (k < 1 || k > caps.max_k) throw std::invalid_argument("k exceeds enumeration cap");
  if (num_labels < 1 || num_labels > caps.max_labels) {
    throw std::invalid_argument("alphabet exceeds enumeration cap");
  }
  if (depth < 0 || depth > caps.max_depth) {
    throw std::invalid_argument("depth exceeds enumeration cap");
  }
  if (table_.size() != static_cast<size_t>(TableOffset(depth))) {
    throw std::invalid_argument("strategy table does not cover every prefix");
  }
  for (const ChannelPtr& ch : table_) {
    if (!ch || ch->k() != k || ch->num_labels() != num_labels) {
      throw std::invalid_argument("strategy channel has the wrong shape");
    }
  }
}

int EnumerableStrategy::TableOffset(int t) const {
  int offset = 0;
  for (int s = 0; s < t; ++s) offset += IntPow(num_labels_, s);
  return offset;
}

const Channel& EnumerableStrategy::ChannelFor(std::span<const int> prefix) const {
  int code = 0;
  for (int y : prefix) code = code * num_labels_ + y;
  return ChannelAt(static_cast<int>(prefix.size()), code);
}

FamilyNorms EnumerableStrategy::MaxNorms() const {
  FamilyNorms best;
  for (const ChannelPtr& ch : table_) {
    const FamilyNorms n = ComputeNorms(ComputeInfoMatrix(*ch));
    best.op = std::max(best.op, n.op);
    best.nuclear = std::max(best.nuclear, n.nuclear);
    best.frobenius = std::max(best.frobenius, n.frobenius);
  }
  return best;
}

std::string EnumerableStrategy::Describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "k=" << k_ << " labels=" << num_labels_ << " depth=" << depth_ << "\n";
  for (int t = 0; t < depth_; ++t) {
    for (int code = 0; code < IntPow(num_labels_, t); ++code) {
      os << "t=" << t << " prefix=" << code << ":";
      for (const auto& row : ChannelAt(t, code).DenseRows()) {
        os << " [";
        for (size_t y = 0; y < row.size(); ++y) os << (y ? "," : "") << row[y];
        os << "]";
      }
      os << "\n";
    }
  }
  return os.str();
}

EnumerableStrategy RandomEnumerableStrategy(int k, int num_labels, int depth,
                                            uint64_t seed, EnumerationCaps caps) {
  std::mt19937_64 gen(DeriveKey(seed, StreamId::kStrategy, 0));
  std::vector<std::string> labels;
  for (int y = 0; y < num_labels; ++y) labels.push_back("y" + std::to_string(y));
  auto alphabet = std::make_shared<const Alphabet>(std::move(labels));
  int size = 0;
  for (int t = 0; t < depth; ++t) size += IntPow(num_labels, t);
  std::vector<ChannelPtr> table;
  table.reserve(size);
  for (int j = 0; j < size; ++j) {
    std::vector<std::vector<double>> rows(2 * k);
    for (auto& row : rows) row = DirichletRow(num_labels, gen);
    table.push_back(
        std::make_shared<const Channel>(Channel::FromRows(k, alphabet, rows)));
  }
  return EnumerableStrategy(k, num_labels, depth, std::move(table), caps);
}

EnumerableStrategy FixedChannelStrategy(const Channel& channel, int depth,
                                        EnumerationCaps caps) {
  auto shared = std::make_shared<const Channel>(channel);
  int size = 0;
  for (int t = 0; t < depth; ++t) size += IntPow(channel.num_labels(), t);
  return EnumerableStrategy(channel.k(), channel.num_labels(), depth,
                            std::vector<ChannelPtr>(size, shared), caps);
}

EnumerableStrategy TabulateStrategy(const ProtocolStrategy& strategy,
                                    uint64_t public_seed, int depth,
                                    EnumerationCaps caps) {
  std::vector<ChannelPtr> table;
  int num_labels = -1;
  for (int t = 0; t < depth; ++t) {
    const int width = t == 0 ? 1 : IntPow(num_labels, t);
    for (int code = 0; code < width; ++code) {
      std::vector<Message> prefix(t);
      int rest = code;
      for (int s = t - 1; s >= 0; --s) {
        prefix[s] = {s, rest % num_labels};
        rest /= num_labels;
      }
      auto selector = strategy.new_selector();
      ChannelPtr ch = selector->Select(public_seed, t, prefix);
      if (num_labels < 0) num_labels = ch->num_labels();
      table.push_back(std::move(ch));
    }
  }
  if (num_labels < 0) num_labels = 1;
  return EnumerableStrategy(strategy.k, num_labels, depth, std::move(table), caps);
}

std::vector<double> TranscriptDist(const EnumerableStrategy& s, const Distribution& p,
                                   int n) {
  if (n < 0 || n > s.depth()) throw std::invalid_argument("n exceeds strategy depth");
  if (p.k() != s.k()) throw std::invalid_argument("distribution domain mismatch");
  std::vector<double> dist{1.0};
  for (int t = 0; t < n; ++t) {
    std::vector<double> next(dist.size() * s.num_labels(), 0.0);
    for (size_t code = 0; code < dist.size(); ++code) {
      if (dist[code] == 0.0) continue;
      const std::vector<double> q =
          s.ChannelAt(t, static_cast<int>(code)).OutputDist(p);
      for (int y = 0; y < s.num_labels(); ++y) {
        next[code * s.num_labels() + y] = dist[code] * q[y];
      }
    }
    dist = std::move(next);
  }
  return dist;
}

std::vector<double> PinnedTranscriptDist(const EnumerableStrategy& s, double eps,
                                         int n, int i, int sign) {
  CheckEps(eps);
  const int k = s.k();
  std::vector<double> total;
  int count = 0;
  for (uint64_t code = 0; code < (uint64_t{1} << k); ++code) {
    const PerturbationSign z = PerturbationSign::FromCode(k, code, eps);
    if (i >= 0 && z[i] != sign) continue;
    std::vector<double> d = TranscriptDist(s, PaninskiDist(z), n);
    if (total.empty()) total.assign(d.size(), 0.0);
    for (size_t j = 0; j < d.size(); ++j) total[j] += d[j];
    ++count;
  }
  for (double& v : total) v /= count;
  return total;
}

std::vector<double> MixtureTranscriptDist(const EnumerableStrategy& s, double eps,
                                          int n) {
  return PinnedTranscriptDist(s, eps, n, -1, 0);
}

double CoordinateMutualInfo(const EnumerableStrategy& s, double eps, int n, int i) {
  if (i < 0 || i >= s.k()) throw std::invalid_argument("coordinate out of range");
  if (n == 0) return 0.0;
  return BinaryInfo(PinnedTranscriptDist(s, eps, n, i, 1),
                    PinnedTranscriptDist(s, eps, n, i, -1));
}

double ExpectedConditionalKl(const EnumerableStrategy& s, double eps, int t) {
  if (t < 0 || t >= s.depth()) throw std::invalid_argument("round out of range");
  const std::vector<double> joint = MixtureTranscriptDist(s, eps, t + 1);
  const Distribution uniform = UniformDist(s.k());
  const int labels = s.num_labels();
  double total = 0.0;
  for (size_t code = 0; code < joint.size() / labels; ++code) {
    double mass = 0.0;
    for (int y = 0; y < labels; ++y) mass += joint[code * labels + y];
    if (mass == 0.0) continue;
    std::vector<double> cond(labels);
    for (int y = 0; y < labels; ++y) cond[y] = joint[code * labels + y] / mass;
    const std::vector<double> ref =
        s.ChannelAt(t, static_cast<int>(code)).OutputDist(uniform);
    total += mass * KlDivergence(cond, ref);
  }
  return total;
}

VerificationReport VerificationReport::Make(std::string instance, double lhs,
                                            double rhs) {
  VerificationReport r;
  r.instance = std::move(instance);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = lhs <= rhs + kTolerance;
  return r;
}

VerificationReport CheckAvgInfoBound(const EnumerableStrategy& s, double eps, int t) {
  CheckDistance(eps);
  const double a = PerturbationFor(eps);
  if (t < 1 || t > s.depth()) throw std::invalid_argument("t must lie in [1, depth]");
  const int k = s.k();
  double avg = 0.0;
  for (int i = 0; i < k; ++i) avg += CoordinateMutualInfo(s, a, t, i);
  avg /= k;
  const double rhs = 8.0 * t * eps * eps / (k * k) * s.MaxNorms().nuclear;
  return WithDetail(
      VerificationReport::Make(InstanceName("avg-info", s, eps, t), avg, rhs), s);
}

VerificationReport CheckPerRoundBound(const EnumerableStrategy& s, double eps, int t) {
  CheckDistance(eps);
  const double a = PerturbationFor(eps);
  const int k = s.k();
  const double lhs = ExpectedConditionalKl(s, a, t);
  double info = 0.0;
  for (int i = 0; i < k; ++i) info += CoordinateMutualInfo(s, a, t, i);
  const double rhs =
      4.0 * std::numbers::ln2 * eps * eps / k * s.MaxNorms().op * info;
  return WithDetail(
      VerificationReport::Make(InstanceName("per-round", s, eps, t), lhs, rhs), s);
}

VerificationReport CheckCoordinateInfoBound(const EnumerableStrategy& s, double eps,
                                            int t, int i) {
  CheckDistance(eps);
  const double a = PerturbationFor(eps);
  if (t < 0 || t > s.depth()) throw std::invalid_argument("t out of range");
  double expected_diag = 0.0;
  for (int r = 0; r < t; ++r) {
    const std::vector<double> prefix_law = MixtureTranscriptDist(s, a, r);
    for (size_t code = 0; code < prefix_law.size(); ++code) {
      if (prefix_law[code] == 0.0) continue;
      expected_diag += prefix_law[code] *
                       ComputeInfoMatrix(s.ChannelAt(r, static_cast<int>(code)))(i, i);
    }
  }
  const double rhs = 8.0 * eps * eps / s.k() * expected_diag;
  const double lhs = CoordinateMutualInfo(s, a, t, i);
  return WithDetail(VerificationReport::Make(
                        InstanceName("coordinate-info", s, eps, t) +
                            " i=" + std::to_string(i),
                        lhs, rhs),
                    s);
}

VerificationReport LeCamKlCheck(const EnumerableStrategy& s, double eps, int n) {
  CheckDistance(eps);
  const double a = PerturbationFor(eps);
  const std::vector<double> mixture = MixtureTranscriptDist(s, a, n);
  const std::vector<double> reference = TranscriptDist(s, UniformDist(s.k()), n);
  const double lhs = KlDivergence(mixture, reference);
  const FamilyNorms norms = s.MaxNorms();
  const double k = s.k();
  const double rhs = 16.0 * std::numbers::ln2 * std::pow(eps, 4) * n * n / (k * k) *
                     norms.op * norms.nuclear;
  return WithDetail(
      VerificationReport::Make(InstanceName("lecam", s, eps, n), lhs, rhs), s);
}

FiniteJoint::FiniteJoint(int k, int num_y, std::vector<double> probs)
    : k_(k), num_y_(num_y), probs_(std::move(probs)) {
  if (k < 1 || k > 20 || num_y < 1) throw std::invalid_argument("malformed joint shape");
  const uint64_t signs = uint64_t{1} << k;
  if (probs_.size() != signs * num_y) throw std::invalid_argument("malformed joint size");
  double total = 0.0;
  for (uint64_t z = 0; z < signs; ++z) {
    double row = 0.0;
    for (int y = 0; y < num_y; ++y) {
      const double v = probs_[z * num_y + y];
      if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("joint mass outside [0, 1]");
      row += v;
    }
    if (std::abs(row - 1.0 / signs) > 1e-9) {
      throw std::invalid_argument("Z marginal is not uniform on {-1,+1}^k");
    }
    total += row;
  }
  if (std::abs(total - 1.0) > kMassTolerance * signs) {
    throw std::invalid_argument("joint masses do not sum to one");
  }
}

double FiniteJoint::CoordinateJoint(int i, int sign, int y) const {
  double total = 0.0;
  for (uint64_t z = 0; z < (uint64_t{1} << k_); ++z) {
    const int zi = ((z >> i) & 1) ? -1 : 1;
    if (zi == sign) total += (*this)(z, y);
  }
  return total;
}

double FiniteJoint::MarginalY(int y) const {
  double total = 0.0;
  for (uint64_t z = 0; z < (uint64_t{1} << k_); ++z) total += (*this)(z, y);
  return total;
}

double FiniteJoint::CoordinateInfo(int i) const {
  std::vector<double> plus(num_y_), minus(num_y_);
  for (int y = 0; y < num_y_; ++y) {
    plus[y] = 2.0 * CoordinateJoint(i, 1, y);
    minus[y] = 2.0 * CoordinateJoint(i, -1, y);
  }
  return BinaryInfo(plus, minus);
}

FiniteJoint RandomFiniteJoint(int k, int num_y, uint64_t seed) {
  std::mt19937_64 gen(DeriveKey(seed, StreamId::kStrategy, 1));
  const uint64_t signs = uint64_t{1} << k;
  std::vector<double> probs;
  probs.reserve(signs * num_y);
  for (uint64_t z = 0; z < signs; ++z) {
    for (double v : DirichletRow(num_y, gen)) probs.push_back(v / signs);
  }
  return FiniteJoint(k, num_y, std::move(probs));
}

FiniteJoint IndependentJoint(int k, int num_y) {
  const int n = 1 << k;
  return FiniteJoint(k, num_y, std::vector<double>(n * num_y, 1.0 / (n * num_y)));
}

FiniteJoint RevealingJoint(int k) {
  const int n = 1 << k;
  std::vector<double> probs(n * n, 0.0);
  for (int z = 0; z < n; ++z) probs[z * n + z] = 1.0 / n;
  return FiniteJoint(k, n, std::move(probs));
}

FiniteJoint FirstCoordinateJoint() {
  std::vector<double> probs(4 * 2, 0.0);
  for (int z = 0; z < 4; ++z) probs[z * 2 + (z & 1)] = 0.25;
  return FiniteJoint(2, 2, std::move(probs));
}

std::vector<VerificationReport> CheckHammingInfoLoss(const FiniteJoint& joint) {
  const int k = joint.k();
  std::vector<VerificationReport> reports;
  double error_sum = 0.0, info_sum = 0.0;
  for (int i = 0; i < k; ++i) {
    // The MAP decoder errs with the smaller of the two joint masses.
    double error = 0.0;
    for (int y = 0; y < joint.num_y(); ++y) {
      error += std::min(joint.CoordinateJoint(i, 1, y), joint.CoordinateJoint(i, -1, y));
    }
    error = std::clamp(error, 0.0, 1.0);
    const double info = joint.CoordinateInfo(i);
    error_sum += error;
    info_sum += info;
    reports.push_back(VerificationReport::Make(
        "info-loss-hamming i=" + std::to_string(i), 1.0 - BinaryEntropy(error), info));
  }
  reports.push_back(VerificationReport::Make(
      "info-loss-hamming averaged", 1.0 - BinaryEntropy(std::clamp(error_sum / k, 0.0, 1.0)),
      info_sum / k));
  return reports;
}

std::vector<VerificationReport> CheckMseInfoLoss(const FiniteJoint& joint) {
  const int k = joint.k();
  const double scale = 1.0 / (2.0 * std::numbers::ln2);
  std::vector<VerificationReport> reports;
  double mmse = 0.0, info_sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double second_moment = 0.0;
    for (int y = 0; y < joint.num_y(); ++y) {
      const double py = joint.MarginalY(y);
      if (py == 0.0) continue;
      const double mean =
          (joint.CoordinateJoint(i, 1, y) - joint.CoordinateJoint(i, -1, y)) / py;
      second_moment += py * mean * mean;
    }
    // E[(Z_i - E[Z_i|Y])^2] = 1 - E[E[Z_i|Y]^2].
    mmse += 1.0 - second_moment;
    const double info = joint.CoordinateInfo(i);
    info_sum += info;
    reports.push_back(VerificationReport::Make("info-loss-mse i=" + std::to_string(i),
                                               scale * second_moment, info));
  }
  reports.push_back(VerificationReport::Make("info-loss-mse averaged",
                                             scale * (1.0 - mmse / k), info_sum / k));
  return reports;
}

}  // namespace locinfo
