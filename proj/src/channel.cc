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
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace locinfo {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (labels_.size() > static_cast<size_t>(kMaxLabels)) {
    throw std::invalid_argument("alphabet exceeds 2^16 labels");
  }
  index_.reserve(labels_.size());
  for (int y = 0; y < size(); ++y) {
    if (!index_.emplace(labels_[y], y).second) {
      throw std::invalid_argument("duplicate label '" + labels_[y] + "'");
    }
  }
}

std::shared_ptr<const Alphabet> Alphabet::Domain(
    int k, std::span<const std::string_view> extra) {
  // Testers rebuild channels over the same alphabet many times per run.
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<std::string>>,
                  std::shared_ptr<const Alphabet>>
      cache;
  std::vector<std::string> extra_labels(extra.begin(), extra.end());
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, extra_labels);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::string> labels;
  labels.reserve(2 * k + extra.size());
  for (int x = 0; x < 2 * k; ++x) labels.push_back(std::to_string(x));
  labels.insert(labels.end(), extra_labels.begin(), extra_labels.end());
  auto alphabet = std::make_shared<const Alphabet>(std::move(labels));
  cache.emplace(std::move(key), alphabet);
  return alphabet;
}

std::optional<int> Alphabet::Find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Channel Channel::FromRows(int k, std::shared_ptr<const Alphabet> alphabet,
                          const std::vector<std::vector<double>>& rows) {
  if (!alphabet) throw std::invalid_argument("missing alphabet");
  std::vector<std::vector<Entry>> sparse(rows.size());
  for (size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != static_cast<size_t>(alphabet->size())) {
      throw std::invalid_argument("row width does not match alphabet size");
    }
    for (int y = 0; y < alphabet->size(); ++y) {
      const double v = rows[x][y];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("channel entry outside [0, 1]");
      }
      if (v > 0.0) sparse[x].push_back({y, v});
    }
  }
  return FromSparseRows(k, std::move(alphabet), std::move(sparse));
}

Channel Channel::FromSparseRows(int k, std::shared_ptr<const Alphabet> alphabet,
                                std::vector<std::vector<Entry>> rows) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!alphabet) throw std::invalid_argument("missing alphabet");
  if (rows.size() != static_cast<size_t>(2 * k)) {
    throw std::invalid_argument("channel needs exactly 2k input rows");
  }
  Channel ch;
  ch.k_ = k;
  ch.alphabet_ = std::move(alphabet);
  ch.offsets_.reserve(rows.size() + 1);
  ch.offsets_.push_back(0);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(),
              [](const Entry& a, const Entry& b) { return a.label < b.label; });
    for (const Entry& e : row) {
      if (e.prob != 0.0) ch.entries_.push_back(e);
    }
    ch.offsets_.push_back(static_cast<int>(ch.entries_.size()));
  }
  ch.Validate();
  return ch;
}

void Channel::Validate() const {
  for (int x = 0; x < num_inputs(); ++x) {
    double total = 0.0;
    int prev = -1;
    for (const Entry& e : Row(x)) {
      if (e.label < 0 || e.label >= num_labels()) {
        throw std::invalid_argument("channel entry refers to unknown label");
      }
      if (e.label == prev) throw std::invalid_argument("repeated label in row");
      prev = e.label;
      if (!(e.prob >= 0.0 && e.prob <= 1.0)) {
        throw std::invalid_argument("channel entry outside [0, 1]");
      }
      total += e.prob;
    }
    if (std::abs(total - 1.0) > kRowTolerance) {
      throw std::invalid_argument("channel row " + std::to_string(x) +
                                  " sums to " + std::to_string(total));
    }
  }
}

double Channel::Prob(int x, int y) const {
  auto row = Row(x);
  auto it = std::lower_bound(row.begin(), row.end(), y,
                             [](const Entry& e, int v) { return e.label < v; });
  return (it != row.end() && it->label == y) ? it->prob : 0.0;
}

std::vector<std::vector<double>> Channel::DenseRows() const {
  std::vector<std::vector<double>> dense(num_inputs(),
                                         std::vector<double>(num_labels(), 0.0));
  for (int x = 0; x < num_inputs(); ++x) {
    for (const Entry& e : Row(x)) dense[x][e.label] = e.prob;
  }
  return dense;
}

int Channel::Apply(int x, RandomStream& rng) const {
  auto row = Row(x);
  if (row.size() == 1) return row.front().label;
  double u = rng.Uniform();
  for (const Entry& e : row) {
    if (u < e.prob) return e.label;
    u -= e.prob;
  }
  // Rounding leftovers land on the last nonzero entry.
  return row.back().label;
}

std::vector<double> Channel::OutputDist(std::span<const double> p) const {
  if (p.size() != static_cast<size_t>(num_inputs())) {
    throw std::invalid_argument("input distribution does not match channel domain");
  }
  std::vector<double> q(num_labels(), 0.0);
  for (int x = 0; x < num_inputs(); ++x) {
    for (const Entry& e : Row(x)) q[e.label] += p[x] * e.prob;
  }
  return q;
}

InfoMatrix::InfoMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("information matrix must be square and nonempty");
  }
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("information matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigen-decomposition failed");
  }
  eigenvalues_ = solver.eigenvalues().reverse();
  if (eigenvalues_.minCoeff() < -1e-9) {
    throw std::invalid_argument("information matrix is not positive semidefinite");
  }
}

bool FamilyNorms::SatisfiesHolderChain(double tol) const {
  return frobenius * frobenius <= op * nuclear + tol && op <= frobenius + tol &&
         frobenius <= nuclear + tol;
}

InfoMatrix ComputeInfoMatrix(const Channel& channel,
                             std::span<const int> permutation) {
  const int k = channel.k();
  const int n_in = channel.num_inputs();
  std::vector<int> order(n_in);
  if (permutation.empty()) {
    std::iota(order.begin(), order.end(), 0);
  } else {
    if (permutation.size() != static_cast<size_t>(n_in)) {
      throw std::invalid_argument("permutation must cover all 2k inputs");
    }
    std::vector<bool> seen(n_in, false);
    for (int j = 0; j < n_in; ++j) {
      const int x = permutation[j];
      if (x < 0 || x >= n_in || seen[x]) {
        throw std::invalid_argument("not a permutation of the input domain");
      }
      seen[x] = true;
      order[j] = x;
    }
  }

  std::vector<double> column_mass(channel.num_labels(), 0.0);
  for (int x = 0; x < n_in; ++x) {
    for (const auto& e : channel.Row(x)) column_mass[e.label] += e.prob;
  }

  // Per label: the nonzero pair differences W(y|2i) - W(y|2i+1).
  std::vector<std::vector<std::pair<int, double>>> diffs(channel.num_labels());
  for (int i = 0; i < k; ++i) {
    auto a = channel.Row(order[2 * i]);
    auto b = channel.Row(order[2 * i + 1]);
    size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      int y;
      double d;
      if (ib == b.size() || (ia < a.size() && a[ia].label < b[ib].label)) {
        y = a[ia].label;
        d = a[ia++].prob;
      } else if (ia == a.size() || b[ib].label < a[ia].label) {
        y = b[ib].label;
        d = -b[ib++].prob;
      } else {
        y = a[ia].label;
        d = a[ia++].prob - b[ib++].prob;
      }
      if (d != 0.0) diffs[y].emplace_back(i, d);
    }
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
  for (int y = 0; y < channel.num_labels(); ++y) {
    if (column_mass[y] == 0.0) continue;
    const double inv = 1.0 / column_mass[y];
    for (const auto& [i, di] : diffs[y]) {
      for (const auto& [j, dj] : diffs[y]) h(i, j) += di * dj * inv;
    }
  }
  return InfoMatrix(std::move(h));
}

FamilyNorms ComputeNorms(const InfoMatrix& h) {
  FamilyNorms norms;
  norms.op = std::max(0.0, h.eigenvalues()(0));
  norms.nuclear = h.entries().trace();
  norms.frobenius = h.entries().norm();
  const double gershgorin = h.entries().cwiseAbs().rowwise().sum().maxCoeff();
  if (norms.op > gershgorin + 1e-9) {
    throw std::logic_error("operator norm exceeds the Gershgorin row-sum bound");
  }
  return norms;
}

bool IsLdp(const Channel& channel, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  const int n_in = channel.num_inputs();
  std::vector<double> col_max(channel.num_labels(), 0.0);
  std::vector<double> col_min(channel.num_labels(),
                              std::numeric_limits<double>::infinity());
  std::vector<int> col_count(channel.num_labels(), 0);
  for (int x = 0; x < n_in; ++x) {
    for (const auto& e : channel.Row(x)) {
      col_max[e.label] = std::max(col_max[e.label], e.prob);
      col_min[e.label] = std::min(col_min[e.label], e.prob);
      ++col_count[e.label];
    }
  }
  // Relative slack absorbs the rounding in e^rho / (e^rho + 2k - 1).
  const double bound = std::exp(rho) * (1.0 + 1e-12);
  for (int y = 0; y < channel.num_labels(); ++y) {
    if (col_count[y] == 0) continue;
    const double lo = col_count[y] < n_in ? 0.0 : col_min[y];
    if (col_max[y] > bound * lo) return false;
  }
  return true;
}

bool IsBBit(const Channel& channel, int bits) {
  if (bits < 1) throw std::invalid_argument("bits must be positive");
  if (bits >= 31) return true;
  return channel.num_labels() <= (1 << bits);
}

Channel IdentityChannel(int k) {
  std::vector<std::vector<Channel::Entry>> rows(2 * k);
  for (int x = 0; x < 2 * k; ++x) rows[x] = {{x, 1.0}};
  return Channel::FromSparseRows(k, Alphabet::Domain(k), std::move(rows));
}

Channel ConstantChannel(int k, std::string label) {
  auto alphabet = std::make_shared<const Alphabet>(
      std::vector<std::string>{std::move(label)});
  std::vector<std::vector<Channel::Entry>> rows(2 * k, {{0, 1.0}});
  return Channel::FromSparseRows(k, std::move(alphabet), std::move(rows));
}

Channel RandomizedResponse(int k, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  const double denom = std::exp(rho) + 2.0 * k - 1.0;
  const double keep = std::exp(rho) / denom;
  const double other = 1.0 / denom;
  std::vector<std::vector<Channel::Entry>> rows(2 * k);
  for (int x = 0; x < 2 * k; ++x) {
    rows[x].reserve(2 * k);
    for (int y = 0; y < 2 * k; ++y) rows[x].push_back({y, y == x ? keep : other});
  }
  return Channel::FromSparseRows(k, Alphabet::Domain(k), std::move(rows));
}

Channel PartialErasure(int k, double eta, int x_star) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("erasure eta must lie in (0, 1]");
  }
  if (x_star < 0 || x_star >= 2 * k) throw std::invalid_argument("x_star outside domain");
  static constexpr std::string_view kExtra[] = {kErasureLabel};
  auto alphabet = Alphabet::Domain(k, kExtra);
  const int bottom = 2 * k;
  std::vector<std::vector<Channel::Entry>> rows(2 * k);
  for (int x = 0; x < 2 * k; ++x) {
    if (x == x_star || eta == 1.0) {
      rows[x] = {{x, 1.0}};
    } else {
      rows[x] = {{x, eta}, {bottom, 1.0 - eta}};
    }
  }
  return Channel::FromSparseRows(k, std::move(alphabet), std::move(rows));
}

Channel LeakyQuery(int k, double eta, std::span<const double> u) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw std::invalid_argument("leaky-query eta must lie in [0, 1)");
  }
  if (u.size() != static_cast<size_t>(2 * k)) {
    throw std::invalid_argument("query vector must have 2k entries");
  }
  static constexpr std::string_view kExtra[] = {kQueryOneLabel, kQueryZeroLabel};
  auto alphabet = Alphabet::Domain(k, kExtra);
  const int one = 2 * k;
  const int zero = 2 * k + 1;
  std::vector<std::vector<Channel::Entry>> rows(2 * k);
  for (int x = 0; x < 2 * k; ++x) {
    if (!(u[x] >= 0.0 && u[x] <= 1.0)) {
      throw std::invalid_argument("query entries must lie in [0, 1]");
    }
    rows[x].reserve(3);
    if (eta > 0.0) rows[x].push_back({x, eta});
    rows[x].push_back({one, (1.0 - eta) * u[x]});
    rows[x].push_back({zero, (1.0 - eta) * (1.0 - u[x])});
  }
  return Channel::FromSparseRows(k, std::move(alphabet), std::move(rows));
}

Channel LeakyMembershipQuery(int k, double eta, std::span<const int> set) {
  std::vector<double> u(2 * k, 0.0);
  for (int x : set) u.at(x) = 1.0;
  return LeakyQuery(k, eta, u);
}

Eigen::VectorXd LeakyQueryDelta(int k, std::span<const double> u) {
  if (u.size() != static_cast<size_t>(2 * k)) {
    throw std::invalid_argument("query vector must have 2k entries");
  }
  const double l1 = std::accumulate(u.begin(), u.end(), 0.0);
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(k);
  if (l1 <= 0.0 || l1 >= 2.0 * k) return delta;
  const double scale = std::sqrt(2.0 * k / (l1 * (2.0 * k - l1)));
  for (int i = 0; i < k; ++i) delta(i) = (u[2 * i] - u[2 * i + 1]) * scale;
  return delta;
}

InfoMatrix LeakyQueryInfoClosedForm(int k, double eta, std::span<const double> u) {
  const Eigen::VectorXd delta = LeakyQueryDelta(k, u);
  Eigen::MatrixXd h = 2.0 * eta * Eigen::MatrixXd::Identity(k, k) +
                      (1.0 - eta) * delta * delta.transpose();
  return InfoMatrix(std::move(h));
}

}  // namespace locinfo
