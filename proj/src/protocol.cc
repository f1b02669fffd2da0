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

#include "locinfo/protocol.h"

#include <random>
#include <stdexcept>

namespace locinfo {
namespace {

class FunctionSelector : public ChannelSelector {
 public:
  explicit FunctionSelector(SelectFn fn) : fn_(std::move(fn)) {}
  ChannelPtr Select(uint64_t public_seed, int user,
                    std::span<const Message> prefix) override {
    return fn_(public_seed, user, prefix);
  }

 private:
  SelectFn fn_;
};

}  // namespace

const char* ModeName(ProtocolMode mode) {
  switch (mode) {
    case ProtocolMode::kPrivateCoin:
      return "private-coin";
    case ProtocolMode::kPublicCoin:
      return "public-coin";
    case ProtocolMode::kInteractive:
      return "interactive";
  }
  return "unknown";
}

const char* VerdictName(Verdict verdict) {
  return verdict == Verdict::kFar ? "far" : "uniform";
}

std::unique_ptr<ChannelSelector> MakeSelector(SelectFn fn) {
  return std::make_unique<FunctionSelector>(std::move(fn));
}

ProtocolStrategy AsInteractive(ProtocolStrategy strategy) {
  strategy.mode = ProtocolMode::kInteractive;
  return strategy;
}

std::vector<int> DrawSamples(const Distribution& p, int n, uint64_t seed) {
  std::discrete_distribution<int> draw(p.probs().begin(), p.probs().end());
  std::vector<int> samples(n);
  for (int t = 0; t < n; ++t) {
    RandomStream rng(seed, StreamId::kSample, t);
    samples[t] = draw(rng);
  }
  return samples;
}

Transcript RunTranscriptOnSamples(const ProtocolStrategy& strategy,
                                  std::span<const int> samples, uint64_t seed) {
  const int n = static_cast<int>(samples.size());
  Transcript transcript;
  transcript.public_seed = seed;
  transcript.n = n;
  transcript.messages.reserve(n);
  auto selector = strategy.new_selector();
  for (int t = 0; t < n; ++t) {
    ChannelPtr channel = selector->Select(
        seed, t, std::span<const Message>(transcript.messages.data(), t));
    if (!channel || channel->k() != strategy.k) {
      throw std::logic_error("selector returned no channel or a mismatched domain");
    }
    RandomStream rng(seed, StreamId::kChannel, t);
    transcript.messages.push_back({t, channel->Apply(samples[t], rng)});
  }
  return transcript;
}

Transcript RunTranscript(const ProtocolStrategy& strategy, const Distribution& p,
                         int n, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("user count must be nonnegative");
  if (p.k() != strategy.k) throw std::invalid_argument("distribution domain mismatch");
  return RunTranscriptOnSamples(strategy, DrawSamples(p, n, seed), seed);
}

}  // namespace locinfo
