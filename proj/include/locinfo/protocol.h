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

#ifndef LOCINFO_PROTOCOL_H_
#define LOCINFO_PROTOCOL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "locinfo/channel.h"
#include "locinfo/distribution.h"

namespace locinfo {

enum class ProtocolMode { kPrivateCoin, kPublicCoin, kInteractive };

const char* ModeName(ProtocolMode mode);

struct Message {
  int user;
  int label;  // index into the alphabet of the channel the user applied

  bool operator==(const Message&) const = default;
};

struct Transcript {
  std::vector<Message> messages;
  uint64_t public_seed = 0;
  int n = 0;

  bool operator==(const Transcript&) const = default;
};

enum class Verdict { kUniform, kFar };

const char* VerdictName(Verdict verdict);

struct Decision {
  Verdict verdict = Verdict::kUniform;
  // Diagnostics. Every decision rule emits the same keys on every run.
  std::map<std::string, double> statistics;
};

using Outcome = std::variant<Decision, Distribution>;

// Picks the channel of each user. A selector lives for one transcript; the
// runtime only ever extends the prefix it passes in, so implementations may
// cache anything derived from a prefix they have already seen.
class ChannelSelector {
 public:
  virtual ~ChannelSelector() = default;
  // `prefix` holds the messages of users 0..user-1, nothing else.
  virtual ChannelPtr Select(uint64_t public_seed, int user,
                            std::span<const Message> prefix) = 0;
};

using SelectFn =
    std::function<ChannelPtr(uint64_t, int, std::span<const Message>)>;

// Wraps a stateless selection function.
std::unique_ptr<ChannelSelector> MakeSelector(SelectFn fn);

struct ProtocolStrategy {
  std::string name;
  int k = 0;
  ProtocolMode mode = ProtocolMode::kInteractive;
  std::function<std::unique_ptr<ChannelSelector>()> new_selector;
  std::function<Outcome(const Transcript&)> finalize;
};

// Same strategy, relabelled as sequentially interactive. Noninteractive
// selectors ignore the prefix, so transcripts are unchanged.
ProtocolStrategy AsInteractive(ProtocolStrategy strategy);

// Draws X_t ~ p independently and lets user t apply the channel selected
// from the messages of users before it. Samples and channel noise come from
// disjoint counter-based substreams of `seed`, keyed by the user index.
Transcript RunTranscript(const ProtocolStrategy& strategy, const Distribution& p,
                         int n, uint64_t seed);

// Same as RunTranscript but with the input sequence fixed by the caller.
Transcript RunTranscriptOnSamples(const ProtocolStrategy& strategy,
                                  std::span<const int> samples, uint64_t seed);

// n i.i.d. draws from p on the sample substreams of `seed`.
std::vector<int> DrawSamples(const Distribution& p, int n, uint64_t seed);

}  // namespace locinfo

#endif  // LOCINFO_PROTOCOL_H_
