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

#ifndef LOCINFO_RANDOM_H_
#define LOCINFO_RANDOM_H_

#include <cstdint>
#include <limits>

namespace locinfo {

// Substream identifiers. Sample draws, channel draws and server-side
// randomness never share a stream, so changing protocol logic does not
// perturb the input samples.
enum class StreamId : uint64_t {
  kSample = 1,
  kChannel = 2,
  kServer = 3,
  kTrial = 4,
  kAdversary = 5,
  kStrategy = 6,
};

constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Key of substream `index` of kind `stream` under `seed`.
constexpr uint64_t DeriveKey(uint64_t seed, StreamId stream, uint64_t index) {
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ static_cast<uint64_t>(stream)) ^
                    index);
}

// A small counter-based generator (SplitMix64 over an incrementing counter).
// Satisfies UniformRandomBitGenerator so it plugs into <random>.
class RandomStream {
 public:
  using result_type = uint64_t;

  explicit constexpr RandomStream(uint64_t key) : counter_(key) {}
  RandomStream(uint64_t seed, StreamId stream, uint64_t index)
      : counter_(DeriveKey(seed, stream, index)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    uint64_t x = counter_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  uint64_t counter_;
};

}  // namespace locinfo

#endif  // LOCINFO_RANDOM_H_
