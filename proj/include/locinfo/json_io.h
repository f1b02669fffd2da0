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

#ifndef LOCINFO_JSON_IO_H_
#define LOCINFO_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "locinfo/channel.h"
#include "locinfo/distribution.h"
#include "locinfo/exact_oracle.h"
#include "locinfo/harness.h"
#include "locinfo/protocol.h"
#include "locinfo/testers.h"

namespace locinfo {

using Json = nlohmann::ordered_json;

// Parsers throw std::invalid_argument on a malformed document.

// {"type":"uniform","k":N} | {"type":"paninski","k":N,"eps":x,"z":[...]}
// | {"type":"explicit","probs":[...]}. For "paninski", eps is the total
// variation distance to uniform, in (0, 1/2].
Distribution DistributionFromJson(const Json& j);

// {"type":"rr","k":N,"rho":x}
// | {"type":"partial_erasure","k":N,"eta":x,"x_star":j}
// | {"type":"leaky_query","k":N,"eta":x,"u":[...]}
// | {"type":"matrix","k":N,"labels":[...],"rows":[[...], ...]}
Channel ChannelFromJson(const Json& j);

// {"protocol":..., "k":N, "eps":x, "n":N, "preset":"proof"|"calibrated",
//  "seed":S} with optional "eta" (learner) and "constants" (a full
// constants object overriding the preset).
ProtocolSpec ProtocolSpecFromJson(const Json& j);
Json ToJson(const ProtocolSpec& spec);

Json ToJson(const TesterConstants& constants);
TesterConstants ConstantsFromJson(const Json& j);

Json ToJson(const Decision& decision);
Json ToJson(const Distribution& p);
Json ToJson(const FamilyNorms& norms);
Json ToJson(const VerificationReport& report);
Json ToJson(const BoundRow& row);
Json ToJson(const ErrorEstimate& estimate);

}  // namespace locinfo

#endif  // LOCINFO_JSON_IO_H_
