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

#ifndef LOCINFO_HARNESS_H_
#define LOCINFO_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locinfo/channel.h"
#include "locinfo/distribution.h"
#include "locinfo/protocol.h"
#include "locinfo/testers.h"

namespace locinfo {

// ---------------------------------------------------------------------------
// Lower-bound calculator.

enum class Task { kLearningTv, kLearningL2, kTesting };

const char* TaskName(Task task);

// A constraint family: "ldp:<rho>", "comm:<bits>", "leaky", "erasure" or
// "custom:<op>,<nuclear>,<frobenius>".
struct ChannelFamily {
  enum class Kind { kLdp, kComm, kLeaky, kErasure, kCustom };
  Kind kind = Kind::kCustom;
  double param = 0.0;
  FamilyNorms custom;

  // Throws std::invalid_argument on an unknown family.
  static ChannelFamily Parse(std::string_view spec);
  std::string Name() const;
};

// Order-level family norms (constants dropped) used by the bound table:
// ldp(rho): all three rho^2; comm(l): op 1, nuclear 2^l, frobenius
// 2^{l/2}; leaky and erasure at eta = 1/sqrt(k): op 1, nuclear sqrt(k),
// frobenius 1; custom: as given.
FamilyNorms OrderNorms(const ChannelFamily& family, int k);

// Exact maxima of the H(W) norms over the leaky-query or partial-erasure
// family at eta = 1/sqrt(k), from their closed-form spectra.
FamilyNorms ExactFamilyNorms(const ChannelFamily& family, int k);

struct BoundRow {
  Task task;
  ProtocolMode model;
  std::string family;
  std::string formula;
  double bound;
};

// One row per (task, model) cell, constants set to one.
std::vector<BoundRow> LowerBoundTable(int k, double eps, const ChannelFamily& family);

// ---------------------------------------------------------------------------
// Protocol specs and Monte Carlo error.

enum class ProtocolKind {
  kInteractiveLeaky,
  kNoninteractiveLeaky,
  kErasureSim,
  kErasureLearner,
  // Raw samples into the collision tester (identity channel for everyone).
  kIdentityCollision,
};

const char* ProtocolKindName(ProtocolKind kind);
ProtocolKind ParseProtocolKind(std::string_view name);

struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::kInteractiveLeaky;
  int k = 1;
  double eps = 0.3;
  int n = 0;
  uint64_t seed = 0;
  // Leak probability of the learner; testers always use 1/sqrt(k).
  std::optional<double> eta;
  TesterConstants constants;
};

ProtocolStrategy MakeStrategy(const ProtocolSpec& spec);

// Unconstrained collision tester over raw samples.
ProtocolStrategy IdentityCollisionTester(int k, double eps);

struct ErrorEstimate {
  int errors = 0;
  int trials = 0;
  double rate = 0.0;
  double lower = 0.0;  // Wilson 95% interval
  double upper = 1.0;
};

ErrorEstimate WilsonEstimate(int errors, int trials);

// Runs `trials` independent transcripts of `strategy` with n users on
// inputs from p and counts wrong verdicts: "far" when p is uniform,
// "uniform" otherwise. Trial j uses the public seed
// DeriveKey(seed, kTrial, j) regardless of n and p.
// Throws std::invalid_argument for fewer than 100 trials or a learner.
ErrorEstimate McError(const ProtocolStrategy& strategy, const Distribution& p,
                      int n, int trials, uint64_t seed);
ErrorEstimate McError(const ProtocolSpec& spec, const Distribution& p, int trials,
                      uint64_t seed);

// Paninski signs: all (+1) followed by `random_count` random sign vectors.
std::vector<PerturbationSign> DefaultAdversarySigns(int k, double perturbation,
                                                    uint64_t seed,
                                                    int random_count = 20);

struct WorstCaseResult {
  ErrorEstimate worst;
  ErrorEstimate uniform;
  std::vector<ErrorEstimate> far;  // one per adversary sign
  int worst_index = -1;            // -1 when the uniform cell is worst
};

// Max of the false-alarm rate under uniform and the miss rate under each
// adversary p_z. Adversaries use perturbation eps / 2 so TV(p_z, u) = eps.
// When `adversaries` is empty the default set from `seed` is used.
WorstCaseResult WorstCaseError(const ProtocolSpec& spec, int trials, uint64_t seed,
                               std::span<const PerturbationSign> adversaries = {});

// ---------------------------------------------------------------------------
// Sample-complexity search.

using SpecFactory = std::function<ProtocolSpec(int n)>;

struct SearchOptions {
  int n_start = 8;
  int n_cap = 1 << 24;
  int bisection_steps = 8;
  // Pass when the Wilson upper edge of the worst cell is at most the
  // target; otherwise the point estimate is compared.
  bool use_upper_edge = true;
  int adversary_count = 20;
  // Give up once this many consecutive doublings fail without lowering the
  // best failing error (a protocol whose error grows with n never passes).
  int max_stalled_doublings = 3;
  // Stalls are only counted after the best failing error is at or below
  // this level.
  double stall_watch_error = 0.75;
};

struct SearchEvaluation {
  int n;
  WorstCaseResult result;
  bool pass;
};

struct SearchResult {
  int n_star = 0;
  ErrorEstimate error;
  // Bracket from the evaluation log: largest n whose Wilson lower edge
  // exceeds the target and smallest n whose upper edge is below it.
  int n_lo = 0;
  int n_hi = 0;
  // Pass/fail was monotone in n over all evaluations.
  bool monotone = true;
  std::vector<SearchEvaluation> evaluations;
};

// Doubling from n_start until the worst-case error meets the target, then
// bisection between the last failing and first passing n. Throws
// std::runtime_error when nothing up to n_cap passes or the doubling
// phase stalls.
SearchResult SampleComplexitySearch(const SpecFactory& factory, double target,
                                    int trials, uint64_t seed,
                                    const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Calibration and scaling.

struct CalibrationGrid {
  std::vector<double> heavy_coeffs{22.0, 44.0};
  std::vector<double> threshold_margins{0.75, 1.25, 2.0};
  std::vector<int> repeats{1, 3};
};

struct CalibrationOptions {
  double target = 1.0 / 3.0;
  int trials = 200;
  // Multiplies the fitted c and c_ni.
  double safety_factor = 1.25;
  CalibrationGrid grid;
  SearchOptions search;
};

// Grid search for the interactive tester minimizing
// max_k n*(k) / (k^{3/4} / eps^2); then c_ni = max_k n*_ni(k) / (k / eps^2)
// for the noninteractive leaky tester. Throws std::runtime_error when no
// grid point is feasible.
TesterConstants CalibrateConstants(std::span<const int> ks, double eps,
                                   uint64_t seed,
                                   const CalibrationOptions& options = {});

struct ScalingPoint {
  std::string protocol;
  int k;
  int n_star;
  ErrorEstimate error;
  int n_lo;
  int n_hi;
};

struct SlopeFit {
  std::string protocol;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;
};

struct ScalingOptions {
  double target = 1.0 / 3.0;
  int trials = 200;
  SearchOptions search;
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  std::vector<SlopeFit> fits;
};

// Least squares of log y on log x.
SlopeFit FitLogLogSlope(std::span<const double> x, std::span<const double> y);

// n* of the interactive and noninteractive leaky testers at every k, and
// the log-log slope per protocol. Requires >= 3 values of k spanning at
// least a factor 16.
ScalingResult ScalingExperiment(std::span<const int> ks, double eps, uint64_t seed,
                                const TesterConstants& constants,
                                const ScalingOptions& options = {});

// Fixed header: protocol,k,eps,n_star,error,error_lo,error_hi,n_lo,n_hi.
// `metadata` lines are emitted first, each prefixed with "# ".
std::string ScalingCsv(const ScalingResult& result, double eps,
                       std::span<const std::string> metadata);

// The shipped "calibrated" preset, produced by CalibrateConstants with the
// provenance fields it records.
TesterConstants CalibratedPreset();

// Build identification baked in at configure time.
const char* GitDescribe();

}  // namespace locinfo

#endif  // LOCINFO_HARNESS_H_
