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

#include "locinfo/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#ifndef LOCINFO_GIT_DESCRIBE
#define LOCINFO_GIT_DESCRIBE "unknown"
#endif

namespace locinfo {
namespace {

double ParseDouble(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

// Runs fn(j) for j in [0, count) on all hardware threads. Results must be
// written to per-index slots so the outcome does not depend on scheduling.
template <typename Fn>
void ParallelFor(int count, Fn&& fn) {
  const int threads = std::min<int>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    for (int j = 0; j < count; ++j) fn(j);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int j = next++; j < count; j = next++) fn(j);
    });
  }
}

bool IsUniform(const Distribution& p) {
  return TotalVariation(p, UniformDist(p.k())) < 1e-12;
}

ProtocolStrategy CollisionOnlyStrategy(int k, double eps) {
  auto channel = std::make_shared<const Channel>(IdentityChannel(k));
  ProtocolStrategy strategy;
  strategy.name = "identity_collision";
  strategy.k = k;
  strategy.mode = ProtocolMode::kPrivateCoin;
  strategy.new_selector = [channel] {
    return MakeSelector(
        [channel](uint64_t, int, std::span<const Message>) { return channel; });
  };
  strategy.finalize = [k, eps](const Transcript& transcript) -> Outcome {
    std::vector<int> samples;
    samples.reserve(transcript.messages.size());
    for (const Message& m : transcript.messages) samples.push_back(m.label);
    if (samples.size() < 2) {
      Decision d;
      d.statistics = {{"collisions", 0.0}, {"m", static_cast<double>(samples.size())},
                      {"threshold", 0.0}, {"insufficient_samples", 1.0}};
      return d;
    }
    Decision d = CentralizedCollisionTester(samples, k, eps);
    d.statistics["insufficient_samples"] = 0.0;
    return d;
  };
  return strategy;
}

}  // namespace

const char* TaskName(Task task) {
  switch (task) {
    case Task::kLearningTv:
      return "learning-TV";
    case Task::kLearningL2:
      return "learning-L2";
    case Task::kTesting:
      return "testing";
  }
  return "unknown";
}

ChannelFamily ChannelFamily::Parse(std::string_view spec) {
  ChannelFamily family;
  const size_t colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "ldp") {
    family.kind = Kind::kLdp;
    family.param = ParseDouble(arg);
    if (!(family.param > 0.0)) throw std::invalid_argument("ldp needs rho > 0");
  } else if (head == "comm") {
    family.kind = Kind::kComm;
    family.param = ParseDouble(arg);
    if (!(family.param >= 1.0)) throw std::invalid_argument("comm needs l >= 1");
  } else if (head == "leaky" && arg.empty()) {
    family.kind = Kind::kLeaky;
  } else if (head == "erasure" && arg.empty()) {
    family.kind = Kind::kErasure;
  } else if (head == "custom") {
    family.kind = Kind::kCustom;
    std::vector<double> values;
    std::string_view rest = arg;
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      values.push_back(ParseDouble(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view{}
                                              : rest.substr(comma + 1);
    }
    if (values.size() != 3) {
      throw std::invalid_argument("custom family needs op,nuclear,frobenius");
    }
    family.custom = {values[0], values[1], values[2]};
    if (!(family.custom.op > 0 && family.custom.nuclear > 0 &&
          family.custom.frobenius > 0)) {
      throw std::invalid_argument("custom norms must be positive");
    }
  } else {
    throw std::invalid_argument("unknown channel family '" + std::string(spec) + "'");
  }
  return family;
}

std::string ChannelFamily::Name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kLdp:
      os << "ldp(" << param << ")";
      break;
    case Kind::kComm:
      os << "comm(" << param << ")";
      break;
    case Kind::kLeaky:
      os << "leaky";
      break;
    case Kind::kErasure:
      os << "erasure";
      break;
    case Kind::kCustom:
      os << "custom(" << custom.op << "," << custom.nuclear << "," << custom.frobenius
         << ")";
      break;
  }
  return os.str();
}

FamilyNorms OrderNorms(const ChannelFamily& family, int k) {
  switch (family.kind) {
    case ChannelFamily::Kind::kLdp: {
      const double r2 = family.param * family.param;
      return {r2, r2, r2};
    }
    case ChannelFamily::Kind::kComm:
      return {1.0, std::exp2(family.param), std::exp2(family.param / 2.0)};
    case ChannelFamily::Kind::kLeaky:
    case ChannelFamily::Kind::kErasure:
      return {1.0, std::sqrt(static_cast<double>(k)), 1.0};
    case ChannelFamily::Kind::kCustom:
      return family.custom;
  }
  throw std::invalid_argument("unknown family");
}

FamilyNorms ExactFamilyNorms(const ChannelFamily& family, int k) {
  const double eta = TesterEta(k);
  if (family.kind == ChannelFamily::Kind::kLeaky) {
    // Spectrum 2 eta + 2 (1 - eta) once and 2 eta (k - 1 times), attained by
    // the indicator of the even symbols.
    const double top = 2.0 * eta + 2.0 * (1.0 - eta);
    return {top, top + 2.0 * eta * (k - 1),
            std::sqrt(top * top + (k - 1) * 4.0 * eta * eta)};
  }
  if (family.kind == ChannelFamily::Kind::kErasure) {
    // Diagonal: 1 + eta + (1 - eta)/(2k - 1) on the pair holding x*, 2 eta
    // elsewhere.
    const double top = 1.0 + eta + (1.0 - eta) / (2.0 * k - 1.0);
    return {std::max(top, 2.0 * eta), top + 2.0 * eta * (k - 1),
            std::sqrt(top * top + (k - 1) * 4.0 * eta * eta)};
  }
  throw std::invalid_argument("exact norms exist only for leaky and erasure");
}

std::vector<BoundRow> LowerBoundTable(int k, double eps, const ChannelFamily& family) {
  if (k < 1 || !(eps > 0.0)) throw std::invalid_argument("need k >= 1 and eps > 0");
  const FamilyNorms norms = OrderNorms(family, k);
  const double kd = k;
  const double e2 = eps * eps;
  const double learn_tv = kd * kd / (e2 * norms.nuclear);
  const double learn_l2 =
      std::min(kd / (e2 * norms.nuclear), 1.0 / (e2 * e2 * norms.nuclear));
  const double test_private = std::pow(kd, 1.5) / (e2 * norms.nuclear);
  const double test_public = kd / (e2 * norms.frobenius);
  const double test_interactive = kd / (e2 * std::sqrt(norms.op * norms.nuclear));

  struct Formulas {
    const char* learn_tv;
    const char* learn_l2;
    const char* test_private;
    const char* test_public;
    const char* test_interactive;
  };
  Formulas f;
  switch (family.kind) {
    case ChannelFamily::Kind::kLdp:
      f = {"k^2/(eps^2*rho^2)", "min(k/(eps^2*rho^2), 1/(eps^4*rho^2))",
           "k^(3/2)/(eps^2*rho^2)", "k/(eps^2*rho^2)", "k/(eps^2*rho^2)"};
      break;
    case ChannelFamily::Kind::kComm:
      f = {"k^2/(eps^2*2^l)", "min(k/(eps^2*2^l), 1/(eps^4*2^l))",
           "k^(3/2)/(eps^2*2^l)", "k/(eps^2*2^(l/2))", "k/(eps^2*2^(l/2))"};
      break;
    case ChannelFamily::Kind::kLeaky:
    case ChannelFamily::Kind::kErasure:
      f = {"k^(3/2)/eps^2", "min(k^(1/2)/eps^2, 1/(eps^4*k^(1/2)))", "k/eps^2",
           "k/eps^2", "k^(3/4)/eps^2"};
      break;
    case ChannelFamily::Kind::kCustom:
      f = {"k^2/(eps^2*nuc)", "min(k/(eps^2*nuc), 1/(eps^4*nuc))",
           "k^(3/2)/(eps^2*nuc)", "k/(eps^2*frob)", "k/(eps^2*sqrt(op*nuc))"};
      break;
  }
  const std::string name = family.Name();
  std::vector<BoundRow> rows;
  for (ProtocolMode model : {ProtocolMode::kPrivateCoin, ProtocolMode::kPublicCoin,
                             ProtocolMode::kInteractive}) {
    rows.push_back({Task::kLearningTv, model, name, f.learn_tv, learn_tv});
  }
  for (ProtocolMode model : {ProtocolMode::kPrivateCoin, ProtocolMode::kPublicCoin,
                             ProtocolMode::kInteractive}) {
    rows.push_back({Task::kLearningL2, model, name, f.learn_l2, learn_l2});
  }
  rows.push_back({Task::kTesting, ProtocolMode::kPrivateCoin, name, f.test_private,
                  test_private});
  rows.push_back({Task::kTesting, ProtocolMode::kPublicCoin, name, f.test_public,
                  test_public});
  rows.push_back({Task::kTesting, ProtocolMode::kInteractive, name, f.test_interactive,
                  test_interactive});
  return rows;
}

const char* ProtocolKindName(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kInteractiveLeaky:
      return "interactive_leaky";
    case ProtocolKind::kNoninteractiveLeaky:
      return "noninteractive_leaky";
    case ProtocolKind::kErasureSim:
      return "erasure_sim";
    case ProtocolKind::kErasureLearner:
      return "erasure_learner";
    case ProtocolKind::kIdentityCollision:
      return "identity_collision";
  }
  return "unknown";
}

ProtocolKind ParseProtocolKind(std::string_view name) {
  for (ProtocolKind kind :
       {ProtocolKind::kInteractiveLeaky, ProtocolKind::kNoninteractiveLeaky,
        ProtocolKind::kErasureSim, ProtocolKind::kErasureLearner,
        ProtocolKind::kIdentityCollision}) {
    if (name == ProtocolKindName(kind)) return kind;
  }
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

ProtocolStrategy IdentityCollisionTester(int k, double eps) {
  return CollisionOnlyStrategy(k, eps);
}

ProtocolStrategy MakeStrategy(const ProtocolSpec& spec) {
  switch (spec.kind) {
    case ProtocolKind::kInteractiveLeaky:
      return InteractiveLeakyTester(spec.k, spec.eps, spec.n, spec.constants);
    case ProtocolKind::kNoninteractiveLeaky:
      return NoninteractiveLeakyTester(spec.k, spec.eps);
    case ProtocolKind::kErasureSim:
      return ErasureSimulationTester(spec.k, spec.eps);
    case ProtocolKind::kErasureLearner:
      return ErasureHistogramLearner(spec.k, spec.eta.value_or(TesterEta(spec.k)));
    case ProtocolKind::kIdentityCollision:
      return CollisionOnlyStrategy(spec.k, spec.eps);
  }
  throw std::invalid_argument("unknown protocol kind");
}

ErrorEstimate WilsonEstimate(int errors, int trials) {
  ErrorEstimate e;
  e.errors = errors;
  e.trials = trials;
  if (trials <= 0) return e;
  constexpr double z = 1.959963984540054;
  const double n = trials;
  const double phat = errors / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  e.rate = phat;
  e.lower = errors == 0 ? 0.0 : std::max(0.0, center - half);
  e.upper = errors == trials ? 1.0 : std::min(1.0, center + half);
  return e;
}

ErrorEstimate McError(const ProtocolStrategy& strategy, const Distribution& p, int n,
                      int trials, uint64_t seed) {
  if (trials < 100) throw std::invalid_argument("need at least 100 trials");
  const bool truth_uniform = IsUniform(p);
  std::vector<char> wrong(trials, 0);
  ParallelFor(trials, [&](int j) {
    const uint64_t trial_seed = DeriveKey(seed, StreamId::kTrial, j);
    const Outcome outcome =
        strategy.finalize(RunTranscript(strategy, p, n, trial_seed));
    const auto* decision = std::get_if<Decision>(&outcome);
    if (decision == nullptr) {
      throw std::invalid_argument("error rates need a testing protocol");
    }
    const bool said_uniform = decision->verdict == Verdict::kUniform;
    wrong[j] = said_uniform != truth_uniform;
  });
  int errors = 0;
  for (char w : wrong) errors += w;
  return WilsonEstimate(errors, trials);
}

ErrorEstimate McError(const ProtocolSpec& spec, const Distribution& p, int trials,
                      uint64_t seed) {
  return McError(MakeStrategy(spec), p, spec.n, trials, seed);
}

std::vector<PerturbationSign> DefaultAdversarySigns(int k, double perturbation,
                                                    uint64_t seed, int random_count) {
  std::vector<PerturbationSign> signs;
  signs.push_back(PerturbationSign::AllPlus(k, perturbation));
  for (int j = 0; j < random_count; ++j) {
    RandomStream rng(seed, StreamId::kAdversary, j);
    std::vector<int> z(k);
    for (int& v : z) v = (rng() >> 63) ? -1 : 1;
    signs.emplace_back(std::move(z), perturbation);
  }
  return signs;
}

WorstCaseResult WorstCaseError(const ProtocolSpec& spec, int trials, uint64_t seed,
                               std::span<const PerturbationSign> adversaries) {
  std::vector<PerturbationSign> defaults;
  if (adversaries.empty()) {
    defaults = DefaultAdversarySigns(spec.k, spec.eps / 2.0, seed);
    adversaries = defaults;
  }
  const ProtocolStrategy strategy = MakeStrategy(spec);
  WorstCaseResult result;
  result.uniform = McError(strategy, UniformDist(spec.k), spec.n, trials, seed);
  result.worst = result.uniform;
  for (size_t j = 0; j < adversaries.size(); ++j) {
    if (adversaries[j].k() != spec.k) throw std::invalid_argument("adversary domain mismatch");
    result.far.push_back(
        McError(strategy, PaninskiDist(adversaries[j]), spec.n, trials, seed));
    if (result.far.back().rate > result.worst.rate) {
      result.worst = result.far.back();
      result.worst_index = static_cast<int>(j);
    }
  }
  return result;
}

SearchResult SampleComplexitySearch(const SpecFactory& factory, double target,
                                    int trials, uint64_t seed,
                                    const SearchOptions& options) {
  if (!(target > 0.0 && target < 0.5)) throw std::invalid_argument("target must lie in (0, 1/2)");
  const ProtocolSpec probe = factory(std::max(options.n_start, 1));
  const std::vector<PerturbationSign> adversaries =
      DefaultAdversarySigns(probe.k, probe.eps / 2.0, seed, options.adversary_count);

  SearchResult result;
  std::map<int, size_t> seen;
  auto passes = [&](int n) {
    if (auto it = seen.find(n); it != seen.end()) {
      return result.evaluations[it->second].pass;
    }
    WorstCaseResult wc = WorstCaseError(factory(n), trials, seed, adversaries);
    const double score = options.use_upper_edge ? wc.worst.upper : wc.worst.rate;
    const bool pass = score <= target;
    seen[n] = result.evaluations.size();
    result.evaluations.push_back({n, std::move(wc), pass});
    return pass;
  };

  int hi = std::max(options.n_start, 1);
  int lo = 0;
  double best_failing = std::numeric_limits<double>::infinity();
  int stalled = 0;
  while (!passes(hi)) {
    const double error = result.evaluations[seen[hi]].result.worst.rate;
    // Small n leaves the testers with nothing to look at and the error sits
    // near 1, so a plateau only counts once the error has come down.
    if (error < best_failing) {
      best_failing = error;
      stalled = 0;
    } else if (best_failing <= options.stall_watch_error &&
               ++stalled >= options.max_stalled_doublings) {
      throw std::runtime_error("worst-case error stopped decreasing at n = " +
                               std::to_string(hi));
    }
    lo = hi;
    if (hi > options.n_cap / 2) {
      throw std::runtime_error("no passing n up to the configured cap");
    }
    hi *= 2;
  }
  for (int step = 0; step < options.bisection_steps && hi - lo > 1 && lo > 0; ++step) {
    const int mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.n_star = hi;
  result.error = result.evaluations[seen[hi]].result.worst;

  std::vector<const SearchEvaluation*> ordered;
  for (const auto& e : result.evaluations) ordered.push_back(&e);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return a->n < b->n; });
  bool seen_pass = false;
  result.n_lo = 0;
  result.n_hi = ordered.back()->n;
  for (const SearchEvaluation* e : ordered) {
    if (seen_pass && !e->pass) result.monotone = false;
    seen_pass = seen_pass || e->pass;
    if (e->result.worst.lower > target) result.n_lo = e->n;
  }
  for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
    if ((*it)->result.worst.upper <= target) result.n_hi = (*it)->n;
  }
  return result;
}

TesterConstants CalibrateConstants(std::span<const int> ks, double eps, uint64_t seed,
                                   const CalibrationOptions& options) {
  if (ks.empty()) throw std::invalid_argument("calibration needs at least one k");
  const double e2 = eps * eps;
  TesterConstants best;
  double best_c = std::numeric_limits<double>::infinity();
  for (double heavy : options.grid.heavy_coeffs) {
    for (double margin : options.grid.threshold_margins) {
      for (int repeats : options.grid.repeats) {
        TesterConstants candidate;
        candidate.preset = "calibrated";
        candidate.heavy_coeff = heavy;
        candidate.threshold_margin = margin;
        candidate.repeats = repeats;
        double worst_c = 0.0;
        try {
          for (int k : ks) {
            SearchOptions search = options.search;
            search.n_start = std::max(search.n_start, 3 * repeats);
            const SearchResult r = SampleComplexitySearch(
                [&](int n) {
                  ProtocolSpec spec;
                  spec.kind = ProtocolKind::kInteractiveLeaky;
                  spec.k = k;
                  spec.eps = eps;
                  spec.n = n;
                  spec.seed = seed;
                  spec.constants = candidate;
                  return spec;
                },
                options.target, options.trials, seed, search);
            worst_c = std::max(worst_c, r.n_star / (std::pow(k, 0.75) / e2));
          }
        } catch (const std::runtime_error&) {
          continue;
        }
        if (worst_c < best_c) {
          best_c = worst_c;
          best = candidate;
        }
      }
    }
  }
  if (!std::isfinite(best_c)) {
    throw std::runtime_error("calibration grid exhausted without a feasible point");
  }
  double c_ni = 0.0;
  for (int k : ks) {
    const SearchResult r = SampleComplexitySearch(
        [&](int n) {
          ProtocolSpec spec;
          spec.kind = ProtocolKind::kNoninteractiveLeaky;
          spec.k = k;
          spec.eps = eps;
          spec.n = n;
          spec.seed = seed;
          return spec;
        },
        options.target, options.trials, seed, options.search);
    c_ni = std::max(c_ni, r.n_star / (k / e2));
  }
  best.c = best_c * options.safety_factor;
  best.c_ni = c_ni * options.safety_factor;
  best.calibrated = true;
  best.calibration_seed = seed;
  best.calibration_eps = eps;
  best.calibration_ks.assign(ks.begin(), ks.end());
  best.safety_factor = options.safety_factor;
  return best;
}

SlopeFit FitLogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs matching samples, at least two");
  }
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (size_t i = 0; i < n; ++i) {
    fit.residuals.push_back(std::log(y[i]) - (fit.intercept + fit.slope * std::log(x[i])));
  }
  return fit;
}

ScalingResult ScalingExperiment(std::span<const int> ks, double eps, uint64_t seed,
                                const TesterConstants& constants,
                                const ScalingOptions& options) {
  if (ks.size() < 3) throw std::invalid_argument("scaling needs at least three k values");
  const auto [kmin, kmax] = std::minmax_element(ks.begin(), ks.end());
  if (*kmax < 16 * *kmin) throw std::invalid_argument("k values must span a factor 16");
  ScalingResult result;
  for (ProtocolKind kind :
       {ProtocolKind::kInteractiveLeaky, ProtocolKind::kNoninteractiveLeaky}) {
    std::vector<double> xs, ys;
    for (int k : ks) {
      SearchOptions search = options.search;
      if (kind == ProtocolKind::kInteractiveLeaky) {
        search.n_start = std::max(search.n_start, 3 * constants.repeats);
      }
      const SearchResult r = SampleComplexitySearch(
          [&](int n) {
            ProtocolSpec spec;
            spec.kind = kind;
            spec.k = k;
            spec.eps = eps;
            spec.n = n;
            spec.seed = seed;
            spec.constants = constants;
            return spec;
          },
          options.target, options.trials, seed, search);
      result.points.push_back(
          {ProtocolKindName(kind), k, r.n_star, r.error, r.n_lo, r.n_hi});
      xs.push_back(k);
      ys.push_back(r.n_star);
    }
    SlopeFit fit = FitLogLogSlope(xs, ys);
    fit.protocol = ProtocolKindName(kind);
    result.fits.push_back(std::move(fit));
  }
  return result;
}

std::string ScalingCsv(const ScalingResult& result, double eps,
                       std::span<const std::string> metadata) {
  std::ostringstream os;
  os.precision(10);
  for (const std::string& line : metadata) os << "# " << line << "\n";
  os << "protocol,k,eps,n_star,error,error_lo,error_hi,n_lo,n_hi\n";
  for (const ScalingPoint& p : result.points) {
    os << p.protocol << "," << p.k << "," << eps << "," << p.n_star << ","
       << p.error.rate << "," << p.error.lower << "," << p.error.upper << ","
       << p.n_lo << "," << p.n_hi << "\n";
  }
  return os.str();
}

// Output of `locinfo calibrate --ks 256 --eps 0.3 --seed 20261016` with the
// default grid, 200 trials per cell and safety factor 1.25.
TesterConstants CalibratedPreset() {
  TesterConstants c;
  c.preset = "calibrated";
  c.heavy_coeff = 22.0;
  c.c = 2.5734375;
  c.repeats = 1;
  c.threshold_margin = 2.0;
  c.c_ni = 1.040625;
  c.calibrated = true;
  c.calibration_seed = 20261016;
  c.calibration_eps = 0.3;
  c.calibration_ks = {256};
  c.safety_factor = 1.25;
  return c;
}

const char* GitDescribe() { return LOCINFO_GIT_DESCRIBE; }

}  // namespace locinfo
