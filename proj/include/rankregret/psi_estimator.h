// Copyright 2026 The rankregret Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force regret transfer functions on small instances.
//
// Psi_{A->B}(eps) is the largest regret on B among rankings whose regret on A
// is at most eps. With the label multiset fixed, rankings reduce to
// permutations (times threshold cuts when Acc is involved), so Psi is an
// exact step function obtained by enumeration.

#ifndef RANKREGRET_PSI_ESTIMATOR_H_
#define RANKREGRET_PSI_ESTIMATOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankregret/metrics.h"
#include "rankregret/transfer_bounds.h"
#include "rankregret/types.h"

namespace rankregret {

inline constexpr std::size_t kMaxPsiSize = 9;
inline constexpr std::size_t kMaxExpectedPsiSize = 8;
inline constexpr double kDominanceSlack = 1e-9;
// Source regrets this close to eps count as <= eps.
inline constexpr double kPsiTolerance = 1e-12;

struct RegretSample {
  double source = 0.0;
  double target = 0.0;
  Permutation perm;
  // Number of top ranks predicted positive, set when Acc is involved.
  std::optional<std::size_t> cut;
};

struct PsiPoint {
  double epsilon = 0.0;
  double psi = 0.0;
};

struct PsiCurve {
  MetricSpec source;
  MetricSpec target;
  std::size_t n = 0;
  // Exactly one of the two is set.
  std::optional<LabeledList> labels;
  std::optional<RelevanceVector> eta;
  // Ascending in epsilon.
  std::vector<PsiPoint> points;

  // Psi at the largest grid point <= eps; 0 below the grid.
  double At(double eps) const;
};

// Absolute regrets of every permutation (and every cut 0..n for Acc). The
// cut is part of the predictor, and a ranking metric leaves it free, so Psi
// from a ranking metric into Acc is positive at 0. The closed-form bounds
// instead fix the cut at n+ (see TransferRegrets).
// Throws CapacityError for n > kMaxPsiSize and UndefinedMetricError when a
// metric is undefined on `labels`.
std::vector<RegretSample> EnumerateRegretPairs(const MetricSpec& source,
                                               const MetricSpec& target,
                                               const LabeledList& labels);

// Expected-utility regrets under eta: U*(M) - U(sigma), with U* the best
// value over the enumeration. Throws CapacityError for n > 8.
std::vector<RegretSample> EnumerateExpectedRegretPairs(
    const MetricSpec& source, const MetricSpec& target,
    const RelevanceVector& eta);

// Step function over `eps_grid`; when the grid is absent it is the sorted set
// of attained source regrets.
PsiCurve PsiBrute(const MetricSpec& source, const MetricSpec& target,
                  const LabeledList& labels,
                  std::optional<std::vector<double>> eps_grid = std::nullopt);

PsiCurve PsiBruteExpected(
    const MetricSpec& source, const MetricSpec& target,
    const RelevanceVector& eta,
    std::optional<std::vector<double>> eps_grid = std::nullopt);

// `points` evenly spaced values on [0, max_eps].
std::vector<double> UniformGrid(std::size_t points, double max_eps);

// Sup over samples with source <= eps (within kPsiTolerance), per grid point.
std::vector<PsiPoint> PsiFromSamples(std::span<const RegretSample> samples,
                                     std::optional<std::vector<double>> grid);

struct BoundVerdict {
  TransferBound bound;
  std::size_t enumerated = 0;

  // target <= C * source + kDominanceSlack on every permutation.
  bool dominance = true;
  double min_slack = 0.0;  // min of C * source - target
  std::optional<Permutation> violation;
  RegretPair violation_regrets;

  // Largest target / source over permutations with source > 0.
  double tightness_ratio = 0.0;
  std::optional<Permutation> attaining;
  // tightness_ratio within kDominanceSlack * max(1, C) of C.
  bool attains = false;

  // Reverse truncation only: a permutation with zero source regret and
  // positive target regret.
  bool divergence_observed = false;
  std::optional<Permutation> divergence_witness;

  // Dominance for a finite bound, observed divergence for a divergent one.
  bool passed() const { return bound.divergent ? divergence_observed : dominance; }
};

// Enumerates all permutations of `labels`. Throws InvalidArgumentError when
// the class counts disagree with the bound and CapacityError for n > 9.
BoundVerdict VerifyBound(const TransferBound& bound, const LabeledList& labels);

}  // namespace rankregret

#endif  // RANKREGRET_PSI_ESTIMATOR_H_
