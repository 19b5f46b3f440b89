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

// Closed-form regret-transfer coefficients between metric groups.
//
// A transfer bound is a linear Psi(eps) = C * eps promising that any ranking
// with source regret eps has target regret at most C * eps. Coefficients for
// AUC <-> NDCG depend on the class counts and the discount; those into Acc
// also depend on the margin delta = min |eta - 0.5|.

#ifndef RANKREGRET_TRANSFER_BOUNDS_H_
#define RANKREGRET_TRANSFER_BOUNDS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankregret/metrics.h"
#include "rankregret/types.h"

namespace rankregret {

struct WeightDifferentials {
  double delta_max = 0.0;  // w(1) - w(2)
  double delta_min = 0.0;  // w(n - 1) - w(n)
  std::size_t n = 0;
};

// Throws InvalidArgumentError for n < 3.
WeightDifferentials DeltaExtremes(std::size_t n, double log_base);

enum class TransferDirection {
  kAucToNdcg,
  kNdcgToAuc,
  kAucToAcc,
  kNdcgToAcc,
  // Truncated metric at k2 bounding the same metric at k1 < k2.
  kTruncation,
  // k1 bounding k2; has no finite coefficient.
  kTruncationReverse,
};

std::string_view DirectionName(TransferDirection direction);

// Accepts "auc-ndcg", "ndcg-auc", "auc-acc", "ndcg-acc", "trunc",
// "trunc-reverse".
TransferDirection ParseDirection(std::string_view name);

struct BoundParams {
  std::size_t n = 0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::optional<double> margin;
  std::optional<std::size_t> k1;
  std::optional<std::size_t> k2;
  double log_base = kNaturalLogBase;
  // Truncated metric for the truncation directions (P@k, R@k or NDCG@k).
  std::optional<MetricKind> truncated_kind;
};

struct TransferBound {
  TransferDirection direction = TransferDirection::kAucToNdcg;
  // Absent exactly when `divergent` is set.
  std::optional<double> coefficient;
  // Psi(0) > 0: no linear bound exists.
  bool divergent = false;
  BoundParams params;

  // C * eps. Throws InvalidArgumentError on a divergent bound.
  double Psi(double eps) const;
};

// C = delta_max n+ n- / sum_{i <= n+} w(i).
TransferBound CoeffAucToNdcg(std::size_t n_pos, std::size_t n_neg,
                             double log_base = kNaturalLogBase);

// C = sum_{i <= n+} w(i) / (n+ n- delta_min).
TransferBound CoeffNdcgToAuc(std::size_t n_pos, std::size_t n_neg,
                             double log_base = kNaturalLogBase);

// C = n+ n- / (n delta). Throws MarginError unless 0 < delta <= 0.5.
TransferBound CoeffAucToAcc(std::size_t n_pos, std::size_t n_neg,
                            double margin);

// C = IDCG_n / (n delta w(n)).
TransferBound CoeffNdcgToAcc(std::size_t n_pos, std::size_t n_neg,
                             double margin, double log_base = kNaturalLogBase);

// k2/k1 for P@k and R@k, IDCG_k2 / IDCG_k1 for NDCG@k. With `reverse` the
// result is a divergence marker. Throws InvalidArgumentError unless
// 1 <= k1 < k2 <= n, and UndefinedMetricError for NDCG without positives.
TransferBound CoeffTruncation(std::size_t k1, std::size_t k2, MetricKind kind,
                              const LabeledList& labels, bool reverse = false,
                              double log_base = 2.0);

// Dispatches on `direction`; truncation directions need k1, k2 and a kind in
// `params`, the Acc directions a margin.
TransferBound MakeBound(TransferDirection direction, const BoundParams& params);

struct RegretPair {
  double source = 0.0;
  double target = 0.0;
};

// Source and target absolute regrets of `perm` under the bound's convention.
//
// AUC <-> NDCG: AUC regret is the fraction of misordered positive-negative
// pairs, NDCG regret is 1 - DCG / IDCG.
//
// Into Acc: relevance is eta_i = 0.5 + delta for positives and 0.5 - delta
// for negatives, the top n+ ranks are predicted positive and Acc regret is
// the misclassified fraction. AUC regret weights each misordered pair by its
// eta gap and divides by n+ n-; NDCG regret is the eta-weighted DCG gap to
// the ideal order divided by the label IDCG.
//
// Truncation: regret of the metric at k2 (source) and k1 (target), swapped
// for the reverse direction.
RegretPair TransferRegrets(const TransferBound& bound,
                           const LabeledList& labels, const Permutation& perm);

struct WorstCase {
  LabeledList labels;
  Permutation perm;
  RegretPair regrets;
};

// Instance on which the bound is meant to be attained. Items 0..n+-1 are the
// positives.
//   AUC -> NDCG: the first negative is moved to rank 1.
//   NDCG -> AUC, NDCG -> Acc: the last positive is moved to rank n.
//   AUC -> Acc: the positive at rank n+ swaps with the negative at n+ + 1.
// Throws InvalidArgumentError for n < 3, n+ outside [1, n - 1], or a
// truncation direction.
WorstCase WorstCaseConstruct(const TransferBound& bound);

struct PointwiseWitness {
  RelevanceVector eta;
  ScoreVector scores;
};

// eta_1 = 0.9 > eta_2 = 0.6 > 0.5 > remaining items, with scores that invert
// the first two items while staying above the threshold: zero Acc regret,
// strictly positive ranking regret. Throws InvalidArgumentError for n < 2.
PointwiseWitness PointwiseFailureWitness(std::size_t n, double threshold = 0.5);

enum class RateScenario { kBalanced, kImbalanced };

// Ranking-to-listwise and so on, in the asymptotic-rate vocabulary:
// R = AUC, L = NDCG, P = Acc.
enum class RateDirection { kRankToList, kListToRank, kRankToPoint, kListToPoint };

std::string_view ScenarioName(RateScenario scenario);
std::string_view RateDirectionName(RateDirection direction);
RateScenario ParseScenario(std::string_view name);

struct RatePoint {
  std::size_t n = 0;
  double coefficient = 0.0;
};

struct RateFit {
  RateScenario scenario = RateScenario::kBalanced;
  RateDirection direction = RateDirection::kRankToList;
  // Least squares of log C against log n.
  double slope = 0.0;
  double intercept = 0.0;
  // Predicted growth g(n), e.g. "n ln n", and max/min of C(n)/g(n).
  std::string growth;
  double spread = 0.0;
  double margin = 0.0;
  std::vector<RatePoint> points;
};

// Predicted growth of the coefficient.
double PredictedGrowth(RateScenario scenario, RateDirection direction,
                       std::size_t n);
std::string_view PredictedGrowthName(RateScenario scenario,
                                     RateDirection direction);

// n+ = floor(n / 2) (balanced) or 1 (imbalanced). Throws InvalidArgumentError
// unless the grid has at least 5 strictly increasing points, all >= 10.
RateFit AsymptoticRateScan(RateScenario scenario, RateDirection direction,
                           std::span<const std::size_t> grid,
                           double margin = 0.25,
                           double log_base = kNaturalLogBase);

}  // namespace rankregret

#endif  // RANKREGRET_TRANSFER_BOUNDS_H_
