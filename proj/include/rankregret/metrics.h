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

// Exact evaluation of binary-relevance ranking and classification metrics.
//
// Every metric is a function of the labels read in rank order. A ranking is
// a Permutation; RankByScores turns predictor scores into one. Values of the
// normalized metrics lie in [0, 1]; DCG is the only unnormalized member and
// is exposed for regret accounting in natural units.

#ifndef RANKREGRET_METRICS_H_
#define RANKREGRET_METRICS_H_

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "rankregret/types.h"

namespace rankregret {

enum class MetricGroup { kPointwise, kPairwise, kListwise };

enum class MetricKind {
  kAcc,
  kPrecisionAtK,
  kRecallAtK,
  kAuc,
  kNdcg,
  kDcg,
  kMap,
  kMrr,
};

inline constexpr double kNaturalLogBase = std::numbers::e;

struct MetricSpec {
  MetricKind kind = MetricKind::kNdcg;
  // Cutoff k. Absent means the whole list (k = n).
  std::optional<std::size_t> truncation;
  // Base of the logarithm in the DCG discount 1 / log_b(1 + i).
  double log_base = 2.0;
  // Decision threshold for Acc: an item is predicted positive iff score > tau.
  double threshold = 0.5;

  MetricGroup group() const;

  // Short lowercase name, e.g. "ndcg@10", "auc", "acc".
  std::string Name() const;

  // Throws InvalidArgumentError when the spec is malformed independently of
  // any instance (bad base, threshold, or a cutoff on a metric without one).
  void Validate() const;

  static MetricSpec Acc(double threshold = 0.5);
  static MetricSpec PrecisionAt(std::size_t k);
  static MetricSpec RecallAt(std::size_t k);
  static MetricSpec Auc();
  static MetricSpec Ndcg(std::optional<std::size_t> k = std::nullopt,
                         double log_base = 2.0);
  static MetricSpec Dcg(std::optional<std::size_t> k = std::nullopt,
                        double log_base = 2.0);
  static MetricSpec Map(std::optional<std::size_t> k = std::nullopt);
  static MetricSpec Mrr(std::optional<std::size_t> k = std::nullopt);

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

std::string_view KindName(MetricKind kind);
std::string_view GroupName(MetricGroup group);

// Parses names such as "ndcg", "ndcg@10", "p@5", "recall@3", "map", "mrr@2",
// "auc", "acc", "dcg@4". Throws InvalidArgumentError on anything else.
MetricSpec ParseMetricSpec(std::string_view name);

// Discount weight w(i) = 1 / log_b(1 + i) at 1-based position i.
double Discount(std::size_t position, double log_base);

// w(i) - w(i + 1), evaluated without cancellation.
double DiscountDifference(std::size_t position, double log_base);

// Sum of w(1..m); the ideal DCG of a list with m positives.
double DiscountPrefixSum(std::size_t m, double log_base);

// Sorts items by descending score; ties keep ascending item order.
// Throws InvalidArgumentError on an empty score vector.
Permutation RankByScores(const ScoreVector& scores);

// Positives first, each class in ascending item order.
Permutation IdealPermutation(const LabeledList& labels);

// Metric value of `perm` on `labels`. Throws UndefinedMetricError for AUC on a
// one-class list and for NDCG, MAP, R@k with no positives; throws
// InvalidArgumentError on size mismatch, k > n, or kind == kAcc (which needs
// scores or an explicit cut).
double EvalMetric(const MetricSpec& spec, const LabeledList& labels,
                  const Permutation& perm);

// Accuracy of thresholding `scores` at spec.threshold.
double EvalAccuracy(const MetricSpec& spec, const LabeledList& labels,
                    const ScoreVector& scores);

// Accuracy when the top `cut` ranks are predicted positive.
double EvalAccuracyAtCut(const LabeledList& labels, const Permutation& perm,
                         std::size_t cut);

// Value of the label-sorted ranking: 1 for every normalized metric with a
// positive available, min(k, n+)/k for P@k, IDCG for DCG.
double IdealValue(const MetricSpec& spec, const LabeledList& labels);

// Unnormalized DCG over the top k ranks (all ranks when k is absent).
double Dcg(const LabeledList& labels, const Permutation& perm,
           std::optional<std::size_t> k, double log_base);

// IDCG_k for the given labels.
double IdealDcg(const LabeledList& labels, std::optional<std::size_t> k,
                double log_base);

struct RegretReport {
  double value = 0.0;
  double ideal = 0.0;
  double regret_abs = 0.0;  // ideal - value
  double regret_rel = 0.0;  // 1 - value / ideal, 0 when ideal == 0
  // Set when the metric is degenerate but defined as 0 (MRR without
  // positives).
  bool degenerate = false;
};

// Regret of the ranking (or, for Acc, the thresholding) induced by `scores`.
// Counting metrics (Acc, P@k, R@k, AUC) compute regret_abs from integer
// counts, so e.g. one misordered pair out of ten is exactly 0.1.
RegretReport MetricRegret(const MetricSpec& spec, const LabeledList& labels,
                          const ScoreVector& scores);

// Same for an explicit ranking. Rejects kAcc.
RegretReport MetricRegret(const MetricSpec& spec, const LabeledList& labels,
                          const Permutation& perm);

// Regret of predicting the top `cut` ranks positive.
RegretReport AccuracyRegretAtCut(const LabeledList& labels,
                                 const Permutation& perm, std::size_t cut);

// Graded forms with eta as fractional relevance. GradedAuc is the expected
// number of correctly ordered positive-negative pairs over its maximum
// possible count sum_{a != b} eta_a (1 - eta_b); both reduce to AUC/NDCG when
// eta is binary.
double GradedAuc(const RelevanceVector& eta, const Permutation& perm);
double GradedDcg(const RelevanceVector& eta, const Permutation& perm,
                 double log_base);
double GradedNdcg(const RelevanceVector& eta, const Permutation& perm,
                  double log_base);

// Descending-eta ranking (RankByScores on eta).
Permutation BayesOrder(const RelevanceVector& eta);

// Labels obtained by thresholding eta: 1 iff eta > 0.5.
LabeledList BayesLabels(const RelevanceVector& eta);

}  // namespace rankregret

#endif  // RANKREGRET_METRICS_H_
