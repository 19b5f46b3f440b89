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

// Bayes-optimal orderings on small instances.
//
// A predictor enters a metric only through the ranking it induces (and, for
// Acc, where it places the decision threshold), so on a finite list the
// Bayes-optimal set is a set of permutations. Expected utilities are computed
// either in closed form, for metrics whose utility is linear in eta, or by
// enumerating all 2^n label realizations.

#ifndef RANKREGRET_BAYES_ORACLE_H_
#define RANKREGRET_BAYES_ORACLE_H_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "rankregret/metrics.h"
#include "rankregret/types.h"

namespace rankregret {

enum class UtilityMethod {
  // sum_i w(i) eta_{sigma(i)} with label-independent position weights.
  kGaddLinear,
  // Acc: best placement of the threshold along the ranking, linear in eta.
  kThresholdLinear,
  // Exact expectation over every label vector y with weight
  // prod eta^y (1 - eta)^(1 - y).
  kExactEnumeration,
};

inline constexpr std::size_t kMaxExactEnumerationSize = 14;
inline constexpr std::size_t kMaxOptimalSetSize = 8;
inline constexpr double kOptimalSetTolerance = 1e-12;

struct ExpectedUtility {
  double value = 0.0;
  MetricSpec spec;
  UtilityMethod method = UtilityMethod::kGaddLinear;
};

// DCG, P@k and R@k: fixed position weights, utility linear in eta. R@k uses
// the expected positive count sum(eta) as its (ranking-independent)
// normalizer.
bool IsGaddMember(const MetricSpec& spec);

UtilityMethod MethodFor(const MetricSpec& spec);

// Expected utility of one metric on lists of a fixed length. For the
// enumerated metrics the constructor tabulates the metric on all 2^n
// rank-order label patterns; realizations on which the metric is undefined
// (AUC with one class, NDCG or MAP without positives) contribute 0.
class UtilityEvaluator {
 public:
  // Throws CapacityError when enumeration is needed and n exceeds
  // kMaxExactEnumerationSize.
  UtilityEvaluator(MetricSpec spec, std::size_t n);

  const MetricSpec& spec() const { return spec_; }
  UtilityMethod method() const { return method_; }

  double Evaluate(const RelevanceVector& eta, const Permutation& perm) const;

  // Same, given the precomputed distribution of rank-order label patterns
  // (see RankPatternDistribution). Only valid for kExactEnumeration.
  double EvaluatePatterns(std::span<const double> distribution) const;

 private:
  MetricSpec spec_;
  std::size_t n_;
  UtilityMethod method_;
  std::vector<double> pattern_values_;
};

// Probability of every rank-order label pattern: bit r of the index is the
// label of the item at rank r.
std::vector<double> RankPatternDistribution(const RelevanceVector& eta,
                                            const Permutation& perm);

// One-off evaluation. Throws InvalidArgumentError on length mismatch.
ExpectedUtility ComputeExpectedUtility(const MetricSpec& spec,
                                       const RelevanceVector& eta,
                                       const Permutation& perm);

// Expected accuracy when the top `cut` ranks are predicted positive.
double ExpectedAccuracyAtCut(const RelevanceVector& eta,
                             const Permutation& perm, std::size_t cut);

// Expected accuracy of thresholding `scores` at `threshold`.
double ExpectedAccuracy(const RelevanceVector& eta, const ScoreVector& scores,
                        double threshold);

// Expected accuracy of the Bayes classifier, mean of max(eta, 1 - eta).
double BayesAccuracy(const RelevanceVector& eta);

struct OptimalSet {
  // Lexicographically sorted.
  std::vector<Permutation> permutations;
  double max_utility = 0.0;
  double tolerance = kOptimalSetTolerance;

  bool Contains(const Permutation& perm) const;
  std::size_t size() const { return permutations.size(); }
};

// Enumerates all n! orderings. Throws CapacityError for n > 8.
OptimalSet BayesOptimalSet(const MetricSpec& spec, const RelevanceVector& eta);

// Several metrics over one shared enumeration.
std::vector<OptimalSet> BayesOptimalSets(std::span<const MetricSpec> specs,
                                         const RelevanceVector& eta);

// True iff eta_i > eta_j implies s_i > s_j for every pair.
bool IsOrderPreserving(const ScoreVector& scores, const RelevanceVector& eta);

// True iff (s_i - tau)(eta_i - 0.5) > 0 for every item. Throws MarginError
// when some eta_i equals 0.5.
bool IsSignConsistent(const ScoreVector& scores, const RelevanceVector& eta,
                      double tau);

struct SubsumptionResult {
  bool holds = false;
  // On failure, a permutation optimal for A but not for B.
  std::optional<Permutation> witness;
};

// Whether the optimal set of `a` is contained in that of `b`.
SubsumptionResult CheckSubsumption(const MetricSpec& a, const MetricSpec& b,
                                   const RelevanceVector& eta);
SubsumptionResult CheckSubsumption(const OptimalSet& a, const OptimalSet& b);

// Calls `visit` with every permutation of [0, n) in lexicographic order.
template <typename Visitor>
void ForEachPermutation(std::size_t n, Visitor&& visit) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    visit(Permutation(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace rankregret

#endif  // RANKREGRET_BAYES_ORACLE_H_
