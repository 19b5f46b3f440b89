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

#include "rankregret/bayes_oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rankregret/errors.h"

namespace rankregret {
namespace {

void CheckLengths(const RelevanceVector& eta, std::size_t n) {
  if (eta.size() != n) {
    throw InvalidArgumentError("eta has length " + std::to_string(eta.size()) +
                               ", expected " + std::to_string(n));
  }
}

double LinearUtility(const MetricSpec& spec, const RelevanceVector& eta,
                     const Permutation& perm) {
  const std::size_t n = perm.size();
  const std::size_t k = spec.truncation.value_or(n);
  if (k > n) throw InvalidArgumentError("cutoff exceeds list length");
  double top = 0.0;
  switch (spec.kind) {
    case MetricKind::kDcg:
      for (std::size_t r = 0; r < k; ++r) {
        top += Discount(r + 1, spec.log_base) * eta[perm[r]];
      }
      return top;
    case MetricKind::kPrecisionAtK:
      for (std::size_t r = 0; r < k; ++r) top += eta[perm[r]];
      return top / static_cast<double>(k);
    case MetricKind::kRecallAtK: {
      double total = 0.0;
      for (double e : eta.values()) total += e;
      for (std::size_t r = 0; r < k; ++r) top += eta[perm[r]];
      return total > 0.0 ? top / total : 0.0;
    }
    default:
      break;
  }
  throw InvalidArgumentError(spec.Name() + " is not a linear-utility metric");
}

double BestCutAccuracy(const RelevanceVector& eta, const Permutation& perm) {
  // Start with everything predicted negative and move the cut down.
  double correct = 0.0;
  for (std::size_t r = 0; r < perm.size(); ++r) correct += 1.0 - eta[perm[r]];
  double best = correct;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    const double e = eta[perm[r]];
    correct += e - (1.0 - e);
    best = std::max(best, correct);
  }
  return best / static_cast<double>(perm.size());
}

double PatternValue(const MetricSpec& spec, std::size_t n, std::size_t bits) {
  std::vector<int> labels(n);
  for (std::size_t r = 0; r < n; ++r) labels[r] = (bits >> r) & 1U;
  try {
    return EvalMetric(spec, LabeledList(std::move(labels)),
                      Permutation::Identity(n));
  } catch (const UndefinedMetricError&) {
    return 0.0;
  }
}

}  // namespace

bool IsGaddMember(const MetricSpec& spec) {
  return spec.kind == MetricKind::kDcg ||
         spec.kind == MetricKind::kPrecisionAtK ||
         spec.kind == MetricKind::kRecallAtK;
}

UtilityMethod MethodFor(const MetricSpec& spec) {
  if (IsGaddMember(spec)) return UtilityMethod::kGaddLinear;
  if (spec.kind == MetricKind::kAcc) return UtilityMethod::kThresholdLinear;
  return UtilityMethod::kExactEnumeration;
}

UtilityEvaluator::UtilityEvaluator(MetricSpec spec, std::size_t n)
    : spec_(spec), n_(n), method_(MethodFor(spec)) {
  spec_.Validate();
  if (n_ == 0) throw InvalidArgumentError("list length must be positive");
  if (spec_.truncation && *spec_.truncation > n_) {
    throw InvalidArgumentError("cutoff exceeds list length");
  }
  if (method_ != UtilityMethod::kExactEnumeration) return;
  if (n_ > kMaxExactEnumerationSize) {
    throw CapacityError("exact label enumeration for " + spec_.Name(), n_,
                        kMaxExactEnumerationSize);
  }
  pattern_values_.resize(std::size_t{1} << n_);
  for (std::size_t bits = 0; bits < pattern_values_.size(); ++bits) {
    pattern_values_[bits] = PatternValue(spec_, n_, bits);
  }
}

double UtilityEvaluator::Evaluate(const RelevanceVector& eta,
                                  const Permutation& perm) const {
  CheckLengths(eta, n_);
  if (perm.size() != n_) {
    throw InvalidArgumentError("permutation length does not match");
  }
  switch (method_) {
    case UtilityMethod::kGaddLinear:
      return LinearUtility(spec_, eta, perm);
    case UtilityMethod::kThresholdLinear:
      return BestCutAccuracy(eta, perm);
    case UtilityMethod::kExactEnumeration:
      return EvaluatePatterns(RankPatternDistribution(eta, perm));
  }
  return 0.0;
}

double UtilityEvaluator::EvaluatePatterns(
    std::span<const double> distribution) const {
  if (method_ != UtilityMethod::kExactEnumeration ||
      distribution.size() != pattern_values_.size()) {
    throw InvalidArgumentError("pattern distribution does not match evaluator");
  }
  double expectation = 0.0;
  for (std::size_t bits = 0; bits < distribution.size(); ++bits) {
    expectation += distribution[bits] * pattern_values_[bits];
  }
  return expectation;
}

std::vector<double> RankPatternDistribution(const RelevanceVector& eta,
                                            const Permutation& perm) {
  const std::size_t n = perm.size();
  CheckLengths(eta, n);
  if (n > kMaxExactEnumerationSize) {
    throw CapacityError("rank pattern distribution", n,
                        kMaxExactEnumerationSize);
  }
  std::vector<double> distribution(std::size_t{1} << n, 0.0);
  distribution[0] = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double p = eta[perm[r]];
    const std::size_t bit = std::size_t{1} << r;
    for (std::size_t bits = 0; bits < bit; ++bits) {
      const double mass = distribution[bits];
      distribution[bits | bit] = mass * p;
      distribution[bits] = mass * (1.0 - p);
    }
  }
  return distribution;
}

ExpectedUtility ComputeExpectedUtility(const MetricSpec& spec,
                                       const RelevanceVector& eta,
                                       const Permutation& perm) {
  if (eta.size() != perm.size()) {
    throw InvalidArgumentError("eta and permutation lengths differ");
  }
  const UtilityEvaluator evaluator(spec, perm.size());
  return {evaluator.Evaluate(eta, perm), spec, evaluator.method()};
}

double ExpectedAccuracyAtCut(const RelevanceVector& eta,
                             const Permutation& perm, std::size_t cut) {
  CheckLengths(eta, perm.size());
  if (cut > perm.size()) throw InvalidArgumentError("cut exceeds list length");
  double correct = 0.0;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    const double e = eta[perm[r]];
    correct += r < cut ? e : 1.0 - e;
  }
  return correct / static_cast<double>(perm.size());
}

double ExpectedAccuracy(const RelevanceVector& eta, const ScoreVector& scores,
                        double threshold) {
  CheckLengths(eta, scores.size());
  double correct = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    correct += scores[i] > threshold ? eta[i] : 1.0 - eta[i];
  }
  return correct / static_cast<double>(eta.size());
}

double BayesAccuracy(const RelevanceVector& eta) {
  double correct = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    // Same branch as ExpectedAccuracy with scores = eta, so a sign-consistent
    // predictor reproduces this sum bit for bit.
    correct += eta[i] > 0.5 ? eta[i] : 1.0 - eta[i];
  }
  return correct / static_cast<double>(eta.size());
}

bool OptimalSet::Contains(const Permutation& perm) const {
  return std::binary_search(permutations.begin(), permutations.end(), perm);
}

OptimalSet BayesOptimalSet(const MetricSpec& spec, const RelevanceVector& eta) {
  return BayesOptimalSets(std::span<const MetricSpec>(&spec, 1), eta).front();
}

std::vector<OptimalSet> BayesOptimalSets(std::span<const MetricSpec> specs,
                                         const RelevanceVector& eta) {
  const std::size_t n = eta.size();
  if (n > kMaxOptimalSetSize) {
    throw CapacityError("bayes-optimal set enumeration", n, kMaxOptimalSetSize);
  }
  std::vector<UtilityEvaluator> evaluators;
  bool needs_patterns = false;
  for (const MetricSpec& spec : specs) {
    evaluators.emplace_back(spec, n);
    needs_patterns |= evaluators.back().method() ==
                      UtilityMethod::kExactEnumeration;
  }

  std::vector<Permutation> perms;
  std::vector<std::vector<double>> utilities(specs.size());
  ForEachPermutation(n, [&](const Permutation& perm) {
    std::vector<double> distribution;
    if (needs_patterns) distribution = RankPatternDistribution(eta, perm);
    for (std::size_t s = 0; s < evaluators.size(); ++s) {
      const UtilityEvaluator& evaluator = evaluators[s];
      utilities[s].push_back(
          evaluator.method() == UtilityMethod::kExactEnumeration
              ? evaluator.EvaluatePatterns(distribution)
              : evaluator.Evaluate(eta, perm));
    }
    perms.push_back(perm);
  });

  std::vector<OptimalSet> sets(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto& values = utilities[s];
    OptimalSet& set = sets[s];
    set.max_utility = *std::max_element(values.begin(), values.end());
    for (std::size_t p = 0; p < perms.size(); ++p) {
      if (values[p] >= set.max_utility - set.tolerance) {
        set.permutations.push_back(perms[p]);
      }
    }
  }
  return sets;
}

bool IsOrderPreserving(const ScoreVector& scores, const RelevanceVector& eta) {
  if (scores.size() != eta.size()) {
    throw InvalidArgumentError("scores and eta lengths differ");
  }
  std::vector<std::size_t> items(eta.size());
  std::iota(items.begin(), items.end(), std::size_t{0});
  std::sort(items.begin(), items.end(),
            [&](std::size_t a, std::size_t b) { return eta[a] > eta[b]; });
  // Every score in a tie group must stay below all scores of strictly
  // higher-eta groups.
  double min_above = std::numeric_limits<double>::infinity();
  std::size_t begin = 0;
  while (begin < items.size()) {
    std::size_t end = begin;
    double group_min = std::numeric_limits<double>::infinity();
    while (end < items.size() && eta[items[end]] == eta[items[begin]]) {
      const double s = scores[items[end]];
      if (!(s < min_above)) return false;
      group_min = std::min(group_min, s);
      ++end;
    }
    min_above = std::min(min_above, group_min);
    begin = end;
  }
  return true;
}

bool IsSignConsistent(const ScoreVector& scores, const RelevanceVector& eta,
                      double tau) {
  if (scores.size() != eta.size()) {
    throw InvalidArgumentError("scores and eta lengths differ");
  }
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i] == 0.5) {
      throw MarginError("eta at item " + std::to_string(i + 1) +
                        " equals 0.5; sign consistency needs a positive margin");
    }
  }
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (!((scores[i] - tau) * (eta[i] - 0.5) > 0.0)) return false;
  }
  return true;
}

SubsumptionResult CheckSubsumption(const MetricSpec& a, const MetricSpec& b,
                                   const RelevanceVector& eta) {
  const MetricSpec specs[] = {a, b};
  const auto sets = BayesOptimalSets(specs, eta);
  return CheckSubsumption(sets[0], sets[1]);
}

SubsumptionResult CheckSubsumption(const OptimalSet& a, const OptimalSet& b) {
  for (const Permutation& perm : a.permutations) {
    if (!b.Contains(perm)) return {false, perm};
  }
  return {true, std::nullopt};
}

}  // namespace rankregret
