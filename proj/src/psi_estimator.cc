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

#include "rankregret/psi_estimator.h"

#include <algorithm>
#include <cmath>

#include "rankregret/bayes_oracle.h"
#include "rankregret/errors.h"

namespace rankregret {
namespace {

bool IsAcc(const MetricSpec& spec) { return spec.kind == MetricKind::kAcc; }

// Calls visit(perm, cut) for every permutation, and every cut when Acc is
// involved.
template <typename Visitor>
void ForEachRanking(std::size_t n, bool with_cuts, Visitor&& visit) {
  ForEachPermutation(n, [&](const Permutation& perm) {
    if (!with_cuts) {
      visit(perm, std::optional<std::size_t>());
      return;
    }
    for (std::size_t cut = 0; cut <= n; ++cut) visit(perm, cut);
  });
}

}  // namespace

double PsiCurve::At(double eps) const {
  double value = 0.0;
  for (const PsiPoint& p : points) {
    if (p.epsilon > eps) break;
    value = p.psi;
  }
  return value;
}

std::vector<RegretSample> EnumerateRegretPairs(const MetricSpec& source,
                                               const MetricSpec& target,
                                               const LabeledList& labels) {
  const std::size_t n = labels.size();
  if (n > kMaxPsiSize) throw CapacityError("psi enumeration", n, kMaxPsiSize);
  source.Validate();
  target.Validate();
  std::vector<RegretSample> samples;
  std::optional<double> source_fixed;
  std::optional<double> target_fixed;
  ForEachRanking(n, IsAcc(source) || IsAcc(target),
                 [&](const Permutation& perm, std::optional<std::size_t> cut) {
    if (!cut || *cut == 0) {
      // First visit of this permutation: refresh the cut-independent regrets.
      if (!IsAcc(source)) {
        source_fixed = MetricRegret(source, labels, perm).regret_abs;
      }
      if (!IsAcc(target)) {
        target_fixed = MetricRegret(target, labels, perm).regret_abs;
      }
    }
    RegretSample s{0.0, 0.0, perm, cut};
    s.source = IsAcc(source)
                   ? AccuracyRegretAtCut(labels, perm, *cut).regret_abs
                   : *source_fixed;
    s.target = IsAcc(target)
                   ? AccuracyRegretAtCut(labels, perm, *cut).regret_abs
                   : *target_fixed;
    samples.push_back(std::move(s));
  });
  return samples;
}

std::vector<RegretSample> EnumerateExpectedRegretPairs(
    const MetricSpec& source, const MetricSpec& target,
    const RelevanceVector& eta) {
  const std::size_t n = eta.size();
  if (n > kMaxExpectedPsiSize) {
    throw CapacityError("expected psi enumeration", n, kMaxExpectedPsiSize);
  }
  std::optional<UtilityEvaluator> source_eval;
  std::optional<UtilityEvaluator> target_eval;
  if (!IsAcc(source)) source_eval.emplace(source, n);
  if (!IsAcc(target)) target_eval.emplace(target, n);

  auto utility = [&](const std::optional<UtilityEvaluator>& eval,
                     const Permutation& perm, std::optional<std::size_t> cut) {
    return eval ? eval->Evaluate(eta, perm)
                : ExpectedAccuracyAtCut(eta, perm, *cut);
  };
  std::vector<RegretSample> samples;
  ForEachRanking(n, IsAcc(source) || IsAcc(target),
                 [&](const Permutation& perm, std::optional<std::size_t> cut) {
    samples.push_back({utility(source_eval, perm, cut),
                       utility(target_eval, perm, cut), perm, cut});
  });
  double best_source = samples.front().source;
  double best_target = samples.front().target;
  for (const RegretSample& s : samples) {
    best_source = std::max(best_source, s.source);
    best_target = std::max(best_target, s.target);
  }
  for (RegretSample& s : samples) {
    s.source = best_source - s.source;
    s.target = best_target - s.target;
  }
  return samples;
}

std::vector<double> UniformGrid(std::size_t points, double max_eps) {
  if (points < 2) throw InvalidArgumentError("grid needs at least 2 points");
  if (!(max_eps >= 0.0)) throw InvalidArgumentError("grid maximum must be >= 0");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = max_eps * static_cast<double>(i) /
              static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<PsiPoint> PsiFromSamples(std::span<const RegretSample> samples,
                                     std::optional<std::vector<double>> grid) {
  std::vector<std::pair<double, double>> sorted;
  sorted.reserve(samples.size());
  for (const RegretSample& s : samples) sorted.emplace_back(s.source, s.target);
  std::sort(sorted.begin(), sorted.end());

  if (!grid) {
    grid.emplace();
    for (const auto& [source, target] : sorted) {
      if (grid->empty() || source != grid->back()) grid->push_back(source);
    }
  } else {
    std::sort(grid->begin(), grid->end());
  }

  std::vector<PsiPoint> points;
  points.reserve(grid->size());
  std::size_t next = 0;
  double sup = 0.0;
  for (double eps : *grid) {
    while (next < sorted.size() && sorted[next].first <= eps + kPsiTolerance) {
      sup = std::max(sup, sorted[next].second);
      ++next;
    }
    points.push_back({eps, sup});
  }
  return points;
}

PsiCurve PsiBrute(const MetricSpec& source, const MetricSpec& target,
                  const LabeledList& labels,
                  std::optional<std::vector<double>> eps_grid) {
  const auto samples = EnumerateRegretPairs(source, target, labels);
  PsiCurve curve{source, target, labels.size(), labels, std::nullopt, {}};
  curve.points = PsiFromSamples(samples, std::move(eps_grid));
  return curve;
}

PsiCurve PsiBruteExpected(const MetricSpec& source, const MetricSpec& target,
                          const RelevanceVector& eta,
                          std::optional<std::vector<double>> eps_grid) {
  const auto samples = EnumerateExpectedRegretPairs(source, target, eta);
  PsiCurve curve{source, target, eta.size(), std::nullopt, eta, {}};
  curve.points = PsiFromSamples(samples, std::move(eps_grid));
  return curve;
}

BoundVerdict VerifyBound(const TransferBound& bound,
                         const LabeledList& labels) {
  const std::size_t n = labels.size();
  if (n > kMaxPsiSize) throw CapacityError("bound verification", n, kMaxPsiSize);
  if (labels.num_positive() != bound.params.n_pos ||
      labels.num_negative() != bound.params.n_neg) {
    throw InvalidArgumentError("labels do not match the bound's class counts");
  }
  BoundVerdict verdict;
  verdict.bound = bound;
  const double c = bound.coefficient.value_or(0.0);
  bool first = true;
  ForEachPermutation(n, [&](const Permutation& perm) {
    ++verdict.enumerated;
    const RegretPair r = TransferRegrets(bound, labels, perm);
    if (bound.divergent) {
      if (!verdict.divergence_observed && r.source <= kPsiTolerance &&
          r.target > kPsiTolerance) {
        verdict.divergence_observed = true;
        verdict.divergence_witness = perm;
      }
      return;
    }
    const double slack = c * r.source - r.target;
    if (first || slack < verdict.min_slack) {
      verdict.min_slack = slack;
      if (slack < -kDominanceSlack) {
        verdict.violation = perm;
        verdict.violation_regrets = r;
      }
    }
    first = false;
    if (r.source > 0.0) {
      const double ratio = r.target / r.source;
      if (!verdict.attaining || ratio > verdict.tightness_ratio) {
        verdict.tightness_ratio = ratio;
        verdict.attaining = perm;
      }
    }
  });
  if (!bound.divergent) {
    verdict.dominance = verdict.min_slack >= -kDominanceSlack;
    verdict.attains = std::abs(verdict.tightness_ratio - c) <=
                      kDominanceSlack * std::max(1.0, c);
  } else {
    verdict.dominance = false;
  }
  return verdict;
}

}  // namespace rankregret
