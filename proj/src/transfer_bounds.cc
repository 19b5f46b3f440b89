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

#include "rankregret/transfer_bounds.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rankregret/errors.h"

namespace rankregret {
namespace {

void CheckClasses(std::size_t n_pos, std::size_t n_neg) {
  if (n_pos < 1 || n_neg < 1) {
    throw InvalidArgumentError("both classes must be non-empty (n+ = " +
                               std::to_string(n_pos) + ", n- = " +
                               std::to_string(n_neg) + ")");
  }
}

void CheckMargin(double margin) {
  if (!(margin > 0.0 && margin <= 0.5)) {
    throw MarginError("margin must lie in (0, 0.5], got " +
                      std::to_string(margin));
  }
}

BoundParams ClassParams(std::size_t n_pos, std::size_t n_neg,
                        double log_base) {
  BoundParams params;
  params.n = n_pos + n_neg;
  params.n_pos = n_pos;
  params.n_neg = n_neg;
  params.log_base = log_base;
  return params;
}

double MarginEta(const LabeledList& labels, std::size_t item, double margin) {
  return labels[item] == 1 ? 0.5 + margin : 0.5 - margin;
}

RegretPair MarginRegrets(const TransferBound& bound, const LabeledList& labels,
                         const Permutation& perm) {
  const double margin = bound.params.margin.value();
  const std::size_t n = labels.size();
  RegretPair out;
  if (bound.direction == TransferDirection::kAucToAcc) {
    double gap = 0.0;
    std::size_t negatives_above = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t item = perm[r];
      if (labels[item] == 0) {
        ++negatives_above;
      } else {
        gap += static_cast<double>(negatives_above) *
               (MarginEta(labels, item, margin) - (0.5 - margin));
      }
    }
    out.source = gap / static_cast<double>(labels.num_positive() *
                                           labels.num_negative());
  } else {
    const double base = bound.params.log_base;
    const Permutation ideal = IdealPermutation(labels);
    double gap = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      gap += Discount(r + 1, base) * (MarginEta(labels, ideal[r], margin) -
                                      MarginEta(labels, perm[r], margin));
    }
    out.source = gap / IdealDcg(labels, std::nullopt, base);
  }
  out.target =
      AccuracyRegretAtCut(labels, perm, labels.num_positive()).regret_abs;
  return out;
}

MetricSpec TruncatedSpec(const BoundParams& params, std::size_t k) {
  switch (params.truncated_kind.value()) {
    case MetricKind::kPrecisionAtK: return MetricSpec::PrecisionAt(k);
    case MetricKind::kRecallAtK: return MetricSpec::RecallAt(k);
    case MetricKind::kNdcg: return MetricSpec::Ndcg(k, params.log_base);
    default: break;
  }
  throw InvalidArgumentError("truncation bounds cover p@k, r@k and ndcg@k");
}

}  // namespace

WeightDifferentials DeltaExtremes(std::size_t n, double log_base) {
  if (n < 3) {
    throw InvalidArgumentError("weight differentials need n >= 3, got " +
                               std::to_string(n));
  }
  return {DiscountDifference(1, log_base), DiscountDifference(n - 1, log_base),
          n};
}

std::string_view DirectionName(TransferDirection direction) {
  switch (direction) {
    case TransferDirection::kAucToNdcg: return "auc-ndcg";
    case TransferDirection::kNdcgToAuc: return "ndcg-auc";
    case TransferDirection::kAucToAcc: return "auc-acc";
    case TransferDirection::kNdcgToAcc: return "ndcg-acc";
    case TransferDirection::kTruncation: return "trunc";
    case TransferDirection::kTruncationReverse: return "trunc-reverse";
  }
  return "?";
}

TransferDirection ParseDirection(std::string_view name) {
  for (auto d : {TransferDirection::kAucToNdcg, TransferDirection::kNdcgToAuc,
                 TransferDirection::kAucToAcc, TransferDirection::kNdcgToAcc,
                 TransferDirection::kTruncation,
                 TransferDirection::kTruncationReverse}) {
    if (DirectionName(d) == name) return d;
  }
  throw InvalidArgumentError("unknown direction '" + std::string(name) + "'");
}

double TransferBound::Psi(double eps) const {
  if (divergent || !coefficient) {
    throw InvalidArgumentError(std::string(DirectionName(direction)) +
                               " has no finite transfer coefficient");
  }
  return *coefficient * eps;
}

TransferBound CoeffAucToNdcg(std::size_t n_pos, std::size_t n_neg,
                             double log_base) {
  CheckClasses(n_pos, n_neg);
  const auto deltas = DeltaExtremes(n_pos + n_neg, log_base);
  const double pairs = static_cast<double>(n_pos) * static_cast<double>(n_neg);
  return {TransferDirection::kAucToNdcg,
          deltas.delta_max * pairs / DiscountPrefixSum(n_pos, log_base), false,
          ClassParams(n_pos, n_neg, log_base)};
}

TransferBound CoeffNdcgToAuc(std::size_t n_pos, std::size_t n_neg,
                             double log_base) {
  CheckClasses(n_pos, n_neg);
  const auto deltas = DeltaExtremes(n_pos + n_neg, log_base);
  const double pairs = static_cast<double>(n_pos) * static_cast<double>(n_neg);
  return {TransferDirection::kNdcgToAuc,
          DiscountPrefixSum(n_pos, log_base) / (pairs * deltas.delta_min),
          false, ClassParams(n_pos, n_neg, log_base)};
}

TransferBound CoeffAucToAcc(std::size_t n_pos, std::size_t n_neg,
                            double margin) {
  CheckClasses(n_pos, n_neg);
  CheckMargin(margin);
  const double n = static_cast<double>(n_pos + n_neg);
  BoundParams params = ClassParams(n_pos, n_neg, kNaturalLogBase);
  params.margin = margin;
  return {TransferDirection::kAucToAcc,
          static_cast<double>(n_pos) * static_cast<double>(n_neg) /
              (n * margin),
          false, params};
}

TransferBound CoeffNdcgToAcc(std::size_t n_pos, std::size_t n_neg,
                             double margin, double log_base) {
  CheckClasses(n_pos, n_neg);
  CheckMargin(margin);
  const std::size_t n = n_pos + n_neg;
  BoundParams params = ClassParams(n_pos, n_neg, log_base);
  params.margin = margin;
  return {TransferDirection::kNdcgToAcc,
          DiscountPrefixSum(n_pos, log_base) /
              (static_cast<double>(n) * margin * Discount(n, log_base)),
          false, params};
}

TransferBound CoeffTruncation(std::size_t k1, std::size_t k2, MetricKind kind,
                              const LabeledList& labels, bool reverse,
                              double log_base) {
  if (!(k1 >= 1 && k1 < k2 && k2 <= labels.size())) {
    throw InvalidArgumentError("truncation needs 1 <= k1 < k2 <= n (k1 = " +
                               std::to_string(k1) + ", k2 = " +
                               std::to_string(k2) + ", n = " +
                               std::to_string(labels.size()) + ")");
  }
  BoundParams params = ClassParams(labels.num_positive(),
                                   labels.num_negative(), log_base);
  params.k1 = k1;
  params.k2 = k2;
  params.truncated_kind = kind;
  TruncatedSpec(params, k1);  // rejects unsupported kinds
  TransferBound bound{reverse ? TransferDirection::kTruncationReverse
                              : TransferDirection::kTruncation,
                      std::nullopt, reverse, params};
  if (reverse) return bound;
  if (kind == MetricKind::kNdcg) {
    if (labels.num_positive() == 0) {
      throw UndefinedMetricError("ndcg@k is undefined without positives");
    }
    bound.coefficient = IdealDcg(labels, k2, log_base) /
                        IdealDcg(labels, k1, log_base);
  } else {
    bound.coefficient = static_cast<double>(k2) / static_cast<double>(k1);
  }
  return bound;
}

TransferBound MakeBound(TransferDirection direction,
                        const BoundParams& params) {
  switch (direction) {
    case TransferDirection::kAucToNdcg:
      return CoeffAucToNdcg(params.n_pos, params.n_neg, params.log_base);
    case TransferDirection::kNdcgToAuc:
      return CoeffNdcgToAuc(params.n_pos, params.n_neg, params.log_base);
    case TransferDirection::kAucToAcc:
      if (!params.margin) throw MarginError("auc-acc needs a margin");
      return CoeffAucToAcc(params.n_pos, params.n_neg, *params.margin);
    case TransferDirection::kNdcgToAcc:
      if (!params.margin) throw MarginError("ndcg-acc needs a margin");
      return CoeffNdcgToAcc(params.n_pos, params.n_neg, *params.margin,
                            params.log_base);
    case TransferDirection::kTruncation:
    case TransferDirection::kTruncationReverse:
      if (!params.k1 || !params.k2 || !params.truncated_kind) {
        throw InvalidArgumentError("truncation needs k1, k2 and a metric");
      }
      return CoeffTruncation(
          *params.k1, *params.k2, *params.truncated_kind,
          LabeledList::Sorted(params.n_pos + params.n_neg, params.n_pos),
          direction == TransferDirection::kTruncationReverse,
          params.log_base);
  }
  throw InvalidArgumentError("unknown direction");
}

RegretPair TransferRegrets(const TransferBound& bound,
                           const LabeledList& labels, const Permutation& perm) {
  if (labels.size() != perm.size()) {
    throw InvalidArgumentError("labels and permutation lengths differ");
  }
  const BoundParams& params = bound.params;
  switch (bound.direction) {
    case TransferDirection::kAucToNdcg:
    case TransferDirection::kNdcgToAuc: {
      const double auc =
          MetricRegret(MetricSpec::Auc(), labels, perm).regret_abs;
      const double ndcg =
          MetricRegret(MetricSpec::Ndcg(std::nullopt, params.log_base), labels,
                       perm)
              .regret_abs;
      return bound.direction == TransferDirection::kAucToNdcg
                 ? RegretPair{auc, ndcg}
                 : RegretPair{ndcg, auc};
    }
    case TransferDirection::kAucToAcc:
    case TransferDirection::kNdcgToAcc:
      return MarginRegrets(bound, labels, perm);
    case TransferDirection::kTruncation:
    case TransferDirection::kTruncationReverse: {
      const double at_k1 =
          MetricRegret(TruncatedSpec(params, *params.k1), labels, perm)
              .regret_abs;
      const double at_k2 =
          MetricRegret(TruncatedSpec(params, *params.k2), labels, perm)
              .regret_abs;
      return bound.direction == TransferDirection::kTruncation
                 ? RegretPair{at_k2, at_k1}
                 : RegretPair{at_k1, at_k2};
    }
  }
  throw InvalidArgumentError("unknown direction");
}

WorstCase WorstCaseConstruct(const TransferBound& bound) {
  const std::size_t n = bound.params.n;
  const std::size_t n_pos = bound.params.n_pos;
  if (n < 3 || n_pos < 1 || n_pos >= n) {
    throw InvalidArgumentError("worst case needs n >= 3 and 1 <= n+ < n");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  switch (bound.direction) {
    case TransferDirection::kAucToNdcg:
      std::rotate(order.begin(), order.begin() + n_pos,
                  order.begin() + n_pos + 1);
      break;
    case TransferDirection::kNdcgToAuc:
    case TransferDirection::kNdcgToAcc:
      std::rotate(order.begin() + n_pos - 1, order.begin() + n_pos,
                  order.end());
      break;
    case TransferDirection::kAucToAcc:
      std::swap(order[n_pos - 1], order[n_pos]);
      break;
    default:
      throw InvalidArgumentError("no worst-case construction for " +
                                 std::string(DirectionName(bound.direction)));
  }
  LabeledList labels = LabeledList::Sorted(n, n_pos);
  Permutation perm(std::move(order));
  const RegretPair regrets = TransferRegrets(bound, labels, perm);
  return {std::move(labels), std::move(perm), regrets};
}

PointwiseWitness PointwiseFailureWitness(std::size_t n, double threshold) {
  if (n < 2) throw InvalidArgumentError("witness needs n >= 2");
  if (!(threshold > 0.0 && threshold < 0.6)) {
    throw InvalidArgumentError("witness threshold must lie in (0, 0.6)");
  }
  std::vector<double> eta{0.9, 0.6};
  std::vector<double> scores{0.6, 0.8};
  // Remaining items sit below both thresholds in eta order.
  const double floor = std::min(0.5, threshold);
  for (std::size_t i = 2; i < n; ++i) {
    const double v = floor * static_cast<double>(n - i) /
                     static_cast<double>(n);
    eta.push_back(v);
    scores.push_back(v);
  }
  return {RelevanceVector(std::move(eta)), ScoreVector(std::move(scores))};
}

std::string_view ScenarioName(RateScenario scenario) {
  return scenario == RateScenario::kBalanced ? "balanced" : "imbalanced";
}

std::string_view RateDirectionName(RateDirection direction) {
  switch (direction) {
    case RateDirection::kRankToList: return "R->L";
    case RateDirection::kListToRank: return "L->R";
    case RateDirection::kRankToPoint: return "R->P";
    case RateDirection::kListToPoint: return "L->P";
  }
  return "?";
}

RateScenario ParseScenario(std::string_view name) {
  if (name == "balanced") return RateScenario::kBalanced;
  if (name == "imbalanced") return RateScenario::kImbalanced;
  throw InvalidArgumentError("unknown scenario '" + std::string(name) + "'");
}

double PredictedGrowth(RateScenario scenario, RateDirection direction,
                       std::size_t n) {
  const double x = static_cast<double>(n);
  const double ln = std::log(x);
  if (scenario == RateScenario::kBalanced) {
    switch (direction) {
      case RateDirection::kRankToList: return x * ln;
      case RateDirection::kListToRank: return ln;
      case RateDirection::kRankToPoint: return x;
      case RateDirection::kListToPoint: return 1.0;
    }
  }
  switch (direction) {
    case RateDirection::kRankToList: return x;
    case RateDirection::kListToRank: return ln * ln;
    case RateDirection::kRankToPoint: return 1.0;
    case RateDirection::kListToPoint: return ln / x;
  }
  return 1.0;
}

std::string_view PredictedGrowthName(RateScenario scenario,
                                     RateDirection direction) {
  if (scenario == RateScenario::kBalanced) {
    switch (direction) {
      case RateDirection::kRankToList: return "n ln n";
      case RateDirection::kListToRank: return "ln n";
      case RateDirection::kRankToPoint: return "n";
      case RateDirection::kListToPoint: return "1";
    }
  }
  switch (direction) {
    case RateDirection::kRankToList: return "n";
    case RateDirection::kListToRank: return "ln^2 n";
    case RateDirection::kRankToPoint: return "1";
    case RateDirection::kListToPoint: return "ln n / n";
  }
  return "?";
}

RateFit AsymptoticRateScan(RateScenario scenario, RateDirection direction,
                           std::span<const std::size_t> grid, double margin,
                           double log_base) {
  if (grid.size() < 5) {
    throw InvalidArgumentError("rate scan needs at least 5 grid points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 10) throw InvalidArgumentError("grid values must be >= 10");
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw InvalidArgumentError("grid must be strictly increasing");
    }
  }
  CheckMargin(margin);

  RateFit fit;
  fit.scenario = scenario;
  fit.direction = direction;
  fit.margin = margin;
  fit.growth = PredictedGrowthName(scenario, direction);
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t n : grid) {
    const std::size_t n_pos = scenario == RateScenario::kBalanced ? n / 2 : 1;
    const std::size_t n_neg = n - n_pos;
    double c = 0.0;
    switch (direction) {
      case RateDirection::kRankToList:
        c = *CoeffAucToNdcg(n_pos, n_neg, log_base).coefficient;
        break;
      case RateDirection::kListToRank:
        c = *CoeffNdcgToAuc(n_pos, n_neg, log_base).coefficient;
        break;
      case RateDirection::kRankToPoint:
        c = *CoeffAucToAcc(n_pos, n_neg, margin).coefficient;
        break;
      case RateDirection::kListToPoint:
        c = *CoeffNdcgToAcc(n_pos, n_neg, margin, log_base).coefficient;
        break;
    }
    fit.points.push_back({n, c});
    const double normalized = c / PredictedGrowth(scenario, direction, n);
    lo = fit.points.size() == 1 ? normalized : std::min(lo, normalized);
    hi = fit.points.size() == 1 ? normalized : std::max(hi, normalized);
  }
  fit.spread = hi / lo;

  const double m = static_cast<double>(fit.points.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const RatePoint& p : fit.points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.coefficient);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

}  // namespace rankregret
