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

#include "rankregret/metrics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "rankregret/errors.h"

namespace rankregret {
namespace {

// num / den with a positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double Value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

bool AcceptsTruncation(MetricKind kind) {
  return kind != MetricKind::kAcc && kind != MetricKind::kAuc;
}

// Effective cutoff for `spec` on a list of `n` items.
std::size_t Cutoff(const MetricSpec& spec, std::size_t n) {
  if (!spec.truncation) return n;
  const std::size_t k = *spec.truncation;
  if (k > n) {
    throw InvalidArgumentError("cutoff k = " + std::to_string(k) +
                               " exceeds list length " + std::to_string(n));
  }
  return k;
}

void CheckSizes(const LabeledList& labels, std::size_t other,
                std::string_view what) {
  if (labels.size() != other) {
    throw InvalidArgumentError(std::string(what) + " has length " +
                               std::to_string(other) + " but labels have " +
                               std::to_string(labels.size()));
  }
}

void RequirePositive(const MetricSpec& spec, const LabeledList& labels) {
  if (labels.num_positive() == 0) {
    throw UndefinedMetricError(spec.Name() +
                               " is undefined on a list without positives");
  }
}

// Correctly ordered positive-negative pairs over n+ n-.
Fraction AucFraction(const LabeledList& labels, const Permutation& perm) {
  const auto n_pos = static_cast<std::int64_t>(labels.num_positive());
  const auto n_neg = static_cast<std::int64_t>(labels.num_negative());
  if (n_pos == 0 || n_neg == 0) {
    throw UndefinedMetricError("auc is undefined on a one-class list");
  }
  std::int64_t negatives_above = 0;
  std::int64_t correct = 0;
  for (std::size_t item : perm.order()) {
    if (labels[item] == 1) {
      correct += n_neg - negatives_above;
    } else {
      ++negatives_above;
    }
  }
  return {correct, n_pos * n_neg};
}

std::int64_t HitsInTop(const LabeledList& labels, const Permutation& perm,
                       std::size_t k) {
  std::int64_t hits = 0;
  for (std::size_t r = 0; r < k; ++r) hits += labels[perm[r]];
  return hits;
}

// Value of a counting metric, or nullopt for the real-valued ones.
std::optional<Fraction> CountingValue(const MetricSpec& spec,
                                      const LabeledList& labels,
                                      const Permutation& perm) {
  switch (spec.kind) {
    case MetricKind::kPrecisionAtK: {
      const std::size_t k = Cutoff(spec, labels.size());
      return Fraction{HitsInTop(labels, perm, k), static_cast<std::int64_t>(k)};
    }
    case MetricKind::kRecallAtK: {
      RequirePositive(spec, labels);
      const std::size_t k = Cutoff(spec, labels.size());
      return Fraction{HitsInTop(labels, perm, k),
                      static_cast<std::int64_t>(labels.num_positive())};
    }
    case MetricKind::kAuc:
      return AucFraction(labels, perm);
    default:
      return std::nullopt;
  }
}

std::optional<Fraction> CountingIdeal(const MetricSpec& spec,
                                      const LabeledList& labels) {
  switch (spec.kind) {
    case MetricKind::kPrecisionAtK: {
      const std::size_t k = Cutoff(spec, labels.size());
      return Fraction{
          static_cast<std::int64_t>(std::min(k, labels.num_positive())),
          static_cast<std::int64_t>(k)};
    }
    case MetricKind::kRecallAtK: {
      RequirePositive(spec, labels);
      const std::size_t k = Cutoff(spec, labels.size());
      return Fraction{
          static_cast<std::int64_t>(std::min(k, labels.num_positive())),
          static_cast<std::int64_t>(labels.num_positive())};
    }
    case MetricKind::kAuc: {
      const auto pairs = static_cast<std::int64_t>(labels.num_positive() *
                                                   labels.num_negative());
      if (pairs == 0) {
        throw UndefinedMetricError("auc is undefined on a one-class list");
      }
      return Fraction{pairs, pairs};
    }
    default:
      return std::nullopt;
  }
}

double MapValue(const LabeledList& labels, const Permutation& perm,
                std::size_t k) {
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < k; ++r) {
    if (labels[perm[r]] == 1) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(r + 1);
    }
  }
  return sum / static_cast<double>(std::min(k, labels.num_positive()));
}

double MrrValue(const LabeledList& labels, const Permutation& perm,
                std::size_t k) {
  for (std::size_t r = 0; r < k; ++r) {
    if (labels[perm[r]] == 1) return 1.0 / static_cast<double>(r + 1);
  }
  return 0.0;
}

Fraction AccuracyFraction(const MetricSpec& spec, const LabeledList& labels,
                          const ScoreVector& scores) {
  spec.Validate();
  CheckSizes(labels, scores.size(), "score vector");
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int predicted = scores[i] > spec.threshold ? 1 : 0;
    if (predicted == labels[i]) ++correct;
  }
  return {correct, static_cast<std::int64_t>(labels.size())};
}

RegretReport MakeReport(double value, double ideal, double regret_abs) {
  RegretReport report;
  report.value = value;
  report.ideal = ideal;
  report.regret_abs = regret_abs;
  report.regret_rel = ideal > 0.0 ? 1.0 - value / ideal : 0.0;
  return report;
}

RegretReport FractionReport(const Fraction& value, const Fraction& ideal) {
  RegretReport report;
  report.value = value.Value();
  report.ideal = ideal.Value();
  // Both fractions share a denominator by construction.
  report.regret_abs =
      static_cast<double>(ideal.num - value.num) / static_cast<double>(value.den);
  report.regret_rel = ideal.num > 0 ? static_cast<double>(ideal.num - value.num) /
                                          static_cast<double>(ideal.num)
                                    : 0.0;
  return report;
}

}  // namespace

MetricGroup MetricSpec::group() const {
  switch (kind) {
    case MetricKind::kAcc:
    case MetricKind::kPrecisionAtK:
    case MetricKind::kRecallAtK:
      return MetricGroup::kPointwise;
    case MetricKind::kAuc:
      return MetricGroup::kPairwise;
    default:
      return MetricGroup::kListwise;
  }
}

std::string MetricSpec::Name() const {
  std::string name(KindName(kind));
  if (truncation) name += "@" + std::to_string(*truncation);
  return name;
}

void MetricSpec::Validate() const {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw InvalidArgumentError("log base must be a finite value > 1");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw InvalidArgumentError("threshold must lie in (0, 1)");
  }
  if (truncation) {
    if (!AcceptsTruncation(kind)) {
      throw InvalidArgumentError(std::string(KindName(kind)) +
                                 " does not take a cutoff");
    }
    if (*truncation < 1) throw InvalidArgumentError("cutoff k must be >= 1");
  }
}

MetricSpec MetricSpec::Acc(double threshold) {
  return {MetricKind::kAcc, std::nullopt, 2.0, threshold};
}
MetricSpec MetricSpec::PrecisionAt(std::size_t k) {
  return {MetricKind::kPrecisionAtK, k};
}
MetricSpec MetricSpec::RecallAt(std::size_t k) {
  return {MetricKind::kRecallAtK, k};
}
MetricSpec MetricSpec::Auc() { return {MetricKind::kAuc, std::nullopt}; }
MetricSpec MetricSpec::Ndcg(std::optional<std::size_t> k, double log_base) {
  return {MetricKind::kNdcg, k, log_base};
}
MetricSpec MetricSpec::Dcg(std::optional<std::size_t> k, double log_base) {
  return {MetricKind::kDcg, k, log_base};
}
MetricSpec MetricSpec::Map(std::optional<std::size_t> k) {
  return {MetricKind::kMap, k};
}
MetricSpec MetricSpec::Mrr(std::optional<std::size_t> k) {
  return {MetricKind::kMrr, k};
}

std::string_view KindName(MetricKind kind) {
  switch (kind) {
    case MetricKind::kAcc: return "acc";
    case MetricKind::kPrecisionAtK: return "p";
    case MetricKind::kRecallAtK: return "r";
    case MetricKind::kAuc: return "auc";
    case MetricKind::kNdcg: return "ndcg";
    case MetricKind::kDcg: return "dcg";
    case MetricKind::kMap: return "map";
    case MetricKind::kMrr: return "mrr";
  }
  return "?";
}

std::string_view GroupName(MetricGroup group) {
  switch (group) {
    case MetricGroup::kPointwise: return "pointwise";
    case MetricGroup::kPairwise: return "pairwise";
    case MetricGroup::kListwise: return "listwise";
  }
  return "?";
}

MetricSpec ParseMetricSpec(std::string_view name) {
  std::string_view head = name;
  std::optional<std::size_t> k;
  if (const auto at = name.find('@'); at != std::string_view::npos) {
    head = name.substr(0, at);
    const std::string_view digits = name.substr(at + 1);
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        value == 0) {
      throw InvalidArgumentError("bad cutoff in metric name '" +
                                 std::string(name) + "'");
    }
    k = value;
  }
  MetricSpec spec;
  if (head == "acc" || head == "accuracy") {
    spec = MetricSpec::Acc();
  } else if (head == "p" || head == "precision") {
    spec.kind = MetricKind::kPrecisionAtK;
  } else if (head == "r" || head == "recall") {
    spec.kind = MetricKind::kRecallAtK;
  } else if (head == "auc") {
    spec = MetricSpec::Auc();
  } else if (head == "ndcg") {
    spec = MetricSpec::Ndcg();
  } else if (head == "dcg") {
    spec = MetricSpec::Dcg();
  } else if (head == "map") {
    spec = MetricSpec::Map();
  } else if (head == "mrr") {
    spec = MetricSpec::Mrr();
  } else {
    throw InvalidArgumentError("unknown metric '" + std::string(name) + "'");
  }
  spec.truncation = k;
  spec.Validate();
  return spec;
}

double Discount(std::size_t position, double log_base) {
  const double x = static_cast<double>(position) + 1.0;
  if (log_base == 2.0) return 1.0 / std::log2(x);
  if (log_base == kNaturalLogBase) return 1.0 / std::log(x);
  return std::log(log_base) / std::log(x);
}

double DiscountDifference(std::size_t position, double log_base) {
  // 1/ln(t+1) - 1/ln(t+2) = ln(1 + 1/(t+1)) / (ln(t+1) ln(t+2)).
  const double t = static_cast<double>(position);
  const double lo = std::log(t + 1.0);
  const double hi = std::log(t + 2.0);
  const double natural = std::log1p(1.0 / (t + 1.0)) / (lo * hi);
  return log_base == kNaturalLogBase ? natural : natural * std::log(log_base);
}

double DiscountPrefixSum(std::size_t m, double log_base) {
  double sum = 0.0;
  for (std::size_t i = 1; i <= m; ++i) sum += Discount(i, log_base);
  return sum;
}

Permutation RankByScores(const ScoreVector& scores) {
  if (scores.empty()) {
    throw InvalidArgumentError("cannot rank an empty score vector");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  return Permutation(std::move(order));
}

Permutation IdealPermutation(const LabeledList& labels) {
  std::vector<std::size_t> order;
  order.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1) order.push_back(i);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) order.push_back(i);
  }
  return Permutation(std::move(order));
}

double EvalMetric(const MetricSpec& spec, const LabeledList& labels,
                  const Permutation& perm) {
  spec.Validate();
  CheckSizes(labels, perm.size(), "permutation");
  if (const auto fraction = CountingValue(spec, labels, perm)) {
    return fraction->Value();
  }
  const std::size_t k = Cutoff(spec, labels.size());
  switch (spec.kind) {
    case MetricKind::kNdcg: {
      RequirePositive(spec, labels);
      return Dcg(labels, perm, k, spec.log_base) /
             IdealDcg(labels, k, spec.log_base);
    }
    case MetricKind::kDcg:
      return Dcg(labels, perm, k, spec.log_base);
    case MetricKind::kMap:
      RequirePositive(spec, labels);
      return MapValue(labels, perm, k);
    case MetricKind::kMrr:
      return MrrValue(labels, perm, k);
    case MetricKind::kAcc:
      throw InvalidArgumentError(
          "acc needs scores or a cut; use EvalAccuracy or EvalAccuracyAtCut");
    default:
      break;
  }
  throw InvalidArgumentError("unsupported metric " + spec.Name());
}

double EvalAccuracy(const MetricSpec& spec, const LabeledList& labels,
                    const ScoreVector& scores) {
  return AccuracyFraction(spec, labels, scores).Value();
}

double EvalAccuracyAtCut(const LabeledList& labels, const Permutation& perm,
                         std::size_t cut) {
  return 1.0 - AccuracyRegretAtCut(labels, perm, cut).regret_abs;
}

RegretReport AccuracyRegretAtCut(const LabeledList& labels,
                                 const Permutation& perm, std::size_t cut) {
  CheckSizes(labels, perm.size(), "permutation");
  if (cut > labels.size()) {
    throw InvalidArgumentError("cut exceeds list length");
  }
  std::int64_t errors = 0;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    const int predicted = r < cut ? 1 : 0;
    if (predicted != labels[perm[r]]) ++errors;
  }
  const auto n = static_cast<std::int64_t>(labels.size());
  return FractionReport({n - errors, n}, {n, n});
}

double IdealValue(const MetricSpec& spec, const LabeledList& labels) {
  spec.Validate();
  if (spec.kind == MetricKind::kAcc) return 1.0;
  if (const auto fraction = CountingIdeal(spec, labels)) {
    return fraction->Value();
  }
  return EvalMetric(spec, labels, IdealPermutation(labels));
}

double Dcg(const LabeledList& labels, const Permutation& perm,
           std::optional<std::size_t> k, double log_base) {
  CheckSizes(labels, perm.size(), "permutation");
  const std::size_t cutoff = k.value_or(labels.size());
  if (cutoff > labels.size()) {
    throw InvalidArgumentError("cutoff exceeds list length");
  }
  double dcg = 0.0;
  for (std::size_t r = 0; r < cutoff; ++r) {
    if (labels[perm[r]] == 1) dcg += Discount(r + 1, log_base);
  }
  return dcg;
}

double IdealDcg(const LabeledList& labels, std::optional<std::size_t> k,
                double log_base) {
  const std::size_t cutoff = k.value_or(labels.size());
  if (cutoff > labels.size()) {
    throw InvalidArgumentError("cutoff exceeds list length");
  }
  return DiscountPrefixSum(std::min(cutoff, labels.num_positive()), log_base);
}

RegretReport MetricRegret(const MetricSpec& spec, const LabeledList& labels,
                          const ScoreVector& scores) {
  spec.Validate();
  CheckSizes(labels, scores.size(), "score vector");
  if (spec.kind == MetricKind::kAcc) {
    const Fraction accuracy = AccuracyFraction(spec, labels, scores);
    return FractionReport(accuracy, {accuracy.den, accuracy.den});
  }
  return MetricRegret(spec, labels, RankByScores(scores));
}

RegretReport MetricRegret(const MetricSpec& spec, const LabeledList& labels,
                          const Permutation& perm) {
  spec.Validate();
  CheckSizes(labels, perm.size(), "permutation");
  if (spec.kind == MetricKind::kAcc) {
    throw InvalidArgumentError("acc regret needs scores or a cut");
  }
  if (const auto value = CountingValue(spec, labels, perm)) {
    return FractionReport(*value, *CountingIdeal(spec, labels));
  }
  const double value = EvalMetric(spec, labels, perm);
  const double ideal = IdealValue(spec, labels);
  RegretReport report = MakeReport(value, ideal, ideal - value);
  report.degenerate =
      spec.kind == MetricKind::kMrr && labels.num_positive() == 0;
  return report;
}

double GradedAuc(const RelevanceVector& eta, const Permutation& perm) {
  if (eta.size() != perm.size()) {
    throw InvalidArgumentError("eta and permutation lengths differ");
  }
  // sum over rank pairs r < s of eta_r (1 - eta_s), via a running prefix sum.
  double correct = 0.0;
  double eta_above = 0.0;
  double total_eta = 0.0;
  double total_complement = 0.0;
  double diagonal = 0.0;
  for (std::size_t item : perm.order()) {
    const double e = eta[item];
    correct += eta_above * (1.0 - e);
    eta_above += e;
    total_eta += e;
    total_complement += 1.0 - e;
    diagonal += e * (1.0 - e);
  }
  const double pairs = total_eta * total_complement - diagonal;
  if (!(pairs > 0.0)) {
    throw UndefinedMetricError(
        "graded auc is undefined when no positive-negative pair is possible");
  }
  return correct / pairs;
}

double GradedDcg(const RelevanceVector& eta, const Permutation& perm,
                 double log_base) {
  if (eta.size() != perm.size()) {
    throw InvalidArgumentError("eta and permutation lengths differ");
  }
  double dcg = 0.0;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    dcg += Discount(r + 1, log_base) * eta[perm[r]];
  }
  return dcg;
}

double GradedNdcg(const RelevanceVector& eta, const Permutation& perm,
                  double log_base) {
  const double ideal = GradedDcg(eta, BayesOrder(eta), log_base);
  if (!(ideal > 0.0)) {
    throw UndefinedMetricError("graded ndcg is undefined when eta is all 0");
  }
  return GradedDcg(eta, perm, log_base) / ideal;
}

Permutation BayesOrder(const RelevanceVector& eta) {
  return RankByScores(
      ScoreVector(std::vector<double>(eta.values().begin(), eta.values().end())));
}

LabeledList BayesLabels(const RelevanceVector& eta) {
  std::vector<int> labels(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) labels[i] = eta[i] > 0.5 ? 1 : 0;
  return LabeledList(std::move(labels));
}

}  // namespace rankregret
