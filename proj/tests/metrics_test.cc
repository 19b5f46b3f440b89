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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "rankregret/errors.h"
#include "reference_metrics.h"

namespace rankregret {
namespace {

Permutation Perm(std::vector<std::size_t> one_based) {
  for (auto& v : one_based) --v;
  return Permutation(std::move(one_based));
}

// Labels already in rank order, evaluated with the identity ranking.
double Ranked(const MetricSpec& spec, std::vector<int> ys) {
  const std::size_t n = ys.size();
  return EvalMetric(spec, LabeledList(std::move(ys)), Permutation::Identity(n));
}

TEST(RankByScoresTest, SortsDescendingWithIndexTieBreak) {
  EXPECT_EQ(RankByScores(ScoreVector({0.2, 0.9, 0.5})), Perm({2, 3, 1}));
  EXPECT_EQ(RankByScores(ScoreVector({0.5, 0.5})), Perm({1, 2}));
  EXPECT_EQ(RankByScores(ScoreVector({0.9, 0.8, 0.7, 0.6})),
            Permutation::Identity(4));
  EXPECT_THROW(RankByScores(ScoreVector({})), InvalidArgumentError);
}

TEST(EvalMetricTest, HandCheckedValues) {
  EXPECT_DOUBLE_EQ(Ranked(MetricSpec::Auc(), {1, 0, 1, 0}), 0.75);
  EXPECT_NEAR(Ranked(MetricSpec::Ndcg(), {0, 1}), 1.0 / std::log2(3.0), 1e-15);
  EXPECT_NEAR(Ranked(MetricSpec::Map(), {1, 0, 1, 0}), 5.0 / 6.0, 1e-15);
  EXPECT_DOUBLE_EQ(Ranked(MetricSpec::Mrr(), {0, 1, 0}), 0.5);
  EXPECT_DOUBLE_EQ(Ranked(MetricSpec::PrecisionAt(2), {1, 0, 1, 0}), 0.5);
  EXPECT_DOUBLE_EQ(Ranked(MetricSpec::RecallAt(2), {1, 0, 1, 0}), 0.5);
}

TEST(EvalMetricTest, UndefinedAndInvalidInputs) {
  EXPECT_THROW(Ranked(MetricSpec::Auc(), {1, 1}), UndefinedMetricError);
  EXPECT_THROW(Ranked(MetricSpec::Auc(), {0, 0, 0}), UndefinedMetricError);
  EXPECT_THROW(Ranked(MetricSpec::Ndcg(), {0, 0}), UndefinedMetricError);
  EXPECT_THROW(Ranked(MetricSpec::Map(), {0, 0}), UndefinedMetricError);
  EXPECT_THROW(Ranked(MetricSpec::RecallAt(1), {0, 0}), UndefinedMetricError);
  EXPECT_THROW(Ranked(MetricSpec::PrecisionAt(3), {1, 0}),
               InvalidArgumentError);
  EXPECT_THROW(Ranked(MetricSpec::Acc(), {1, 0}), InvalidArgumentError);
  EXPECT_THROW(EvalMetric(MetricSpec::Auc(), LabeledList({1, 0}),
                          Permutation::Identity(3)),
               InvalidArgumentError);
}

TEST(EvalMetricTest, MrrWithoutPositivesIsZeroAndFlagged) {
  EXPECT_EQ(Ranked(MetricSpec::Mrr(), {0, 0, 0}), 0.0);
  const auto report = MetricRegret(MetricSpec::Mrr(), LabeledList({0, 0}),
                                   ScoreVector({0.3, 0.1}));
  EXPECT_TRUE(report.degenerate);
  EXPECT_EQ(report.regret_abs, 0.0);
  EXPECT_EQ(report.regret_rel, 0.0);
}

TEST(IdealValueTest, NormalizedMetricsAndPrecisionCap) {
  const LabeledList labels({0, 1, 0, 1, 0});
  for (const auto& spec : {MetricSpec::Auc(), MetricSpec::Ndcg(),
                           MetricSpec::Map(), MetricSpec::Mrr(),
                           MetricSpec::RecallAt(3)}) {
    EXPECT_DOUBLE_EQ(IdealValue(spec, labels), 1.0) << spec.Name();
  }
  EXPECT_DOUBLE_EQ(IdealValue(MetricSpec::PrecisionAt(3), labels), 2.0 / 3.0);
  EXPECT_NEAR(IdealDcg(labels, 2, 2.0), 1.0 + 1.0 / std::log2(3.0), 1e-15);
  EXPECT_NEAR(IdealValue(MetricSpec::Dcg(std::nullopt, 2.0), labels),
              1.0 + 1.0 / std::log2(3.0), 1e-15);
}

TEST(MetricRegretTest, SinglePositiveAtRankTwo) {
  // One positive behind one of ten negatives.
  std::vector<int> labels(11, 0);
  labels[0] = 1;
  std::vector<double> scores(11, 0.1);
  scores[0] = 0.8;
  scores[1] = 0.9;
  const LabeledList list(labels);
  const ScoreVector s(scores);

  const auto auc = MetricRegret(MetricSpec::Auc(), list, s);
  EXPECT_EQ(auc.regret_abs, 0.1);
  const auto dcg = MetricRegret(MetricSpec::Dcg(std::nullopt, kNaturalLogBase),
                                list, s);
  EXPECT_NEAR(dcg.regret_abs, 1.0 / std::log(2.0) - 1.0 / std::log(3.0),
              1e-12);
  const auto ndcg = MetricRegret(MetricSpec::Ndcg(), list, s);
  EXPECT_NEAR(ndcg.regret_abs, 1.0 - std::log(2.0) / std::log(3.0), 1e-12);
}

TEST(MetricRegretTest, PerfectOrderingHasZeroRegretForEveryKind) {
  const LabeledList labels({0, 1, 1, 0, 0});
  const ScoreVector scores({0.1, 0.9, 0.8, 0.3, 0.2});
  for (const auto& spec :
       {MetricSpec::Acc(), MetricSpec::PrecisionAt(2), MetricSpec::RecallAt(3),
        MetricSpec::Auc(), MetricSpec::Ndcg(), MetricSpec::Ndcg(3),
        MetricSpec::Dcg(), MetricSpec::Map(), MetricSpec::Map(2),
        MetricSpec::Mrr()}) {
    const auto report = MetricRegret(spec, labels, scores);
    EXPECT_EQ(report.regret_abs, 0.0) << spec.Name();
    EXPECT_EQ(report.regret_rel, 0.0) << spec.Name();
  }
}

TEST(MetricRegretTest, AccuracyCountsThresholdCrossings) {
  const LabeledList labels({1, 0, 1, 0});
  const ScoreVector scores({0.7, 0.6, 0.4, 0.1});
  const auto report = MetricRegret(MetricSpec::Acc(), labels, scores);
  EXPECT_EQ(report.value, 0.5);
  EXPECT_EQ(report.regret_abs, 0.5);
  // Strict inequality: a score equal to tau is predicted negative.
  EXPECT_EQ(EvalAccuracy(MetricSpec::Acc(0.4), labels, scores), 0.5);
  EXPECT_EQ(EvalAccuracy(MetricSpec::Acc(0.35), labels, scores), 0.75);
}

TEST(MetricSpecTest, ParseAndName) {
  EXPECT_EQ(ParseMetricSpec("ndcg@10"), MetricSpec::Ndcg(10));
  EXPECT_EQ(ParseMetricSpec("p@5"), MetricSpec::PrecisionAt(5));
  EXPECT_EQ(ParseMetricSpec("recall@3"), MetricSpec::RecallAt(3));
  EXPECT_EQ(ParseMetricSpec("auc"), MetricSpec::Auc());
  EXPECT_EQ(ParseMetricSpec("acc").kind, MetricKind::kAcc);
  EXPECT_EQ(MetricSpec::Ndcg(10).Name(), "ndcg@10");
  EXPECT_EQ(MetricSpec::Map().Name(), "map");
  EXPECT_THROW(ParseMetricSpec("ndcg@0"), InvalidArgumentError);
  EXPECT_THROW(ParseMetricSpec("ndcg@x"), InvalidArgumentError);
  EXPECT_THROW(ParseMetricSpec("auc@3"), InvalidArgumentError);
  EXPECT_THROW(ParseMetricSpec("f1"), InvalidArgumentError);
  EXPECT_EQ(MetricSpec::Acc().group(), MetricGroup::kPointwise);
  EXPECT_EQ(MetricSpec::Auc().group(), MetricGroup::kPairwise);
  EXPECT_EQ(MetricSpec::Mrr().group(), MetricGroup::kListwise);
}

TEST(DiscountTest, DifferenceMatchesDirectSubtraction) {
  for (double base : {2.0, kNaturalLogBase, 10.0}) {
    for (std::size_t i = 1; i < 50; ++i) {
      EXPECT_NEAR(DiscountDifference(i, base),
                  Discount(i, base) - Discount(i + 1, base), 1e-14)
          << "i=" << i;
    }
  }
}

class RandomInstances : public ::testing::Test {
 protected:
  struct Instance {
    std::vector<int> labels;
    std::vector<double> scores;
  };

  // Scores on a coarse grid so ties occur.
  Instance Draw(std::size_t n) {
    Instance in;
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> level(0, 9);
    for (std::size_t i = 0; i < n; ++i) {
      in.labels.push_back(bit(rng_));
      in.scores.push_back(level(rng_) / 10.0);
    }
    return in;
  }

  std::mt19937_64 rng_{12345};
};

TEST_F(RandomInstances, MatchesReferenceExactly) {
  std::uniform_int_distribution<std::size_t> size(1, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto in = Draw(size(rng_));
    const std::size_t n = in.labels.size();
    const LabeledList labels(in.labels);
    const ScoreVector scores(in.scores);
    const Permutation perm = RankByScores(scores);
    const auto ys = reference::RankedLabels(in.labels, in.scores);
    const std::size_t pos = reference::Positives(ys);

    EXPECT_EQ(EvalAccuracy(MetricSpec::Acc(), labels, scores),
              reference::Accuracy(in.labels, in.scores, 0.5));
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(EvalMetric(MetricSpec::PrecisionAt(k), labels, perm),
                reference::PrecisionAt(ys, k));
      EXPECT_EQ(EvalMetric(MetricSpec::Mrr(k), labels, perm),
                reference::MrrAt(ys, k));
      EXPECT_EQ(EvalMetric(MetricSpec::Dcg(k), labels, perm),
                reference::DcgAt(ys, k, 2.0));
      if (pos > 0) {
        EXPECT_EQ(EvalMetric(MetricSpec::RecallAt(k), labels, perm),
                  reference::RecallAt(ys, k));
        EXPECT_EQ(EvalMetric(MetricSpec::Ndcg(k), labels, perm),
                  reference::NdcgAt(ys, k, 2.0));
        EXPECT_EQ(EvalMetric(MetricSpec::Map(k), labels, perm),
                  reference::MapAt(ys, k));
      }
    }
    if (pos > 0 && pos < n) {
      EXPECT_EQ(EvalMetric(MetricSpec::Auc(), labels, perm),
                reference::Auc(ys));
    }
  }
}

TEST_F(RandomInstances, StructuralProperties) {
  std::uniform_int_distribution<std::size_t> size(2, 10);
  for (int trial = 0; trial < 300; ++trial) {
    auto in = Draw(size(rng_));
    // Distinct scores for the antisymmetry check.
    for (std::size_t i = 0; i < in.scores.size(); ++i) {
      in.scores[i] += 1e-3 * static_cast<double>(i);
    }
    const LabeledList labels(in.labels);
    const ScoreVector scores(in.scores);
    const Permutation perm = RankByScores(scores);
    const std::size_t n = labels.size();

    std::vector<double> sorted;
    for (std::size_t r = 0; r < n; ++r) sorted.push_back(scores[perm[r]]);
    EXPECT_TRUE(std::is_sorted(sorted.rbegin(), sorted.rend()));

    std::vector<double> negated, transformed;
    for (double s : in.scores) {
      negated.push_back(-s);
      transformed.push_back(std::exp(3.0 * s) - 7.0);
    }
    EXPECT_EQ(RankByScores(ScoreVector(transformed)), perm);

    if (labels.num_positive() == 0 || labels.num_negative() == 0) continue;
    const double auc = EvalMetric(MetricSpec::Auc(), labels, perm);
    const double flipped = EvalMetric(MetricSpec::Auc(), labels,
                                      RankByScores(ScoreVector(negated)));
    EXPECT_NEAR(auc + flipped, 1.0, 1e-15);

    EXPECT_EQ(EvalMetric(MetricSpec::Ndcg(n), labels, perm),
              EvalMetric(MetricSpec::Ndcg(), labels, perm));
    EXPECT_EQ(EvalMetric(MetricSpec::Map(n), labels, perm),
              EvalMetric(MetricSpec::Map(), labels, perm));
    for (const auto& spec : {MetricSpec::Ndcg(), MetricSpec::Map(),
                             MetricSpec::Mrr(), MetricSpec::Auc(),
                             MetricSpec::PrecisionAt(n / 2 + 1)}) {
      const double value = EvalMetric(spec, labels, perm);
      const double ideal = IdealValue(spec, labels);
      EXPECT_GE(value, 0.0);
      EXPECT_LE(value, ideal + 1e-15);
      EXPECT_LE(ideal, 1.0);
    }
  }
}

TEST(GradedTest, ReducesToBinaryMetricsOnBinaryEta) {
  const std::vector<int> ys{1, 0, 0, 1, 0, 1};
  std::vector<double> eta(ys.begin(), ys.end());
  const Permutation perm = Perm({2, 1, 4, 3, 6, 5});
  const LabeledList labels(ys);
  EXPECT_NEAR(GradedAuc(RelevanceVector(eta), perm),
              EvalMetric(MetricSpec::Auc(), labels, perm), 1e-15);
  EXPECT_NEAR(GradedNdcg(RelevanceVector(eta), perm, 2.0),
              EvalMetric(MetricSpec::Ndcg(), labels, perm), 1e-15);
}

TEST(GradedTest, BayesOrderIsOptimal) {
  const RelevanceVector eta({0.2, 0.9, 0.55, 0.1, 0.7});
  const Permutation best = BayesOrder(eta);
  EXPECT_EQ(best, Perm({2, 5, 3, 1, 4}));
  std::vector<std::size_t> order{0, 1, 2, 3, 4};
  do {
    const Permutation p(order);
    EXPECT_LE(GradedAuc(eta, p), GradedAuc(eta, best) + 1e-15);
    EXPECT_LE(GradedDcg(eta, p, 2.0), GradedDcg(eta, best, 2.0) + 1e-15);
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_THROW(GradedAuc(RelevanceVector({1.0, 1.0}), Perm({1, 2})),
               UndefinedMetricError);
}

TEST(TypesTest, Validation) {
  EXPECT_THROW(LabeledList({}), InvalidArgumentError);
  EXPECT_THROW(LabeledList({1, 2}), InvalidArgumentError);
  EXPECT_THROW(RelevanceVector({0.5, 1.2}), InvalidArgumentError);
  EXPECT_THROW(ScoreVector({0.5, std::nan("")}), InvalidArgumentError);
  EXPECT_THROW(Permutation({0, 0}), InvalidArgumentError);
  EXPECT_THROW(Permutation({0, 2}), InvalidArgumentError);
  EXPECT_EQ(Perm({3, 1, 2}).ToString(), "(3 1 2)");
  EXPECT_EQ(LabeledList({1, 0, 1}).num_positive(), 2u);
  EXPECT_DOUBLE_EQ(RelevanceVector({0.9, 0.3, 0.6}).Margin(), 0.1);
}

}  // namespace
}  // namespace rankregret
