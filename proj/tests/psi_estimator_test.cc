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
#include <vector>

#include <gtest/gtest.h>

#include "rankregret/bayes_oracle.h"
#include "rankregret/errors.h"

namespace rankregret {
namespace {

TEST(EnumerateTest, SampleCounts) {
  const auto labels = LabeledList::Sorted(4, 2);
  EXPECT_EQ(EnumerateRegretPairs(MetricSpec::Auc(), MetricSpec::Ndcg(), labels)
                .size(),
            24u);
  // Acc adds every cut 0..n.
  EXPECT_EQ(EnumerateRegretPairs(MetricSpec::Auc(), MetricSpec::Acc(), labels)
                .size(),
            24u * 5u);
}

TEST(EnumerateTest, AccSamplesCarryCutRegret) {
  const auto labels = LabeledList::Sorted(3, 1);
  for (const auto& s :
       EnumerateRegretPairs(MetricSpec::Acc(), MetricSpec::Auc(), labels)) {
    ASSERT_TRUE(s.cut.has_value());
    const auto acc = AccuracyRegretAtCut(labels, s.perm, *s.cut);
    EXPECT_DOUBLE_EQ(s.source, acc.regret_abs);
    EXPECT_DOUBLE_EQ(
        s.target, MetricRegret(MetricSpec::Auc(), labels, s.perm).regret_abs);
  }
}

TEST(EnumerateTest, Capacity) {
  EXPECT_THROW(EnumerateRegretPairs(MetricSpec::Auc(), MetricSpec::Ndcg(),
                                    LabeledList::Sorted(10, 3)),
               CapacityError);
  EXPECT_THROW(
      EnumerateExpectedRegretPairs(MetricSpec::Auc(), MetricSpec::Ndcg(),
                                   RelevanceVector(std::vector(9, 0.3))),
      CapacityError);
  EXPECT_THROW(EnumerateRegretPairs(MetricSpec::Auc(), MetricSpec::Ndcg(),
                                    LabeledList::Sorted(4, 0)),
               UndefinedMetricError);
}

TEST(PsiTest, MonotoneNonDecreasing) {
  const auto labels = LabeledList({0, 1, 1, 0, 1, 0});
  for (const auto& [a, b] :
       {std::pair{MetricSpec::Auc(), MetricSpec::Ndcg()},
        std::pair{MetricSpec::Ndcg(), MetricSpec::Auc()},
        std::pair{MetricSpec::Ndcg(), MetricSpec::Acc()},
        std::pair{MetricSpec::Map(), MetricSpec::Mrr()}}) {
    const auto curve = PsiBrute(a, b, labels);
    ASSERT_FALSE(curve.points.empty());
    EXPECT_EQ(curve.points.front().epsilon, 0.0);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      EXPECT_LT(curve.points[i - 1].epsilon, curve.points[i].epsilon);
      EXPECT_LE(curve.points[i - 1].psi, curve.points[i].psi);
    }
  }
}

TEST(PsiTest, SelfTransferIsIdentity) {
  const auto curve =
      PsiBrute(MetricSpec::Auc(), MetricSpec::Auc(), LabeledList::Sorted(5, 2));
  for (const auto& p : curve.points) EXPECT_DOUBLE_EQ(p.psi, p.epsilon);
}

TEST(PsiTest, EquivalentMetricsVanishAtZero) {
  const auto labels = LabeledList({1, 0, 0, 1, 0});
  EXPECT_EQ(PsiBrute(MetricSpec::Ndcg(), MetricSpec::Auc(), labels).At(0.0),
            0.0);
  EXPECT_EQ(PsiBrute(MetricSpec::Auc(), MetricSpec::Ndcg(), labels).At(0.0),
            0.0);
}

TEST(PsiTest, AccToAucPositiveAtZeroUnderEta) {
  // Any eta with two items on the same side of 0.5: Acc cannot tell them
  // apart, AUC can.
  const RelevanceVector eta({0.9, 0.6, 0.2});
  const auto curve =
      PsiBruteExpected(MetricSpec::Acc(), MetricSpec::Auc(), eta);
  EXPECT_GT(curve.At(0.0), 1e-3);

  // Cross-check against the optimal sets: the largest AUC gap among
  // Acc-optimal permutations.
  const auto acc_set = BayesOptimalSet(MetricSpec::Acc(), eta);
  const auto auc_set = BayesOptimalSet(MetricSpec::Auc(), eta);
  double worst = 0.0;
  for (const auto& perm : acc_set.permutations) {
    worst = std::max(
        worst, auc_set.max_utility -
                   ComputeExpectedUtility(MetricSpec::Auc(), eta, perm).value);
  }
  EXPECT_NEAR(curve.At(0.0), worst, 1e-12);
}

TEST(PsiTest, RankingMetricsLeaveTheCutFree) {
  // An NDCG-optimal ranking still admits a bad threshold, so Psi into Acc is
  // positive at 0. Cutting at the Bayes count recovers Bayes accuracy.
  const RelevanceVector eta({0.9, 0.6, 0.2, 0.3});
  const auto curve =
      PsiBruteExpected(MetricSpec::Ndcg(), MetricSpec::Acc(), eta);
  EXPECT_NEAR(curve.At(0.0), BayesAccuracy(eta) - 0.5, 1e-12);
  EXPECT_NEAR(ExpectedAccuracyAtCut(eta, BayesOrder(eta), 2),
              BayesAccuracy(eta), 1e-15);
}

TEST(PsiTest, ExplicitGrid) {
  const auto grid = UniformGrid(5, 1.0);
  EXPECT_EQ(grid, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  const auto curve = PsiBrute(MetricSpec::Auc(), MetricSpec::Ndcg(),
                              LabeledList::Sorted(4, 2), grid);
  ASSERT_EQ(curve.points.size(), 5u);
  EXPECT_EQ(curve.points.front().psi, 0.0);
  EXPECT_THROW(UniformGrid(1, 1.0), InvalidArgumentError);
}

TEST(PsiTest, FromSamples) {
  const Permutation id = Permutation::Identity(2);
  const std::vector<RegretSample> samples = {
      {0.0, 0.0, id, std::nullopt},
      {0.5, 0.3, id, std::nullopt},
      {0.5, 0.1, id, std::nullopt},
      {1.0, 0.2, id, std::nullopt},
  };
  const auto points = PsiFromSamples(samples, std::nullopt);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[1].psi, 0.3);
  EXPECT_EQ(points[2].psi, 0.3);  // sup over source <= 1
  PsiCurve curve;
  curve.points = points;
  EXPECT_EQ(curve.At(-0.1), 0.0);
  EXPECT_EQ(curve.At(0.7), 0.3);
}

TEST(VerifyBoundTest, AucToNdcgDominatesEverywhere) {
  for (std::size_t n_pos = 1; n_pos <= 4; ++n_pos) {
    const auto labels = LabeledList::Sorted(5, n_pos);
    const auto v = VerifyBound(CoeffAucToNdcg(n_pos, 5 - n_pos), labels);
    EXPECT_TRUE(v.dominance) << n_pos;
    EXPECT_TRUE(v.passed());
    EXPECT_EQ(v.enumerated, 120u);
    EXPECT_GE(v.min_slack, -kDominanceSlack);
    // The rotated-negative instance is tight only with a single positive.
    EXPECT_EQ(v.attains, n_pos == 1) << n_pos;
  }
}

TEST(VerifyBoundTest, AucToAccAttains) {
  const auto v = VerifyBound(CoeffAucToAcc(2, 3, 0.25), LabeledList::Sorted(5, 2));
  EXPECT_TRUE(v.dominance);
  EXPECT_TRUE(v.attains);
  EXPECT_NEAR(v.tightness_ratio, *v.bound.coefficient, 1e-12);
}

TEST(VerifyBoundTest, TruncationNeedsEnoughPositives) {
  // One positive, k2 = 2: parking it at rank 2 is P@2-optimal but loses all
  // of P@1.
  const auto few = LabeledList::Sorted(3, 1);
  const auto v =
      VerifyBound(CoeffTruncation(1, 2, MetricKind::kPrecisionAtK, few), few);
  EXPECT_FALSE(v.dominance);
  ASSERT_TRUE(v.violation.has_value());
  EXPECT_EQ(v.violation_regrets.source, 0.0);
  EXPECT_EQ(v.violation_regrets.target, 1.0);

  const auto enough = LabeledList::Sorted(5, 3);
  for (MetricKind kind : {MetricKind::kPrecisionAtK, MetricKind::kRecallAtK,
                          MetricKind::kNdcg}) {
    EXPECT_TRUE(VerifyBound(CoeffTruncation(1, 3, kind, enough), enough)
                    .dominance);
  }
}

TEST(VerifyBoundTest, ReverseTruncationDiverges) {
  const auto labels = LabeledList::Sorted(4, 2);
  const auto v = VerifyBound(
      CoeffTruncation(1, 2, MetricKind::kNdcg, labels, /*reverse=*/true),
      labels);
  EXPECT_TRUE(v.divergence_observed);
  EXPECT_TRUE(v.passed());
  ASSERT_TRUE(v.divergence_witness.has_value());
  const auto& order = v.divergence_witness->order();
  EXPECT_EQ(labels[order[0]], 1);
  EXPECT_EQ(labels[order[1]], 0);
}

TEST(VerifyBoundTest, RejectsMismatchedCounts) {
  EXPECT_THROW(VerifyBound(CoeffAucToNdcg(2, 2), LabeledList::Sorted(4, 1)),
               InvalidArgumentError);
  EXPECT_THROW(VerifyBound(CoeffAucToNdcg(3, 7), LabeledList::Sorted(10, 3)),
               CapacityError);
}

}  // namespace
}  // namespace rankregret
