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

#include "rankregret/verification.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rankregret/errors.h"

namespace rankregret {
namespace {

const RelationTally& Find(const SetRelationReport& report,
                          const std::string& relation) {
  for (const auto& t : report.relations) {
    if (t.relation == relation) return t;
  }
  ADD_FAILURE() << "missing relation " << relation;
  static const RelationTally kEmpty;
  return kEmpty;
}

class SetRelationsTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const std::vector<double> levels = {0.1, 0.3, 0.6, 0.9};
    report_ = new SetRelationReport(CheckSetRelations(levels, 2, 4));
  }
  static void TearDownTestSuite() { delete report_; }

  static SetRelationReport* report_;
};

SetRelationReport* SetRelationsTest::report_ = nullptr;

TEST_F(SetRelationsTest, CountsEveryAssignment) {
  EXPECT_EQ(report_->instances, 16u + 64u + 256u);
}

TEST_F(SetRelationsTest, ListwiseRelationsHold) {
  for (const char* relation :
       {"ndcg = auc", "ndcg in acc", "map in acc", "mrr in acc",
        "nesting ndcg@k", "nesting map@k", "nesting mrr@k", "p@k = r@k",
        "map = ndcg (distinct eta)", "mrr = ndcg (distinct eta)"}) {
    const auto& t = Find(*report_, relation);
    EXPECT_GT(t.checked, 0u) << relation;
    EXPECT_EQ(t.violations, 0u) << relation << ": " << t.witness.value_or("");
  }
  EXPECT_GT(report_->strict_inclusions, 0u);
  EXPECT_TRUE(report_->strict_witness.has_value());
}

TEST_F(SetRelationsTest, PointwiseTruncationsDoNotNest) {
  // With two items above the cut, P@2 accepts either order of them while P@1
  // insists on the better one first.
  for (const char* relation : {"nesting p@k", "nesting r@k"}) {
    const auto& t = Find(*report_, relation);
    EXPECT_GT(t.violations, 0u) << relation;
    ASSERT_TRUE(t.witness.has_value());
    EXPECT_NE(t.witness->find("perm="), std::string::npos);
  }
  EXPECT_FALSE(report_->passed());
}

TEST(SetRelationsArgsTest, Rejected) {
  const std::vector<double> levels = {0.2, 0.7};
  EXPECT_THROW(CheckSetRelations(levels, 2, 9), CapacityError);
  EXPECT_THROW(CheckSetRelations(levels, 4, 3), InvalidArgumentError);
  EXPECT_THROW(CheckSetRelations({}, 2, 3), InvalidArgumentError);
}

TEST(SweepBoundsTest, AucNdcgBothWays) {
  const TransferDirection dirs[] = {TransferDirection::kAucToNdcg,
                                    TransferDirection::kNdcgToAuc};
  const auto sweep = SweepBounds(dirs, 3, 6, {});
  // Sum over n of (n - 1) label splits, per direction.
  EXPECT_EQ(sweep.rows.size(), 2u * (2 + 3 + 4 + 5));
  EXPECT_TRUE(sweep.passed());
  for (const auto& row : sweep.rows) {
    EXPECT_GE(row.verdict.min_slack, -kDominanceSlack);
  }
}

TEST(SweepBoundsTest, AucToAccAcrossMargins) {
  const TransferDirection dirs[] = {TransferDirection::kAucToAcc};
  const std::vector<double> margins = {0.1, 0.25, 0.4};
  const auto sweep = SweepBounds(dirs, 3, 5, margins);
  EXPECT_EQ(sweep.rows.size(), 3u * (2 + 3 + 4));
  EXPECT_TRUE(sweep.passed());
  for (const auto& row : sweep.rows) EXPECT_TRUE(row.verdict.attains);
}

TEST(SweepBoundsTest, NdcgToAccIsViolated) {
  const TransferDirection dirs[] = {TransferDirection::kNdcgToAcc};
  const std::vector<double> margins = {0.25};
  const auto sweep = SweepBounds(dirs, 3, 5, margins);
  EXPECT_GT(sweep.failures(), 0u);
  for (const auto& row : sweep.rows) {
    if (!row.verdict.passed()) {
      EXPECT_TRUE(row.verdict.violation.has_value());
      EXPECT_GT(row.verdict.violation_regrets.target,
                *row.verdict.bound.coefficient *
                    row.verdict.violation_regrets.source);
    }
  }
}

TEST(SweepBoundsTest, Truncation) {
  const TransferDirection dirs[] = {TransferDirection::kTruncation,
                                    TransferDirection::kTruncationReverse};
  const auto sweep = SweepBounds(dirs, 3, 6, {});
  EXPECT_FALSE(sweep.rows.empty());
  EXPECT_TRUE(sweep.passed());
}

TEST(SweepBoundsTest, Capacity) {
  const TransferDirection dirs[] = {TransferDirection::kAucToNdcg};
  EXPECT_THROW(SweepBounds(dirs, 3, 10, {}), CapacityError);
}

}  // namespace
}  // namespace rankregret
