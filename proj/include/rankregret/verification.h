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

// Exhaustive sweeps over small instances: optimal-set relations between
// metrics and transfer-bound verdicts across every label multiset.

#ifndef RANKREGRET_VERIFICATION_H_
#define RANKREGRET_VERIFICATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankregret/metrics.h"
#include "rankregret/psi_estimator.h"
#include "rankregret/transfer_bounds.h"

namespace rankregret {

struct RelationTally {
  std::string relation;
  std::size_t checked = 0;
  std::size_t violations = 0;
  // First violation, as "eta=[...] ..." text.
  std::optional<std::string> witness;
};

struct SetRelationReport {
  std::size_t instances = 0;
  std::vector<RelationTally> relations;
  // Instances where a listwise optimal set is strictly inside Acc's.
  std::size_t strict_inclusions = 0;
  std::optional<std::string> strict_witness;

  bool passed() const;
};

// Every eta in levels^n for n in [n_min, n_max]. Checks
//   ndcg = auc; ndcg, map, mrr subsets of acc;
//   opt(M@k2) subset of opt(M@k1) for M in p, r, ndcg, map, mrr;
//   p@k = r@k; map = ndcg and mrr = ndcg when eta is distinct.
// Throws CapacityError for n_max > kMaxOptimalSetSize.
SetRelationReport CheckSetRelations(std::span<const double> levels,
                                    std::size_t n_min, std::size_t n_max);

struct BoundSweepRow {
  std::size_t n = 0;
  std::size_t n_pos = 0;
  BoundVerdict verdict;
};

struct BoundSweep {
  std::vector<BoundSweepRow> rows;

  bool passed() const;
  std::size_t failures() const;
};

// Label multisets with 3 <= n_min <= n <= n_max and 1 <= n+ <= n - 1.
// Acc directions run once per margin. Forward truncation covers p@k, r@k
// and ndcg@k with k1 < k2 <= n+, where every position above k2 has a
// non-negative gain gap; the reverse direction covers k1 < n+ and
// k1 < k2 <= n (k2 < n for p@k and r@k), where a zero-regret prefix can still
// be followed by a loss.
BoundSweep SweepBounds(std::span<const TransferDirection> directions,
                       std::size_t n_min, std::size_t n_max,
                       std::span<const double> margins);

}  // namespace rankregret

#endif  // RANKREGRET_VERIFICATION_H_
