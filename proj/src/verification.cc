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

#include <algorithm>
#include <set>
#include <sstream>

#include "rankregret/bayes_oracle.h"
#include "rankregret/errors.h"

namespace rankregret {
namespace {

std::string EtaText(const std::vector<double>& eta) {
  std::ostringstream out;
  out << "eta=[";
  for (std::size_t i = 0; i < eta.size(); ++i) {
    out << (i ? "," : "") << eta[i];
  }
  out << "]";
  return out.str();
}

class Tallies {
 public:
  RelationTally& operator[](const std::string& relation) {
    for (RelationTally& t : tallies_) {
      if (t.relation == relation) return t;
    }
    tallies_.push_back(RelationTally{relation, 0, 0, std::nullopt});
    return tallies_.back();
  }

  void Record(const std::string& relation, bool holds,
              const std::string& context) {
    RelationTally& t = (*this)[relation];
    ++t.checked;
    if (!holds) {
      ++t.violations;
      if (!t.witness) t.witness = context;
    }
  }

  std::vector<RelationTally> Take() { return std::move(tallies_); }

 private:
  std::vector<RelationTally> tallies_;
};

bool Subset(const OptimalSet& a, const OptimalSet& b) {
  return CheckSubsumption(a, b).holds;
}

}  // namespace

bool SetRelationReport::passed() const {
  for (const RelationTally& t : relations) {
    if (t.violations > 0) return false;
  }
  return strict_inclusions > 0;
}

SetRelationReport CheckSetRelations(std::span<const double> levels,
                                    std::size_t n_min, std::size_t n_max) {
  if (levels.empty()) throw InvalidArgumentError("no eta levels given");
  if (n_min < 1 || n_min > n_max) {
    throw InvalidArgumentError("need 1 <= n_min <= n_max");
  }
  if (n_max > kMaxOptimalSetSize) {
    throw CapacityError("set relation sweep", n_max, kMaxOptimalSetSize);
  }
  constexpr MetricKind kTruncated[] = {
      MetricKind::kPrecisionAtK, MetricKind::kRecallAtK, MetricKind::kNdcg,
      MetricKind::kMap, MetricKind::kMrr};

  SetRelationReport report;
  Tallies tallies;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    // Layout: acc, auc, ndcg, map, mrr, then kind-major truncations k=1..n.
    std::vector<MetricSpec> specs{MetricSpec::Acc(), MetricSpec::Auc(),
                                  MetricSpec::Ndcg(), MetricSpec::Map(),
                                  MetricSpec::Mrr()};
    for (MetricKind kind : kTruncated) {
      for (std::size_t k = 1; k <= n; ++k) {
        MetricSpec spec;
        spec.kind = kind;
        spec.truncation = k;
        specs.push_back(spec);
      }
    }
    auto truncated = [&](std::size_t kind_index, std::size_t k) -> std::size_t {
      return 5 + kind_index * n + (k - 1);
    };

    std::vector<std::size_t> digits(n, 0);
    while (true) {
      std::vector<double> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = levels[digits[i]];
      const RelevanceVector eta(values);
      const auto sets = BayesOptimalSets(specs, eta);
      const std::string context = EtaText(values);
      ++report.instances;

      tallies.Record("ndcg = auc", sets[2].permutations == sets[1].permutations,
                     context);
      for (std::size_t s : {2, 3, 4}) {
        const bool inside = Subset(sets[s], sets[0]);
        tallies.Record(specs[s].Name() + " in acc", inside, context);
        if (inside && sets[s].size() < sets[0].size()) {
          ++report.strict_inclusions;
          if (!report.strict_witness) {
            report.strict_witness = context + " " + specs[s].Name() + " " +
                                    std::to_string(sets[s].size()) + " < acc " +
                                    std::to_string(sets[0].size());
          }
        }
      }
      for (std::size_t kind = 0; kind < std::size(kTruncated); ++kind) {
        const std::string relation =
            "nesting " + std::string(KindName(kTruncated[kind])) + "@k";
        for (std::size_t k2 = 2; k2 <= n; ++k2) {
          for (std::size_t k1 = 1; k1 < k2; ++k1) {
            const auto result = CheckSubsumption(sets[truncated(kind, k2)],
                                                 sets[truncated(kind, k1)]);
            tallies.Record(relation, result.holds,
                           context + " k1=" + std::to_string(k1) +
                               " k2=" + std::to_string(k2) +
                               (result.witness
                                    ? " perm=" + result.witness->ToString()
                                    : ""));
          }
        }
      }
      for (std::size_t k = 1; k <= n; ++k) {
        tallies.Record("p@k = r@k",
                       sets[truncated(0, k)].permutations ==
                           sets[truncated(1, k)].permutations,
                       context + " k=" + std::to_string(k));
      }
      const std::set<double> unique(values.begin(), values.end());
      if (unique.size() == n) {
        tallies.Record("map = ndcg (distinct eta)",
                       sets[3].permutations == sets[2].permutations, context);
        tallies.Record("mrr = ndcg (distinct eta)",
                       sets[4].permutations == sets[2].permutations, context);
      }

      std::size_t pos = 0;
      while (pos < n && ++digits[pos] == levels.size()) digits[pos++] = 0;
      if (pos == n) break;
    }
  }
  report.relations = tallies.Take();
  return report;
}

bool BoundSweep::passed() const { return failures() == 0; }

std::size_t BoundSweep::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const BoundSweepRow& r) { return !r.verdict.passed(); }));
}

BoundSweep SweepBounds(std::span<const TransferDirection> directions,
                       std::size_t n_min, std::size_t n_max,
                       std::span<const double> margins) {
  if (n_max > kMaxPsiSize) throw CapacityError("bound sweep", n_max, kMaxPsiSize);
  n_min = std::max<std::size_t>(n_min, 3);
  constexpr MetricKind kTruncated[] = {MetricKind::kPrecisionAtK,
                                       MetricKind::kRecallAtK,
                                       MetricKind::kNdcg};
  BoundSweep sweep;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (std::size_t n_pos = 1; n_pos < n; ++n_pos) {
      const LabeledList labels = LabeledList::Sorted(n, n_pos);
      auto run = [&](const TransferBound& bound) {
        sweep.rows.push_back({n, n_pos, VerifyBound(bound, labels)});
      };
      for (TransferDirection direction : directions) {
        switch (direction) {
          case TransferDirection::kAucToNdcg:
            run(CoeffAucToNdcg(n_pos, n - n_pos));
            break;
          case TransferDirection::kNdcgToAuc:
            run(CoeffNdcgToAuc(n_pos, n - n_pos));
            break;
          case TransferDirection::kAucToAcc:
            for (double m : margins) run(CoeffAucToAcc(n_pos, n - n_pos, m));
            break;
          case TransferDirection::kNdcgToAcc:
            for (double m : margins) run(CoeffNdcgToAcc(n_pos, n - n_pos, m));
            break;
          case TransferDirection::kTruncation:
            for (MetricKind kind : kTruncated) {
              for (std::size_t k2 = 2; k2 <= n_pos; ++k2) {
                for (std::size_t k1 = 1; k1 < k2; ++k1) {
                  run(CoeffTruncation(k1, k2, kind, labels));
                }
              }
            }
            break;
          case TransferDirection::kTruncationReverse:
            for (MetricKind kind : kTruncated) {
              // P@n and R@n do not depend on the ordering.
              const std::size_t k2_max = kind == MetricKind::kNdcg ? n : n - 1;
              for (std::size_t k1 = 1; k1 < n_pos; ++k1) {
                for (std::size_t k2 = k1 + 1; k2 <= k2_max; ++k2) {
                  run(CoeffTruncation(k1, k2, kind, labels, true));
                }
              }
            }
            break;
        }
      }
    }
  }
  return sweep;
}

}  // namespace rankregret
