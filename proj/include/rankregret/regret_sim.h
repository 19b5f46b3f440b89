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

// Regret-manifold simulation.
//
// A single ground truth eta ~ U[0.01, 0.99]^n is drawn per run. Each loss
// family has an error model that perturbs eta into scores, parameterized by a
// convergence level alpha in [0, 1] with scores == eta at alpha = 1. Every
// snapshot records relative regrets on Acc, AUC and NDCG.

#ifndef RANKREGRET_REGRET_SIM_H_
#define RANKREGRET_REGRET_SIM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rankregret/types.h"

namespace rankregret {

enum class LossKind { kPointwise, kPairwise, kListwise };

inline constexpr std::array<LossKind, 3> kAllLosses = {
    LossKind::kPointwise, LossKind::kPairwise, LossKind::kListwise};

std::string_view LossName(LossKind kind);
LossKind ParseLoss(std::string_view name);

enum class AlphaMode { kGrid, kRandom };

std::string_view AlphaModeName(AlphaMode mode);
AlphaMode ParseAlphaMode(std::string_view name);

// How AUC and NDCG regrets are measured against eta.
enum class RegretForm {
  // eta as graded relevance: expected correctly ordered pairs and DCG with
  // gain eta, relative to the eta-sorted order.
  kGraded,
  // Labels 1[eta > 0.5] with the binary AUC and NDCG.
  kBinarized,
};

std::string_view RegretFormName(RegretForm form);
RegretForm ParseRegretForm(std::string_view name);

struct ErrorModelParams {
  // Scale of the Gaussian noise used by the pairwise and listwise models.
  double noise_scale = 0.1;
  // Head swaps at alpha = 0 for the pairwise model, as a fraction of n.
  double swap_fraction = 0.02;
};

struct SimConfig {
  std::size_t n = 1000;
  std::size_t snapshots = 500;
  std::uint64_t seed = 20240501;
  std::vector<LossKind> losses{kAllLosses.begin(), kAllLosses.end()};
  AlphaMode alpha_mode = AlphaMode::kGrid;
  ErrorModelParams model;
  double threshold = 0.5;
  double log_base = 2.0;
  RegretForm regret_form = RegretForm::kGraded;

  // Throws InvalidArgumentError on out-of-range fields.
  void Validate() const;
};

// Seeded i.i.d. U[0.01, 0.99]. Throws InvalidArgumentError for n < 2.
RelevanceVector GenEta(std::size_t n, std::uint64_t seed);

// Pointwise: alpha * eta + (1 - alpha) * v with v uniform on the item's side
// of 0.5, so no score crosses the boundary.
// Pairwise: eta plus (1 - alpha) * noise_scale Gaussian noise, then the
// scores of eta-ranks (1, 2), (3, 4), ... are exchanged for
// ceil((1 - alpha) * ceil(swap_fraction * n)) pairs.
// Listwise: eta + (1 - alpha) * noise_scale * g_i / ln(i + 1) at 1-based
// eta-rank i.
ScoreVector ApplyErrorModel(const RelevanceVector& eta, LossKind kind,
                            double alpha, std::uint64_t seed,
                            const ErrorModelParams& params = {});

struct Snapshot {
  LossKind loss = LossKind::kPointwise;
  double alpha = 0.0;
  double r_acc = 0.0;
  // Absent when AUC is undefined (one class after binarization).
  std::optional<double> r_auc;
  double r_ndcg = 0.0;
};

// Relative regrets 1 - M(f) / M(Bayes). Acc compares 1[s > tau] with
// 1[eta > 0.5].
Snapshot SnapshotRegrets(const RelevanceVector& eta, const ScoreVector& scores,
                         double tau = 0.5, double log_base = 2.0,
                         RegretForm form = RegretForm::kGraded);

struct LossSummary {
  LossKind loss = LossKind::kPointwise;
  std::size_t count = 0;
  double mean_r_acc = 0.0;
  double mean_r_auc = 0.0;  // over snapshots with a defined AUC
  double mean_r_ndcg = 0.0;
  std::size_t auc_undefined = 0;
};

struct SimResult {
  SimConfig config;
  // Ordered by loss (config order), then snapshot index.
  std::vector<Snapshot> snapshots;
  std::vector<LossSummary> summary;
};

// Seed for snapshot `index` of `loss`, derived from the run seed.
std::uint64_t SnapshotSeed(std::uint64_t seed, LossKind loss,
                           std::size_t index);

SimResult RunSimulation(const SimConfig& config);

}  // namespace rankregret

#endif  // RANKREGRET_REGRET_SIM_H_
