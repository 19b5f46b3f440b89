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

#include "rankregret/regret_sim.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "rankregret/errors.h"
#include "rankregret/metrics.h"

namespace rankregret {
namespace {

constexpr double kEtaLow = 0.01;
constexpr double kEtaHigh = 0.99;

double RelativeRegret(double value, double ideal) {
  return std::max(0.0, 1.0 - value / ideal);
}

std::size_t SwapCount(std::size_t n, double alpha, double swap_fraction) {
  const double at_zero = std::ceil(swap_fraction * static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil((1.0 - alpha) * at_zero));
}

}  // namespace

std::string_view LossName(LossKind kind) {
  switch (kind) {
    case LossKind::kPointwise: return "pointwise";
    case LossKind::kPairwise: return "pairwise";
    case LossKind::kListwise: return "listwise";
  }
  return "?";
}

LossKind ParseLoss(std::string_view name) {
  for (LossKind kind : kAllLosses) {
    if (LossName(kind) == name) return kind;
  }
  throw InvalidArgumentError("unknown loss '" + std::string(name) + "'");
}

std::string_view AlphaModeName(AlphaMode mode) {
  return mode == AlphaMode::kGrid ? "grid" : "random";
}

AlphaMode ParseAlphaMode(std::string_view name) {
  if (name == "grid") return AlphaMode::kGrid;
  if (name == "random") return AlphaMode::kRandom;
  throw InvalidArgumentError("unknown alpha mode '" + std::string(name) + "'");
}

std::string_view RegretFormName(RegretForm form) {
  return form == RegretForm::kGraded ? "graded" : "binarized";
}

RegretForm ParseRegretForm(std::string_view name) {
  if (name == "graded") return RegretForm::kGraded;
  if (name == "binarized") return RegretForm::kBinarized;
  throw InvalidArgumentError("unknown regret form '" + std::string(name) + "'");
}

void SimConfig::Validate() const {
  if (n < 2) throw InvalidArgumentError("n must be >= 2");
  if (snapshots < 1) throw InvalidArgumentError("snapshots must be >= 1");
  if (losses.empty()) throw InvalidArgumentError("no loss kinds selected");
  if (!(model.noise_scale >= 0.0) || !std::isfinite(model.noise_scale)) {
    throw InvalidArgumentError("noise_scale must be finite and >= 0");
  }
  if (!(model.swap_fraction >= 0.0 && model.swap_fraction <= 0.5)) {
    throw InvalidArgumentError("swap_fraction must lie in [0, 0.5]");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw InvalidArgumentError("threshold must lie in (0, 1)");
  }
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw InvalidArgumentError("log_base must be finite and > 1");
  }
}

RelevanceVector GenEta(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InvalidArgumentError("n must be >= 2");
  std::seed_seq seq{seed};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uniform(kEtaLow, kEtaHigh);
  std::vector<double> eta(n);
  for (double& e : eta) e = uniform(rng);
  return RelevanceVector(std::move(eta));
}

ScoreVector ApplyErrorModel(const RelevanceVector& eta, LossKind kind,
                            double alpha, std::uint64_t seed,
                            const ErrorModelParams& params) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgumentError("alpha must lie in [0, 1]");
  }
  const std::size_t n = eta.size();
  std::seed_seq seq{seed};
  std::mt19937_64 rng(seq);
  std::vector<double> scores(n);
  const double spread = 1.0 - alpha;

  switch (kind) {
    case LossKind::kPointwise: {
      std::uniform_real_distribution<double> above(
          std::nextafter(0.5, 1.0), kEtaHigh);
      std::uniform_real_distribution<double> below(kEtaLow, 0.5);
      for (std::size_t i = 0; i < n; ++i) {
        const double v = eta[i] > 0.5 ? above(rng) : below(rng);
        scores[i] = alpha * eta[i] + spread * v;
      }
      break;
    }
    case LossKind::kPairwise: {
      std::normal_distribution<double> gauss;
      for (std::size_t i = 0; i < n; ++i) {
        scores[i] = eta[i] + spread * params.noise_scale * gauss(rng);
      }
      const Permutation order = BayesOrder(eta);
      const std::size_t swaps =
          std::min(SwapCount(n, alpha, params.swap_fraction), n / 2);
      for (std::size_t j = 0; j < swaps; ++j) {
        std::swap(scores[order[2 * j]], scores[order[2 * j + 1]]);
      }
      break;
    }
    case LossKind::kListwise: {
      std::normal_distribution<double> gauss;
      const Permutation order = BayesOrder(eta);
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t item = order[r];
        const double damping = std::log(static_cast<double>(r + 2));
        scores[item] =
            eta[item] + spread * params.noise_scale * gauss(rng) / damping;
      }
      break;
    }
  }
  return ScoreVector(std::move(scores));
}

Snapshot SnapshotRegrets(const RelevanceVector& eta, const ScoreVector& scores,
                         double tau, double log_base, RegretForm form) {
  if (eta.size() != scores.size()) {
    throw InvalidArgumentError("eta and scores lengths differ");
  }
  const LabeledList labels = BayesLabels(eta);
  const Permutation perm = RankByScores(scores);
  Snapshot snap;
  snap.r_acc = MetricRegret(MetricSpec::Acc(tau), labels, scores).regret_rel;

  if (form == RegretForm::kGraded) {
    try {
      snap.r_auc = RelativeRegret(GradedAuc(eta, perm),
                                  GradedAuc(eta, BayesOrder(eta)));
    } catch (const UndefinedMetricError&) {
      snap.r_auc.reset();
    }
    try {
      snap.r_ndcg = std::max(0.0, 1.0 - GradedNdcg(eta, perm, log_base));
    } catch (const UndefinedMetricError&) {
      snap.r_ndcg = 0.0;
    }
    return snap;
  }

  try {
    snap.r_auc = MetricRegret(MetricSpec::Auc(), labels, perm).regret_rel;
  } catch (const UndefinedMetricError&) {
    snap.r_auc.reset();
  }
  try {
    snap.r_ndcg =
        MetricRegret(MetricSpec::Ndcg(std::nullopt, log_base), labels, perm)
            .regret_rel;
  } catch (const UndefinedMetricError&) {
    // No positives: every ordering is equally good.
    snap.r_ndcg = 0.0;
  }
  return snap;
}

std::uint64_t SnapshotSeed(std::uint64_t seed, LossKind loss,
                           std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(loss),
                    static_cast<std::uint32_t>(index)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

SimResult RunSimulation(const SimConfig& config) {
  config.Validate();
  SimResult result;
  result.config = config;
  const RelevanceVector eta = GenEta(config.n, config.seed);
  result.snapshots.reserve(config.losses.size() * config.snapshots);

  for (LossKind loss : config.losses) {
    LossSummary summary;
    summary.loss = loss;
    for (std::size_t i = 0; i < config.snapshots; ++i) {
      const std::uint64_t seed = SnapshotSeed(config.seed, loss, i);
      double alpha = 0.0;
      if (config.alpha_mode == AlphaMode::kGrid) {
        alpha = config.snapshots == 1
                    ? 0.0
                    : static_cast<double>(i) /
                          static_cast<double>(config.snapshots - 1);
      } else {
        std::mt19937_64 alpha_rng(~seed);
        alpha = std::uniform_real_distribution<double>(0.0, 1.0)(alpha_rng);
      }
      const ScoreVector scores =
          ApplyErrorModel(eta, loss, alpha, seed, config.model);
      Snapshot snap = SnapshotRegrets(eta, scores, config.threshold,
                                      config.log_base, config.regret_form);
      snap.loss = loss;
      snap.alpha = alpha;

      ++summary.count;
      summary.mean_r_acc += snap.r_acc;
      summary.mean_r_ndcg += snap.r_ndcg;
      if (snap.r_auc) {
        summary.mean_r_auc += *snap.r_auc;
      } else {
        ++summary.auc_undefined;
      }
      result.snapshots.push_back(snap);
    }
    const double count = static_cast<double>(summary.count);
    summary.mean_r_acc /= count;
    summary.mean_r_ndcg /= count;
    const std::size_t defined = summary.count - summary.auc_undefined;
    summary.mean_r_auc =
        defined > 0 ? summary.mean_r_auc / static_cast<double>(defined)
                    : std::numeric_limits<double>::quiet_NaN();
    result.summary.push_back(summary);
  }
  return result;
}

}  // namespace rankregret
