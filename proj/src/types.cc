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

#include "rankregret/types.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rankregret/errors.h"

namespace rankregret {

LabeledList::LabeledList(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InvalidArgumentError("label list must not be empty");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != 0 && labels_[i] != 1) {
      throw InvalidArgumentError("label at item " + std::to_string(i + 1) +
                                 " is " + std::to_string(labels_[i]) +
                                 ", expected 0 or 1");
    }
    num_positive_ += static_cast<std::size_t>(labels_[i]);
  }
}

LabeledList LabeledList::Sorted(std::size_t size, std::size_t num_positive) {
  if (num_positive > size) {
    throw InvalidArgumentError("more positives than items");
  }
  std::vector<int> labels(size, 0);
  std::fill_n(labels.begin(), num_positive, 1);
  return LabeledList(std::move(labels));
}

RelevanceVector::RelevanceVector(std::vector<double> eta)
    : eta_(std::move(eta)) {
  if (eta_.empty()) {
    throw InvalidArgumentError("relevance vector must not be empty");
  }
  for (std::size_t i = 0; i < eta_.size(); ++i) {
    if (!(eta_[i] >= 0.0 && eta_[i] <= 1.0)) {
      throw InvalidArgumentError("eta at item " + std::to_string(i + 1) +
                                 " is outside [0, 1]");
    }
  }
}

double RelevanceVector::Margin() const {
  double margin = std::numeric_limits<double>::infinity();
  for (double e : eta_) margin = std::min(margin, std::abs(e - 0.5));
  return margin;
}

ScoreVector::ScoreVector(std::vector<double> scores)
    : scores_(std::move(scores)) {
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    if (!std::isfinite(scores_[i])) {
      throw InvalidArgumentError("score at item " + std::to_string(i + 1) +
                                 " is not finite");
    }
  }
}

Permutation::Permutation(std::vector<std::size_t> order)
    : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t item : order_) {
    if (item >= order_.size() || seen[item]) {
      throw InvalidArgumentError("order is not a permutation of 1.." +
                                 std::to_string(order_.size()));
    }
    seen[item] = true;
  }
}

Permutation Permutation::Identity(std::size_t size) {
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

std::vector<std::size_t> Permutation::Ranks() const {
  std::vector<std::size_t> ranks(order_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) ranks[order_[r]] = r;
  return ranks;
}

std::string Permutation::ToString() const {
  std::string out = "(";
  for (std::size_t r = 0; r < order_.size(); ++r) {
    if (r > 0) out += ' ';
    out += std::to_string(order_[r] + 1);
  }
  return out + ")";
}

}  // namespace rankregret
