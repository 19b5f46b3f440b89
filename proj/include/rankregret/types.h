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

// Value types shared by every module. All of them validate their invariants
// on construction and are immutable afterwards.

#ifndef RANKREGRET_TYPES_H_
#define RANKREGRET_TYPES_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rankregret {

// Binary relevance labels of one list, in item order.
class LabeledList {
 public:
  // Throws InvalidArgumentError on an empty list or an entry outside {0, 1}.
  explicit LabeledList(std::vector<int> labels);

  // Builds a list with `num_positive` ones followed by zeros.
  static LabeledList Sorted(std::size_t size, std::size_t num_positive);

  std::span<const int> labels() const { return labels_; }
  int operator[](std::size_t item) const { return labels_[item]; }
  std::size_t size() const { return labels_.size(); }
  std::size_t num_positive() const { return num_positive_; }
  std::size_t num_negative() const { return labels_.size() - num_positive_; }

  friend bool operator==(const LabeledList&, const LabeledList&) = default;

 private:
  std::vector<int> labels_;
  std::size_t num_positive_ = 0;
};

// Conditional relevance probabilities eta(x) of the items of one list.
class RelevanceVector {
 public:
  // Throws InvalidArgumentError on an empty vector or an entry outside [0, 1].
  explicit RelevanceVector(std::vector<double> eta);

  std::span<const double> values() const { return eta_; }
  double operator[](std::size_t item) const { return eta_[item]; }
  std::size_t size() const { return eta_.size(); }

  // Smallest distance of any entry from 0.5.
  double Margin() const;

  friend bool operator==(const RelevanceVector&,
                         const RelevanceVector&) = default;

 private:
  std::vector<double> eta_;
};

// Real-valued predictor output, one score per item.
class ScoreVector {
 public:
  // Throws InvalidArgumentError on a non-finite entry. Empty vectors are
  // representable; operations that need items reject them.
  explicit ScoreVector(std::vector<double> scores);

  std::span<const double> values() const { return scores_; }
  double operator[](std::size_t item) const { return scores_[item]; }
  std::size_t size() const { return scores_.size(); }
  bool empty() const { return scores_.empty(); }

 private:
  std::vector<double> scores_;
};

// A ranking: order()[r] is the (0-based) item placed at (0-based) rank r.
class Permutation {
 public:
  // Throws InvalidArgumentError unless `order` is a bijection on [0, n).
  explicit Permutation(std::vector<std::size_t> order);

  static Permutation Identity(std::size_t size);

  std::span<const std::size_t> order() const { return order_; }
  std::size_t operator[](std::size_t rank) const { return order_[rank]; }
  std::size_t size() const { return order_.size(); }

  // Rank of every item; the inverse permutation.
  std::vector<std::size_t> Ranks() const;

  // "(2 3 1)": 1-based item ids in rank order.
  std::string ToString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

}  // namespace rankregret

#endif  // RANKREGRET_TYPES_H_
