// Copyright 2026 The hofnet Authors.
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

#include "hofnet/knn.hpp"

#include <algorithm>
#include <stdexcept>

namespace hofnet {

KnnClassifier::KnnClassifier(std::vector<BowVector> train, std::vector<Label> labels)
    : train_(std::move(train)), labels_(std::move(labels)) {
  if (train_.empty()) throw std::invalid_argument("kNN needs a nonempty training set");
  if (train_.size() != labels_.size()) throw std::invalid_argument("feature/label count mismatch");
  norms_.reserve(train_.size());
  for (const auto& v : train_) norms_.push_back(v.norm());
}

std::vector<KnnNeighbour> KnnClassifier::neighbours(const BowVector& x, int k) const {
  if (k < 1) throw std::invalid_argument("kNN k must be at least 1");
  const double xn = x.norm();
  std::vector<KnnNeighbour> all(train_.size());
  for (std::size_t i = 0; i < train_.size(); ++i) {
    const double denom = xn * norms_[i];
    all[i] = {i, denom > 0.0 ? x.dot(train_[i]) / denom : 0.0};
  }
  const std::size_t take = std::min(all.size(), static_cast<std::size_t>(k));
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take), all.end(),
                    [](const KnnNeighbour& a, const KnnNeighbour& b) {
                      if (a.similarity != b.similarity) return a.similarity > b.similarity;
                      return a.index < b.index;
                    });
  all.resize(take);
  return all;
}

Label KnnClassifier::predict(const BowVector& x, int k) const {
  std::size_t hof = 0, nots = 0;
  for (const auto& n : neighbours(x, k)) {
    (labels_[n.index] == Label::HOF ? hof : nots) += 1;
  }
  return hof >= nots ? Label::HOF : Label::NOT;
}

}  // namespace hofnet
