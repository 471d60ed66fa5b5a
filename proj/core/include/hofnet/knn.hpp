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

#pragma once

#include <span>
#include <vector>

#include "hofnet/bow.hpp"
#include "hofnet/types.hpp"

namespace hofnet {

struct KnnNeighbour {
  std::size_t index;
  double similarity;
};

// Cosine k-nearest-neighbour classifier. A zero vector has similarity 0 to
// everything. Similarity ties are broken by training index; vote ties go to
// HOF.
class KnnClassifier {
 public:
  // Throws std::invalid_argument on an empty training set or size mismatch.
  KnnClassifier(std::vector<BowVector> train, std::vector<Label> labels);

  // The min(k, N) most similar training points, best first.
  std::vector<KnnNeighbour> neighbours(const BowVector& x, int k) const;
  // Throws std::invalid_argument if k < 1.
  Label predict(const BowVector& x, int k) const;

  std::size_t size() const { return train_.size(); }

 private:
  std::vector<BowVector> train_;
  std::vector<Label> labels_;
  std::vector<double> norms_;
};

}  // namespace hofnet
