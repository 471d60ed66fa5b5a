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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hofnet/corpus.hpp"

namespace hofnet {

enum class BowScheme { Count, TfIdf };

// Sparse bag-of-words vector: (token id, weight) pairs sorted by id.
struct BowVector {
  std::vector<std::pair<std::int32_t, double>> entries;

  bool empty() const { return entries.empty(); }
  double norm() const;
  double dot(const BowVector& other) const;
};

// Inverse document frequencies fitted on a training collection:
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1
class TfIdf {
 public:
  static TfIdf fit(std::span<const EncodedExample> docs, std::size_t vocab_size);

  double idf(std::int32_t id) const { return idf_.at(static_cast<std::size_t>(id)); }
  std::size_t documents() const { return documents_; }

 private:
  std::vector<double> idf_;
  std::size_t documents_ = 0;
};

// Count: raw term counts. TfIdf: count * idf (requires `idf`).
BowVector featurize(const EncodedExample& example, std::size_t vocab_size, BowScheme scheme,
                    const TfIdf* idf = nullptr);

std::vector<BowVector> featurize_all(std::span<const EncodedExample> examples,
                                     std::size_t vocab_size, BowScheme scheme,
                                     const TfIdf* idf = nullptr);

}  // namespace hofnet
