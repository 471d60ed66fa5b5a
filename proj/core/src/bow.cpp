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

#include "hofnet/bow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hofnet/error.hpp"

namespace hofnet {

double BowVector::norm() const {
  double s = 0.0;
  for (const auto& [id, w] : entries) s += w * w;
  return std::sqrt(s);
}

double BowVector::dot(const BowVector& other) const {
  double s = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

TfIdf TfIdf::fit(std::span<const EncodedExample> docs, std::size_t vocab_size) {
  std::vector<std::size_t> df(vocab_size, 0);
  std::vector<std::size_t> last_seen(vocab_size, SIZE_MAX);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (auto id : docs[d].ids) {
      if (id < 0 || static_cast<std::size_t>(id) >= vocab_size) {
        throw ShapeError("token id outside vocabulary");
      }
      if (last_seen[id] != d) {
        last_seen[id] = d;
        ++df[id];
      }
    }
  }
  TfIdf t;
  t.documents_ = docs.size();
  t.idf_.resize(vocab_size);
  const double n = static_cast<double>(docs.size());
  for (std::size_t i = 0; i < vocab_size; ++i) {
    t.idf_[i] = std::log((1.0 + n) / (1.0 + static_cast<double>(df[i]))) + 1.0;
  }
  return t;
}

BowVector featurize(const EncodedExample& example, std::size_t vocab_size, BowScheme scheme,
                    const TfIdf* idf) {
  if (scheme == BowScheme::TfIdf && !idf) throw std::invalid_argument("TF-IDF needs fitted idf weights");
  std::map<std::int32_t, double> counts;
  for (auto id : example.ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= vocab_size) {
      throw ShapeError("token id " + std::to_string(id) + " outside vocabulary");
    }
    counts[id] += 1.0;
  }
  BowVector v;
  v.entries.reserve(counts.size());
  for (const auto& [id, c] : counts) {
    v.entries.emplace_back(id, scheme == BowScheme::TfIdf ? c * idf->idf(id) : c);
  }
  return v;
}

std::vector<BowVector> featurize_all(std::span<const EncodedExample> examples, std::size_t vocab_size,
                                     BowScheme scheme, const TfIdf* idf) {
  std::vector<BowVector> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) out.push_back(featurize(ex, vocab_size, scheme, idf));
  return out;
}

}  // namespace hofnet
