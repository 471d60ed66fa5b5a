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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hofnet/corpus.hpp"

namespace hofnet {

// Planted-trigram classification task. Words are "w000".."w{V-1}"; the first
// 3 * patterns of them are reserved for the patterns and appear nowhere else.
// A positive tweet carries one or two planted trigrams in order; a negative
// may carry decoys: the words of one pattern in an order that shares no
// adjacent pair with it, or spread apart by filler. Classes alternate, so the
// split is exactly 50/50 before label noise.
struct TrigramTaskConfig {
  std::size_t examples = 2000;
  std::size_t vocab = 500;
  std::size_t patterns = 20;
  std::size_t min_len = 10;
  std::size_t max_len = 20;
  double decoy_rate = 0.5;    // chance that a negative carries decoys
  double label_noise = 0.0;   // chance of flipping each label
  double token_noise = 0.0;   // chance of replacing each token by a random word
  std::uint64_t seed = 0;

  void validate() const;
};

struct TrigramTask {
  Dataset data;
  std::vector<std::array<std::string, 3>> patterns;
};

TrigramTask generate_trigram_task(const TrigramTaskConfig& config);

// Two disjoint three-word cliques {a0,a1,a2} and {b0,b1,b2}. Each sentence
// draws `length` words from one clique, chosen at random.
std::vector<TokenStream> generate_clique_corpus(std::size_t sentences, std::size_t length,
                                                std::uint64_t seed);

}  // namespace hofnet
