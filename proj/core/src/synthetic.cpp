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

#include "hofnet/synthetic.hpp"

#include <algorithm>
#include <cstdio>

#include "hofnet/error.hpp"
#include "hofnet/rng.hpp"

namespace hofnet {
namespace {

std::string word_name(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "w%03zu", i);
  return buf;
}

// Orders of (a, b, c) containing neither "a b" nor "b c".
constexpr std::array<std::array<int, 3>, 3> kDecoyOrders{{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};

}  // namespace

void TrigramTaskConfig::validate() const {
  if (patterns == 0) throw ConfigError("need at least one pattern");
  if (vocab <= 3 * patterns) throw ConfigError("vocabulary too small for the patterns");
  if (min_len < 8 || max_len < min_len) throw ConfigError("tweet lengths must satisfy 8 <= min <= max");
  auto rate = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!rate(decoy_rate) || !rate(label_noise) || !rate(token_noise)) {
    throw ConfigError("rates must be in [0, 1]");
  }
}

TrigramTask generate_trigram_task(const TrigramTaskConfig& config) {
  config.validate();
  Rng rng = Rng::derive(config.seed, "synthetic-trigram");
  Rng noise = Rng::derive(config.seed, "synthetic-noise");

  TrigramTask task;
  for (std::size_t p = 0; p < config.patterns; ++p) {
    task.patterns.push_back({word_name(3 * p), word_name(3 * p + 1), word_name(3 * p + 2)});
  }
  const std::size_t first_filler = 3 * config.patterns;
  const std::size_t fillers = config.vocab - first_filler;

  for (std::size_t n = 0; n < config.examples; ++n) {
    const bool positive = n % 2 == 0;
    const std::size_t len = config.min_len + rng.below(config.max_len - config.min_len + 1);
    TokenStream tokens(len);
    for (auto& t : tokens) t = word_name(first_filler + rng.below(fillers));

    const std::size_t planted = 1 + rng.below(2);
    const bool decoys = !positive && rng.bernoulli(config.decoy_rate);
    if (positive || decoys) {
      // Non-overlapping slots of width 3 (contiguous) or the whole tweet (spread).
      std::vector<std::size_t> starts;
      for (std::size_t s = 0; s + 3 <= len; s += 3) starts.push_back(s);
      rng.shuffle(std::span<std::size_t>(starts));
      for (std::size_t k = 0; k < planted && k < starts.size(); ++k) {
        const auto& pat = task.patterns[rng.below(config.patterns)];
        if (positive) {
          for (int j = 0; j < 3; ++j) tokens[starts[k] + j] = pat[j];
        } else if (rng.bernoulli(0.5)) {
          const auto& order = kDecoyOrders[rng.below(kDecoyOrders.size())];
          for (int j = 0; j < 3; ++j) tokens[starts[k] + j] = pat[order[j]];
        } else {
          // Spread: the words in pattern order but separated by one filler.
          const std::size_t s = rng.below(len - 4);
          tokens[s] = pat[0];
          tokens[s + 2] = pat[1];
          tokens[s + 4] = pat[2];
        }
      }
    }

    for (auto& t : tokens) {
      if (config.token_noise > 0.0 && noise.bernoulli(config.token_noise)) {
        t = word_name(noise.below(config.vocab));
      }
    }
    Label label = positive ? Label::HOF : Label::NOT;
    if (config.label_noise > 0.0 && noise.bernoulli(config.label_noise)) {
      label = positive ? Label::NOT : Label::HOF;
    }
    char id[24];
    std::snprintf(id, sizeof id, "syn%05zu", n);
    task.data.add(Example{id, std::move(tokens), label});
  }
  return task;
}

std::vector<TokenStream> generate_clique_corpus(std::size_t sentences, std::size_t length,
                                                std::uint64_t seed) {
  static const std::array<std::array<const char*, 3>, 2> kCliques{
      {{"a0", "a1", "a2"}, {"b0", "b1", "b2"}}};
  Rng rng = Rng::derive(seed, "synthetic-cliques");
  std::vector<TokenStream> out;
  out.reserve(sentences);
  for (std::size_t s = 0; s < sentences; ++s) {
    const auto& clique = kCliques[rng.below(2)];
    TokenStream t;
    for (std::size_t i = 0; i < length; ++i) t.emplace_back(clique[rng.below(3)]);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hofnet
