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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hofnet/preprocess.hpp"
#include "hofnet/rng.hpp"

namespace {

// Mixed Hinglish tweets with mentions, links, entities and elongations.
std::vector<std::string> make_tweets(std::size_t n) {
  static const char* const kParts[] = {
      "@someone", "RT", "https://t.co/abc123", "kya", "baat", "hai", "yaaaaar", "&amp;", "लड़कियाँ",
      "किताबें",  "#tag", "WOW!!!!!",          "😂😂😂", "nahi", "पानी",  "bilkul", "&lt;3",   "http://x.y/z"};
  hofnet::Rng rng(1);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string t;
    const std::size_t len = 8 + rng.below(16);
    for (std::size_t w = 0; w < len; ++w) {
      if (w) t += ' ';
      t += kParts[rng.below(std::size(kParts))];
    }
    out.push_back(std::move(t));
  }
  return out;
}

void BM_Preprocess(benchmark::State& state) {
  const auto tweets = make_tweets(256);
  const hofnet::Preprocessor pre;
  std::size_t bytes = 0;
  for (const auto& t : tweets) bytes += t.size();
  for (auto _ : state) {
    for (const auto& t : tweets) benchmark::DoNotOptimize(pre(t));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * tweets.size()));
}
BENCHMARK(BM_Preprocess);

void BM_PreprocessNoStem(benchmark::State& state) {
  const auto tweets = make_tweets(256);
  hofnet::PreprocessOptions opts;
  opts.stem = false;
  const hofnet::Preprocessor pre(hofnet::HindiStemmer::builtin(), opts);
  for (auto _ : state) {
    for (const auto& t : tweets) benchmark::DoNotOptimize(pre(t));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * tweets.size()));
}
BENCHMARK(BM_PreprocessNoStem);

}  // namespace
