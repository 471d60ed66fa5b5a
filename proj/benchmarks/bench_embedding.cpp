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

#include "hofnet/embedding.hpp"
#include "hofnet/rng.hpp"
#include "hofnet/synthetic.hpp"

namespace {

void BM_TrainEmbeddingsEpoch(benchmark::State& state) {
  const auto sentences = hofnet::generate_clique_corpus(2000, 12, 1);
  const auto vocab = hofnet::Vocabulary::build(sentences, 1);
  std::vector<hofnet::EncodedExample> corpus;
  for (const auto& s : sentences) corpus.push_back(hofnet::encode(s, vocab));
  hofnet::EmbeddingConfig cfg;
  cfg.dim = static_cast<int>(state.range(0));
  cfg.epochs = 1;
  cfg.min_count = 1;
  cfg.objective = state.range(1) ? hofnet::Objective::SkipGram : hofnet::Objective::CBOW;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hofnet::train_embeddings(corpus, vocab.size(), cfg, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * 2000 * 12));
}
BENCHMARK(BM_TrainEmbeddingsEpoch)->Args({50, 0})->Args({200, 0})->Args({200, 1})->Unit(benchmark::kMillisecond);

void BM_WindowGradient(benchmark::State& state) {
  hofnet::EmbeddingMatrix m(1000, 200);
  hofnet::Rng rng(2);
  for (auto& v : m.input_values()) v = rng.uniform(-0.5, 0.5);
  for (auto& v : m.output_values()) v = rng.uniform(-0.5, 0.5);
  const hofnet::TrainingWindow w{{10, 11, 13, 14, 15, 16}, 12, {100, 200, 300, 400, 500}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hofnet::window_gradient(m, hofnet::Objective::CBOW, w));
  }
}
BENCHMARK(BM_WindowGradient);

}  // namespace
