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

#include "hofnet/bow.hpp"
#include "hofnet/eval.hpp"
#include "hofnet/mnb.hpp"
#include "hofnet/ridge.hpp"
#include "hofnet/synthetic.hpp"

namespace {

struct Features {
  std::vector<hofnet::BowVector> xs;
  std::vector<hofnet::Label> ys;
  std::size_t vocab = 0;
};

const Features& features() {
  static const Features f = [] {
    hofnet::TrigramTaskConfig cfg;
    cfg.examples = 4000;
    cfg.seed = 1;
    const auto task = hofnet::generate_trigram_task(cfg);
    const auto vocab = hofnet::Vocabulary::build(std::vector<const hofnet::Dataset*>{&task.data}, 1);
    std::vector<hofnet::EncodedExample> enc;
    for (const auto& ex : task.data.examples()) enc.push_back(hofnet::encode(ex, vocab));
    const auto idf = hofnet::TfIdf::fit(enc, vocab.size());
    Features out;
    out.xs = hofnet::featurize_all(enc, vocab.size(), hofnet::BowScheme::TfIdf, &idf);
    for (const auto& e : enc) out.ys.push_back(*e.label);
    out.vocab = vocab.size();
    return out;
  }();
  return f;
}

void BM_MultinomialNBFit(benchmark::State& state) {
  const auto& f = features();
  for (auto _ : state) benchmark::DoNotOptimize(hofnet::MultinomialNB::fit(f.xs, f.ys, f.vocab, 1.0));
}
BENCHMARK(BM_MultinomialNBFit)->Unit(benchmark::kMillisecond);

void BM_RidgeFit(benchmark::State& state) {
  const auto& f = features();
  for (auto _ : state) benchmark::DoNotOptimize(hofnet::RidgeClassifier::fit(f.xs, f.ys, f.vocab, 0.01));
}
BENCHMARK(BM_RidgeFit)->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const hofnet::ConfusionMatrix cm({{{446, 159}, {80, 633}}});
  for (auto _ : state) benchmark::DoNotOptimize(hofnet::format_report(hofnet::report(cm), &cm));
}
BENCHMARK(BM_Report);

}  // namespace
